#pragma once

#include <stdexcept>

namespace sosrank {

struct DisconnectedDiagramError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sosrank
