#pragma once

#include <vector>

#include "sosrank/numbers.hpp"

namespace sosrank {

enum class Rel { Eq, Ge, Le };

/// One linear constraint: coeffs . x (rel) rhs, over variables x >= 0.
struct LpRow {
    std::vector<Rat> coeffs;
    Rel rel = Rel::Ge;
    Rat rhs = 0;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat objective = 0;
    std::vector<Rat> x;
};

/// Exact two-phase tableau simplex over the rationals, Bland's rule for
/// both the entering and leaving variable (no cycling, no tolerances,
/// fully deterministic). All structural variables are implicitly >= 0;
/// callers shift any variable with a different lower bound.
LpResult solve_lp(int num_vars, const std::vector<LpRow>& rows, const std::vector<Rat>& objective);

/// Feasibility-only solve (zero objective).
LpResult lp_feasible(int num_vars, const std::vector<LpRow>& rows);

}  // namespace sosrank
