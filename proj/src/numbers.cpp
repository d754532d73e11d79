#include "sosrank/numbers.hpp"

#include <cstddef>
#include <utility>

namespace sosrank {

int exact_rank(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    int rank = 0;
    Int prev_pivot = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            // Bareiss step: exact division by the previous pivot keeps
            // entries integral and small.
            for (std::size_t j = col + 1; j < cols; ++j) {
                m[i][j] = (m[row][col] * m[i][j] - m[i][col] * m[row][j]) / prev_pivot;
            }
            m[i][col] = 0;
        }
        prev_pivot = m[row][col];
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace sosrank
