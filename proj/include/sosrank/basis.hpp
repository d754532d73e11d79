#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sosrank/multiindex.hpp"

namespace sosrank {

/// Indexed multiplication table between the degree-(d-1) and degree-d
/// monomial bases for a fixed variable count. Monomial sets at both levels
/// are manipulated as bitmasks over the canonical order, so graded pieces,
/// containment and node counts reduce to mask arithmetic during sweeps.
/// Both bases must fit in 64 bits, which covers every desk-scale degree.
struct ProductBasis {
    int vars = 0;
    int degree = 0;  // d-1
    std::vector<MultiIndex> lo;  // canonical degree-(d-1) basis
    std::vector<MultiIndex> hi;  // canonical degree-d basis

    // up[i][j]: hi index of lo[i] + e_j; up_mask[i]: the same as a bitmask.
    std::vector<std::vector<int>> up;
    std::vector<std::uint64_t> up_mask;
    // down[A]: the (lo index, variable) pairs with lo + e_var = hi[A].
    std::vector<std::vector<std::pair<int, int>>> down;
    // adjacency[i]: lo indices sharing a degree-d product with lo[i]
    // (the Newton-diagram edge relation).
    std::vector<std::uint64_t> adjacency;
    // lo_var_zero[j]: lo monomials whose j-th exponent vanishes.
    std::vector<std::uint64_t> lo_var_zero;

    int lo_index(const MultiIndex& m) const;
    int hi_index(const MultiIndex& m) const;

    /// Shared, lazily built table for (vars, degree). Thread-safe.
    static const ProductBasis& get(int vars, int degree);
};

}  // namespace sosrank
