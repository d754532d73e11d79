#pragma once

#include <utility>
#include <vector>

#include "sosrank/numbers.hpp"

namespace sosrank {

/// Exact binomial coefficient; 0 when k < 0 or k > n. Throws on n < 0.
Int binomial(const Int& n, const Int& k);

/// The nu-th Macaulay representation of a positive integer c:
/// c = C(k_nu, nu) + C(k_{nu-1}, nu-1) + ... + C(k_J, J) with
/// k_nu > k_{nu-1} > ... > k_J >= J > 0. Terms are stored as (k_i, i)
/// pairs with i descending.
struct MacaulayRep {
    std::vector<std::pair<Int, int>> terms;

    /// Reconstructs the represented integer.
    Int value() const;
    /// The growth value: each C(k_i, i) bumped to C(k_i + 1, i + 1).
    Int growth() const;
};

/// Greedy construction of the unique representation. Throws
/// std::invalid_argument when c < 1 or nu < 1.
MacaulayRep macaulay_representation(const Int& c, int nu);

/// c^{<nu>}. Defined as 0 when c = 0 (empty representation); the positive
/// case follows the representation above. Throws when nu < 1 or c < 0.
Int macaulay_growth(const Int& c, int nu);

/// The Macaulay function M_{n,d-1}(k): the sharp lower bound for H_I(d)
/// over ideals with k generators in degree d-1 in n variables,
///   M(k) = C(d+n-1, d) - (C(d-2+n, d-1) - k)^{<d-1>},  d = dm1 + 1.
/// Throws unless 0 <= k <= C(dm1+n-1, dm1).
Int macaulay_function(int n, int dm1, const Int& k);

/// Closed form for M(k) when 0 <= k <= n: nk - k(k-1)/2.
Int macaulay_small_k(int n, const Int& k);
/// Closed form for M(n-j) when 0 <= j <= n: n(n+1)/2 - j(j+1)/2.
Int macaulay_n_minus_j(int n, int j);
/// Closed form for M(n+j) when 0 <= j <= n-1: n(n+1)/2 + nj - j(j+1)/2.
Int macaulay_n_plus_j(int n, int j);

/// Largest k with k(k+1)/2 < n-1. Throws when n < 2.
int k_zero(int n);

}  // namespace sosrank
