#include "sosrank/macaulay.hpp"

#include <stdexcept>

namespace sosrank {

Int binomial(const Int& n, const Int& k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    Int kk = k;
    if (kk > n - kk) kk = n - kk;
    Int result = 1;
    for (Int i = 0; i < kk; ++i) {
        result *= n - i;
        result /= i + 1;  // exact: product of j consecutive integers is divisible by j!
    }
    return result;
}

Int MacaulayRep::value() const {
    Int sum = 0;
    for (const auto& [k, i] : terms) sum += binomial(k, i);
    return sum;
}

Int MacaulayRep::growth() const {
    Int sum = 0;
    for (const auto& [k, i] : terms) sum += binomial(k + 1, i + 1);
    return sum;
}

namespace {

// Largest k with C(k, i) <= target, assuming target >= 1 and i >= 1.
// Galloping search keeps this cheap even for large targets.
Int max_k_with_binomial_at_most(const Int& target, int i) {
    Int lo = i;  // C(i, i) = 1 <= target
    Int hi = lo + 1;
    while (binomial(hi, i) <= target) {
        lo = hi;
        hi *= 2;
    }
    while (lo + 1 < hi) {
        Int mid = (lo + hi) / 2;
        if (binomial(mid, i) <= target)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

MacaulayRep macaulay_representation(const Int& c, int nu) {
    if (c < 1) throw std::invalid_argument("macaulay_representation: c must be positive");
    if (nu < 1) throw std::invalid_argument("macaulay_representation: nu must be positive");
    MacaulayRep rep;
    Int rem = c;
    for (int i = nu; i >= 1 && rem > 0; --i) {
        Int k = max_k_with_binomial_at_most(rem, i);
        rep.terms.emplace_back(k, i);
        rem -= binomial(k, i);
    }
    // The greedy choice always terminates with rem = 0 (at i = 1 the maximal
    // term is C(rem, 1) = rem) and produces strictly descending k_i.
    return rep;
}

Int macaulay_growth(const Int& c, int nu) {
    if (c < 0) throw std::invalid_argument("macaulay_growth: c must be nonnegative");
    if (nu < 1) throw std::invalid_argument("macaulay_growth: nu must be positive");
    if (c == 0) return 0;
    return macaulay_representation(c, nu).growth();
}

Int macaulay_function(int n, int dm1, const Int& k) {
    if (n < 1) throw std::invalid_argument("macaulay_function: n must be positive");
    if (dm1 < 1) throw std::invalid_argument("macaulay_function: generator degree must be positive");
    const int d = dm1 + 1;
    const Int monomials_dm1 = binomial(dm1 + n - 1, dm1);
    if (k < 0 || k > monomials_dm1)
        throw std::invalid_argument("macaulay_function: k exceeds the degree-(d-1) monomial count");
    const Int monomials_d = binomial(d + n - 1, d);
    return monomials_d - macaulay_growth(monomials_dm1 - k, dm1);
}

Int macaulay_small_k(int n, const Int& k) {
    if (k < 0 || k > n) throw std::invalid_argument("macaulay_small_k: need 0 <= k <= n");
    return n * k - k * (k - 1) / 2;
}

Int macaulay_n_minus_j(int n, int j) {
    if (j < 0 || j > n) throw std::invalid_argument("macaulay_n_minus_j: need 0 <= j <= n");
    return Int(n) * (n + 1) / 2 - Int(j) * (j + 1) / 2;
}

Int macaulay_n_plus_j(int n, int j) {
    if (j < 0 || j > n - 1) throw std::invalid_argument("macaulay_n_plus_j: need 0 <= j <= n-1");
    return Int(n) * (n + 1) / 2 + Int(n) * j - Int(j) * (j + 1) / 2;
}

int k_zero(int n) {
    if (n < 2) throw std::invalid_argument("k_zero: n must be at least 2");
    int k = 0;
    while ((k + 1) * (k + 2) / 2 < n - 1) ++k;
    return k;
}

}  // namespace sosrank
