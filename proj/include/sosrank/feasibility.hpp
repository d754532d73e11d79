#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sosrank/basis.hpp"
#include "sosrank/form.hpp"
#include "sosrank/numbers.hpp"

namespace sosrank {

/// Certificate that a support pattern admits a squared-norm realization:
/// strictly positive magnitudes together with the resulting coefficients
/// of sq, all nonnegative. The certificate values are recomputable from
/// the magnitudes alone.
struct FeasibilityWitness {
    std::map<MultiIndex, Rat> magnitudes;
    std::map<MultiIndex, Rat> product_coefficients;
};

/// Decides whether positive magnitudes exist making every coefficient of
/// s*q nonnegative (the diagonal squared-norm condition). The graded
/// containment (I_g)_d in (I_f)_d is applied as a necessary pre-filter;
/// when it passes, an exact LP (with the strict inequalities normalized to
/// magnitude >= 1 by scale invariance) produces the witness.
std::optional<FeasibilityWitness> squared_norm_feasible(const SupportPattern& pattern);

struct MinRankOptions {
    /// Enumeration budget: the ambiguous set (monomials of (I_g)_d) may not
    /// exceed this size.
    int ambiguous_cap = 21;
    /// Audit mode: enumerate candidate zero sets in reversed order. The
    /// result must not change.
    bool reversed_enumeration = false;
};

struct MinRankResult {
    enum class Status { Infeasible, Computed, BudgetExceeded };
    Status status = Status::Infeasible;
    long long value = 0;
    std::optional<FeasibilityWitness> witness;  // magnitudes attaining the minimum

    bool feasible() const { return status == Status::Computed; }
};

/// Minimum of rank(s * realize(pattern, m)) over all feasible magnitude
/// choices m. Monomials of (I_{f+g})_d outside (I_g)_d are forced nonzero;
/// for the ambiguous set, candidate zero sets are enumerated by decreasing
/// size with memoized infeasibility pruning (a superset of an infeasible
/// equality system is infeasible), testing each with the exact LP.
MinRankResult min_rank(const SupportPattern& pattern, const MinRankOptions& options = {});

/// Verdict of the rank-window statement: rho is admissible when
/// rho >= M(k0+1) or M(k) <= rho <= nk for some 0 <= k <= k0.
struct WindowVerdict {
    bool consistent = false;
    int window_k = -1;        // window index, or -1 when rho >= M(k0+1)
    long long threshold = 0;  // M(k0+1)
    std::string gap;          // human-readable gap description when violated
};

WindowVerdict sos_window_verdict(int n, long long rho);

namespace detail {

/// Bitmask view of a pattern against a shared ProductBasis. pos/neg are
/// masks over the degree-(d-1) basis; f_d/g_d/u_d the graded pieces of
/// I_f, I_g, I_{f+g} as masks over the degree-d basis.
struct MaskPattern {
    const ProductBasis* basis = nullptr;
    std::uint64_t pos = 0, neg = 0;
    std::uint64_t f_d = 0, g_d = 0, u_d = 0;
};

MaskPattern make_mask_pattern(const ProductBasis& basis, std::uint64_t pos, std::uint64_t neg);
MaskPattern index_pattern(const SupportPattern& pattern);
SupportPattern to_support_pattern(const MaskPattern& mp);

inline bool containment_holds(const MaskPattern& mp) { return (mp.g_d & ~mp.f_d) == 0; }

/// #(sq) on the mask view.
long long node_count_masks(const MaskPattern& mp);

/// Exact LP over shifted magnitudes: coefficient of hi[A] equal to zero for
/// A in zero_mask, nonnegative elsewhere. Returns magnitudes (pattern order:
/// pos ascending then neg ascending) or nullopt when infeasible.
std::optional<std::vector<Rat>> solve_sign_lp(const MaskPattern& mp, std::uint64_t zero_mask);

struct MaskMinRank {
    MinRankResult::Status status = MinRankResult::Status::Infeasible;
    long long value = 0;
    std::uint64_t zero_mask = 0;
    std::vector<Rat> magnitudes;  // pattern order, empty when not applicable
};

MaskMinRank min_rank_masks(const MaskPattern& mp, int ambiguous_cap, bool reversed);

}  // namespace detail

}  // namespace sosrank
