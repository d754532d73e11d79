#include "sosrank/feasibility.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "sosrank/macaulay.hpp"
#include "sosrank/simplex.hpp"

namespace sosrank {

namespace detail {

MaskPattern make_mask_pattern(const ProductBasis& basis, std::uint64_t pos, std::uint64_t neg) {
    if (pos & neg) throw std::invalid_argument("make_mask_pattern: overlapping supports");
    MaskPattern mp;
    mp.basis = &basis;
    mp.pos = pos;
    mp.neg = neg;
    for (std::uint64_t bits = pos; bits;) {
        const int i = std::countr_zero(bits);
        bits &= bits - 1;
        mp.f_d |= basis.up_mask[static_cast<std::size_t>(i)];
    }
    for (std::uint64_t bits = neg; bits;) {
        const int i = std::countr_zero(bits);
        bits &= bits - 1;
        mp.g_d |= basis.up_mask[static_cast<std::size_t>(i)];
    }
    mp.u_d = mp.f_d | mp.g_d;
    return mp;
}

MaskPattern index_pattern(const SupportPattern& pattern) {
    const auto& basis = ProductBasis::get(pattern.vars(), pattern.degree());
    std::uint64_t pos = 0, neg = 0;
    for (const auto& m : pattern.pos()) pos |= 1ull << basis.lo_index(m);
    for (const auto& m : pattern.neg()) neg |= 1ull << basis.lo_index(m);
    return make_mask_pattern(basis, pos, neg);
}

SupportPattern to_support_pattern(const MaskPattern& mp) {
    std::vector<MultiIndex> pos, neg;
    for (std::uint64_t bits = mp.pos; bits;) {
        const int i = std::countr_zero(bits);
        bits &= bits - 1;
        pos.push_back(mp.basis->lo[static_cast<std::size_t>(i)]);
    }
    for (std::uint64_t bits = mp.neg; bits;) {
        const int i = std::countr_zero(bits);
        bits &= bits - 1;
        neg.push_back(mp.basis->lo[static_cast<std::size_t>(i)]);
    }
    return SupportPattern(mp.basis->vars, mp.basis->degree, std::move(pos), std::move(neg));
}

long long node_count_masks(const MaskPattern& mp) {
    return 2ll * std::popcount(mp.u_d) - std::popcount(mp.f_d) - std::popcount(mp.g_d);
}

std::optional<std::vector<Rat>> solve_sign_lp(const MaskPattern& mp, std::uint64_t zero_mask) {
    // Variables are the shifted magnitudes u' with |c| = 1 + u' >= 1; the
    // uniform slack makes the strict sign constraints closed and is lossless
    // by scale invariance. One row per monomial of (I_g)_d; monomials
    // outside it have nonnegative coefficients automatically.
    const ProductBasis& basis = *mp.basis;
    std::vector<int> slot(basis.lo.size(), -1);
    int nv = 0;
    for (std::uint64_t bits = mp.pos | mp.neg; bits;) {
        const int i = std::countr_zero(bits);
        bits &= bits - 1;
        slot[static_cast<std::size_t>(i)] = nv++;
    }

    std::vector<LpRow> rows;
    for (std::uint64_t bits = mp.g_d; bits;) {
        const int a = std::countr_zero(bits);
        bits &= bits - 1;
        LpRow row;
        row.coeffs.assign(static_cast<std::size_t>(nv), 0);
        int npos = 0, nneg = 0;
        for (const auto& [lo, var] : basis.down[static_cast<std::size_t>(a)]) {
            const std::uint64_t bit = 1ull << lo;
            if (mp.pos & bit) {
                row.coeffs[static_cast<std::size_t>(slot[static_cast<std::size_t>(lo)])] += 1;
                ++npos;
            } else if (mp.neg & bit) {
                row.coeffs[static_cast<std::size_t>(slot[static_cast<std::size_t>(lo)])] -= 1;
                ++nneg;
            }
        }
        row.rhs = nneg - npos;
        row.rel = (zero_mask >> a) & 1 ? Rel::Eq : Rel::Ge;
        rows.push_back(std::move(row));
    }

    const auto res = lp_feasible(nv, rows);
    if (res.status != LpStatus::Optimal) return std::nullopt;
    std::vector<Rat> magnitudes(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v) magnitudes[static_cast<std::size_t>(v)] = 1 + res.x[static_cast<std::size_t>(v)];
    return magnitudes;
}

namespace {

// Removes elements while the equality system stays infeasible, yielding a
// minimal infeasible core; every recorded core prunes all its supersets.
std::uint64_t shrink_to_core(const MaskPattern& mp, std::uint64_t zmask) {
    for (std::uint64_t bits = zmask; bits;) {
        const int a = std::countr_zero(bits);
        bits &= bits - 1;
        const std::uint64_t without = zmask & ~(1ull << a);
        if (without && !solve_sign_lp(mp, without)) zmask = without;
    }
    return zmask;
}

template <typename Fn>
bool for_each_combination(int n, int s, Fn&& fn) {
    std::vector<int> c(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) c[static_cast<std::size_t>(i)] = i;
    for (;;) {
        if (fn(c)) return true;
        int i = s - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - s + i) --i;
        if (i < 0) return false;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < s; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
}

std::vector<Rat> all_ones(int count) { return std::vector<Rat>(static_cast<std::size_t>(count), 1); }

}  // namespace

MaskMinRank min_rank_masks(const MaskPattern& mp, int ambiguous_cap, bool reversed) {
    MaskMinRank out;
    const int p_count = std::popcount(mp.pos);
    const int n_count = std::popcount(mp.neg);
    if (p_count == 0 && n_count == 0) {
        out.status = MinRankResult::Status::Computed;
        out.value = 0;
        return out;
    }
    if (p_count == 0 || !containment_holds(mp)) return out;  // infeasible
    if (n_count == 0) {
        // All coefficients positive for every magnitude choice.
        out.status = MinRankResult::Status::Computed;
        out.value = std::popcount(mp.f_d);
        out.magnitudes = all_ones(p_count);
        return out;
    }

    std::vector<int> ambiguous;
    for (std::uint64_t bits = mp.g_d; bits;) {
        ambiguous.push_back(std::countr_zero(bits));
        bits &= bits - 1;
    }
    const int m = static_cast<int>(ambiguous.size());
    const long long forced = std::popcount(mp.u_d) - m;
    if (m > ambiguous_cap) {
        out.status = MinRankResult::Status::BudgetExceeded;
        return out;
    }

    std::vector<std::uint64_t> cores;
    std::vector<int> candidates;
    for (const int a : ambiguous) {
        if (solve_sign_lp(mp, 1ull << a))
            candidates.push_back(a);
        else
            cores.push_back(1ull << a);
    }
    if (reversed) std::reverse(candidates.begin(), candidates.end());

    const int mc = static_cast<int>(candidates.size());
    for (int s = mc; s >= 1; --s) {
        MaskMinRank found;
        const bool hit = for_each_combination(mc, s, [&](const std::vector<int>& comb) {
            std::uint64_t zmask = 0;
            for (const int pos : comb) zmask |= 1ull << candidates[static_cast<std::size_t>(pos)];
            for (const std::uint64_t core : cores)
                if ((zmask & core) == core) return false;
            auto sol = solve_sign_lp(mp, zmask);
            if (!sol) {
                cores.push_back(shrink_to_core(mp, zmask));
                return false;
            }
            found.status = MinRankResult::Status::Computed;
            found.value = forced + (m - s);
            found.zero_mask = zmask;
            found.magnitudes = std::move(*sol);
            return true;
        });
        if (hit) return found;
    }

    auto base = solve_sign_lp(mp, 0);
    if (!base) throw std::logic_error("min_rank: base system infeasible despite containment");
    out.status = MinRankResult::Status::Computed;
    out.value = forced + m;
    out.magnitudes = std::move(*base);
    return out;
}

}  // namespace detail

namespace {

FeasibilityWitness build_witness(const SupportPattern& pattern, const detail::MaskPattern& mp,
                                 const std::vector<Rat>& magnitudes) {
    FeasibilityWitness w;
    std::size_t v = 0;
    std::map<MultiIndex, Rat> signed_coeffs;
    for (std::uint64_t bits = mp.pos; bits;) {
        const int i = std::countr_zero(bits);
        bits &= bits - 1;
        const auto& m = mp.basis->lo[static_cast<std::size_t>(i)];
        w.magnitudes[m] = magnitudes[v];
        signed_coeffs[m] = magnitudes[v];
        ++v;
    }
    for (std::uint64_t bits = mp.neg; bits;) {
        const int i = std::countr_zero(bits);
        bits &= bits - 1;
        const auto& m = mp.basis->lo[static_cast<std::size_t>(i)];
        w.magnitudes[m] = magnitudes[v];
        signed_coeffs[m] = -magnitudes[v];
        ++v;
    }
    const SignedForm q = realize(pattern, w.magnitudes);
    const SignedForm p = multiply_by_s(q);
    for (std::uint64_t bits = mp.u_d; bits;) {
        const int a = std::countr_zero(bits);
        bits &= bits - 1;
        const auto& m = mp.basis->hi[static_cast<std::size_t>(a)];
        w.product_coefficients[m] = p.coefficient(m);
    }
    return w;
}

}  // namespace

std::optional<FeasibilityWitness> squared_norm_feasible(const SupportPattern& pattern) {
    if (pattern.pos().empty() && pattern.neg().empty()) return FeasibilityWitness{};
    if (pattern.pos().empty()) return std::nullopt;  // a strictly negative coefficient is unavoidable
    const auto mp = detail::index_pattern(pattern);
    if (!detail::containment_holds(mp)) return std::nullopt;
    auto sol = detail::solve_sign_lp(mp, 0);
    if (!sol) throw std::logic_error("squared_norm_feasible: LP infeasible despite containment");
    return build_witness(pattern, mp, *sol);
}

MinRankResult min_rank(const SupportPattern& pattern, const MinRankOptions& options) {
    MinRankResult result;
    const auto mp = detail::index_pattern(pattern);
    auto masks = detail::min_rank_masks(mp, options.ambiguous_cap, options.reversed_enumeration);
    result.status = masks.status;
    result.value = masks.value;
    if (masks.status == MinRankResult::Status::Computed && !pattern.support().empty() &&
        !masks.magnitudes.empty())
        result.witness = build_witness(pattern, mp, masks.magnitudes);
    if (masks.status == MinRankResult::Status::Computed && pattern.support().empty())
        result.witness = FeasibilityWitness{};
    return result;
}

WindowVerdict sos_window_verdict(int n, long long rho) {
    if (n < 2) throw std::invalid_argument("sos_window_verdict: n must be at least 2");
    if (rho < 0) throw std::invalid_argument("sos_window_verdict: rho must be nonnegative");
    const int k0 = k_zero(n);
    WindowVerdict v;
    v.threshold = static_cast<long long>(macaulay_small_k(n, k0 + 1));
    if (rho >= v.threshold) {
        v.consistent = true;
        v.window_k = -1;
        return v;
    }
    for (int k = 0; k <= k0; ++k) {
        const long long lo = static_cast<long long>(macaulay_small_k(n, k));
        const long long hi = static_cast<long long>(n) * k;
        if (lo <= rho && rho <= hi) {
            v.consistent = true;
            v.window_k = k;
            return v;
        }
    }
    // Identify the surrounding gap for the report.
    long long below = 0, above = v.threshold;
    for (int k = 0; k <= k0; ++k) {
        const long long hi = static_cast<long long>(n) * k;
        if (hi < rho) below = hi;
        const long long lo = static_cast<long long>(macaulay_small_k(n, k));
        if (lo > rho) {
            above = lo;
            break;
        }
    }
    std::ostringstream gap;
    gap << "rho=" << rho << " falls in the forbidden gap (" << below << ", " << above << ")";
    v.consistent = false;
    v.window_k = -1;
    v.gap = gap.str();
    return v;
}

}  // namespace sosrank
