#include "sosrank/simplex.hpp"

#include <cstddef>
#include <stdexcept>

namespace sosrank {

namespace {

// Dense tableau: rows of constraint coefficients with the right-hand side
// in the last column. basis[i] is the column currently basic in row i.
struct Tableau {
    std::size_t cols = 0;  // structural + slack + artificial columns
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
    std::vector<int> basis;
    std::vector<bool> barred;  // artificial columns barred from entering

    // Maximizes c . x with Bland's rule. Returns false when unbounded.
    bool run(const std::vector<Rat>& c) {
        for (;;) {
            int enter = -1;
            // Reduced cost r_j = c_j - c_B . column_j; Bland: first j with r_j > 0.
            for (std::size_t j = 0; j < cols; ++j) {
                if (barred[j]) continue;
                Rat r = c[j];
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    const Rat& cb = c[static_cast<std::size_t>(basis[i])];
                    if (cb != 0 && rows[i][j] != 0) r -= cb * rows[i][j];
                }
                if (r > 0) {
                    enter = static_cast<int>(j);
                    break;
                }
            }
            if (enter < 0) return true;

            int leave = -1;
            Rat best_ratio = 0;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const Rat& a = rows[i][static_cast<std::size_t>(enter)];
                if (a <= 0) continue;
                Rat ratio = rhs[i] / a;
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[static_cast<std::size_t>(leave)])) {
                    leave = static_cast<int>(i);
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(static_cast<std::size_t>(leave), static_cast<std::size_t>(enter));
        }
    }

    void pivot(std::size_t p, std::size_t j) {
        const Rat piv = rows[p][j];
        for (auto& v : rows[p]) v /= piv;
        rhs[p] /= piv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == p) continue;
            const Rat f = rows[i][j];
            if (f == 0) continue;
            for (std::size_t k = 0; k < cols; ++k)
                if (rows[p][k] != 0) rows[i][k] -= f * rows[p][k];
            rhs[i] -= f * rhs[p];
        }
        basis[p] = static_cast<int>(j);
    }
};

}  // namespace

LpResult solve_lp(int num_vars, const std::vector<LpRow>& rows, const std::vector<Rat>& objective) {
    if (objective.size() != static_cast<std::size_t>(num_vars))
        throw std::invalid_argument("solve_lp: objective length mismatch");

    const std::size_t nv = static_cast<std::size_t>(num_vars);
    std::size_t slack_count = 0;
    for (const auto& r : rows) {
        if (r.coeffs.size() != nv) throw std::invalid_argument("solve_lp: row length mismatch");
        if (r.rel != Rel::Eq) ++slack_count;
    }

    // Layout: [structural | slack/surplus | artificial]. Every row gets its
    // rhs normalized to be nonnegative so the artificial start is feasible.
    Tableau t;
    const std::size_t m = rows.size();
    std::size_t next_slack = nv;
    std::size_t next_artificial = nv + slack_count;
    t.cols = nv + slack_count + m;
    t.rows.assign(m, std::vector<Rat>(t.cols, 0));
    t.rhs.assign(m, 0);
    t.basis.assign(m, -1);
    t.barred.assign(t.cols, false);

    std::vector<Rat> phase1(t.cols, 0);
    for (std::size_t i = 0; i < m; ++i) {
        Rat sign = (rows[i].rhs < 0) ? -1 : 1;
        Rel rel = rows[i].rel;
        if (sign < 0 && rel == Rel::Ge) rel = Rel::Le;
        else if (sign < 0 && rel == Rel::Le) rel = Rel::Ge;
        for (std::size_t j = 0; j < nv; ++j) t.rows[i][j] = sign * rows[i].coeffs[j];
        t.rhs[i] = sign * rows[i].rhs;

        if (rel == Rel::Le) {
            t.rows[i][next_slack] = 1;
            t.basis[i] = static_cast<int>(next_slack);
            ++next_slack;
            continue;  // slack is a feasible basic start; no artificial needed
        }
        if (rel == Rel::Ge) {
            t.rows[i][next_slack] = -1;  // surplus
            ++next_slack;
        }
        t.rows[i][next_artificial] = 1;
        t.basis[i] = static_cast<int>(next_artificial);
        phase1[next_artificial] = -1;
        ++next_artificial;
    }

    LpResult result;
    if (!t.run(phase1)) throw std::logic_error("solve_lp: phase 1 cannot be unbounded");
    Rat infeasibility = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (phase1[static_cast<std::size_t>(t.basis[i])] != 0) infeasibility += t.rhs[i];
    if (infeasibility != 0) {
        result.status = LpStatus::Infeasible;
        return result;
    }

    // Drive any artificial still basic (at value zero) out of the basis when
    // its row has a usable nonartificial column; purely redundant rows keep
    // a barred artificial at zero, which later pivots cannot disturb.
    for (std::size_t j = nv + slack_count; j < t.cols; ++j) t.barred[j] = true;
    for (std::size_t i = 0; i < m; ++i) {
        if (static_cast<std::size_t>(t.basis[i]) < nv + slack_count) continue;
        for (std::size_t j = 0; j < nv + slack_count; ++j) {
            if (t.rows[i][j] != 0) {
                t.pivot(i, j);
                break;
            }
        }
    }

    std::vector<Rat> phase2(t.cols, 0);
    for (std::size_t j = 0; j < nv; ++j) phase2[j] = objective[j];
    if (!t.run(phase2)) {
        result.status = LpStatus::Unbounded;
        return result;
    }

    result.status = LpStatus::Optimal;
    result.x.assign(nv, 0);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t b = static_cast<std::size_t>(t.basis[i]);
        if (b < nv) result.x[b] = t.rhs[i];
    }
    for (std::size_t j = 0; j < nv; ++j) result.objective += objective[j] * result.x[j];
    return result;
}

LpResult lp_feasible(int num_vars, const std::vector<LpRow>& rows) {
    return solve_lp(num_vars, rows, std::vector<Rat>(static_cast<std::size_t>(num_vars), 0));
}

}  // namespace sosrank
