#include "sosrank/newton.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sosrank/ideal.hpp"

namespace sosrank {

namespace {

bool is_edge(const MultiIndex& a, const MultiIndex& b) {
    // x_j x^a = x_k x^b iff a - b has exactly one +1 and one -1.
    int plus = 0, minus = 0;
    for (int i = 0; i < a.vars(); ++i) {
        const int diff = a[i] - b[i];
        if (diff == 1)
            ++plus;
        else if (diff == -1)
            ++minus;
        else if (diff != 0)
            return false;
    }
    return plus == 1 && minus == 1;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

MonomialIdeal side_ideal(const SupportPattern& pattern, const std::vector<MultiIndex>& gens) {
    return MonomialIdeal(pattern.vars(), pattern.degree(), gens);
}

}  // namespace

NewtonGraph build_graph(const std::vector<MultiIndex>& support) {
    NewtonGraph g;
    g.vertices = support;
    std::sort(g.vertices.begin(), g.vertices.end());
    g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j)
            if (is_edge(g.vertices[i], g.vertices[j]))
                g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return g;
}

NewtonGraph build_graph(const SupportPattern& pattern) { return build_graph(pattern.support()); }

NewtonGraph build_graph(const SignedForm& q) { return build_graph(q.support()); }

std::vector<std::vector<int>> connected_components(const NewtonGraph& g) {
    UnionFind uf(static_cast<int>(g.vertices.size()));
    for (const auto& [a, b] : g.edges) uf.unite(a, b);
    std::map<int, std::vector<int>> buckets;
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
        buckets[uf.find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    out.reserve(buckets.size());
    for (auto& [root, members] : buckets) out.push_back(std::move(members));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

bool component_rank_additivity_check(const SupportPattern& pattern,
                                     const std::map<MultiIndex, Rat>& magnitudes) {
    const SignedForm q = realize(pattern, magnitudes);
    const long long total = multiply_by_s(q).rank();
    const NewtonGraph g = build_graph(pattern);
    long long sum = 0;
    for (const auto& comp : connected_components(g)) {
        SignedForm part(q.vars(), q.degree());
        for (const int v : comp) {
            const auto& m = g.vertices[static_cast<std::size_t>(v)];
            part.add_term(m, q.coefficient(m));
        }
        sum += multiply_by_s(part).rank();
    }
    return sum == total;
}

int pi_degree(const SignedForm& p) {
    if (p.is_zero()) throw std::invalid_argument("pi_degree: zero form");
    const auto support = p.support();
    MultiIndex g = support.front();
    for (const auto& m : support) g = MultiIndex::gcd(g, m);
    return p.degree() - g.degree();
}

SignedForm strip_common_factor(const SignedForm& q) {
    if (q.is_zero()) throw std::invalid_argument("strip_common_factor: zero form");
    const auto support = q.support();
    MultiIndex g = support.front();
    for (const auto& m : support) g = MultiIndex::gcd(g, m);
    SignedForm out(q.vars(), q.degree() - g.degree());
    for (const auto& [m, c] : q.coefficients()) out.add_term(*m.minus(g), c);
    return out;
}

long long node_count(const SupportPattern& pattern) {
    const auto f = side_ideal(pattern, pattern.pos());
    const auto g = side_ideal(pattern, pattern.neg());
    const auto fg = side_ideal(pattern, pattern.support());
    const int d = pattern.degree() + 1;
    return 2 * fg.hilbert(d) - f.hilbert(d) - g.hilbert(d);
}

TEPartition te_partition(const SupportPattern& pattern) {
    if (pattern.vars() != 3) throw std::invalid_argument("te_partition: requires n = 3");
    return detail::te_partition_masks(detail::index_pattern(pattern));
}

long long betti_rank_bound(const SupportPattern& pattern) {
    const auto f = side_ideal(pattern, pattern.pos());
    const auto g = side_ideal(pattern, pattern.neg());
    const auto fg = side_ideal(pattern, pattern.support());
    const long long gamma0 = static_cast<long long>(fg.generators().size());
    return pattern.vars() * gamma0 - 2 * fg.beta_1_d() + f.beta_1_d() + g.beta_1_d();
}

bool lp_theorem_check(const SupportPattern& pattern, const MinRankOptions& options) {
    if (pattern.vars() != 3) throw std::invalid_argument("lp_theorem_check: requires n = 3");
    const NewtonGraph g = build_graph(pattern);
    if (connected_components(g).size() >= 2)
        throw DisconnectedDiagramError("lp_theorem_check: Newton diagram is disconnected");

    // pi-degree of the generic product sq: one more than the pi-degree of q.
    MultiIndex gcd = g.vertices.front();
    for (const auto& m : g.vertices) gcd = MultiIndex::gcd(gcd, m);
    const int pi = pattern.degree() + 1 - gcd.degree();

    const auto result = min_rank(pattern, options);
    if (result.status == MinRankResult::Status::BudgetExceeded)
        throw BudgetExceededError("lp_theorem_check: min_rank budget exceeded");
    if (result.status == MinRankResult::Status::Infeasible) return true;  // vacuous
    return result.value >= (pi + 6) / 2;  // integer form of ceil((pi+5)/2)
}

SupportPattern fill_to_full(const SupportPattern& pattern) {
    if (pattern.vars() != 3) throw std::invalid_argument("fill_to_full: requires n = 3");
    if (pattern.support().empty()) throw std::invalid_argument("fill_to_full: empty support");
    const auto mp = detail::index_pattern(pattern);
    if (!detail::connected_masks(mp))
        throw DisconnectedDiagramError("fill_to_full: Newton diagram is disconnected");
    if (!detail::primitive_masks(mp))
        throw std::invalid_argument("fill_to_full: support has a common monomial factor");
    const auto filled = detail::fill_masks(mp);
    if (!filled)
        throw SearchExhaustedError("fill_to_full: no extension satisfies the node-count inequality");
    return detail::to_support_pattern(*filled);
}

std::string write_edge_list(const NewtonGraph& g) {
    std::ostringstream out;
    std::vector<bool> touched(g.vertices.size(), false);
    for (const auto& [a, b] : g.edges) {
        out << g.vertices[static_cast<std::size_t>(a)].compact_str() << ' '
            << g.vertices[static_cast<std::size_t>(b)].compact_str() << '\n';
        touched[static_cast<std::size_t>(a)] = touched[static_cast<std::size_t>(b)] = true;
    }
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        if (!touched[v]) out << g.vertices[v].compact_str() << '\n';
    return out.str();
}

namespace detail {

TEPartition te_partition_masks(const MaskPattern& mp) {
    const ProductBasis& basis = *mp.basis;
    const int d = basis.degree + 1;

    TEPartition te;
    te.t_total = static_cast<long long>(d - 1) * (d - 2) / 2;
    te.e_total = 3ll * (d - 1);
    const std::uint64_t all_lo = (basis.lo.size() == 64) ? ~0ull : (1ull << basis.lo.size()) - 1;
    te.full = (mp.pos | mp.neg) == all_lo;

    for (std::size_t a = 0; a < basis.hi.size(); ++a) {
        int zeros = 0;
        for (int j = 0; j < 3; ++j)
            if (basis.hi[a][j] == 0) ++zeros;
        if (zeros > 1) continue;  // corner monomials x_j^d belong to neither T nor E
        int in_pos = 0, in_neg = 0, absent = 0;
        for (const auto& [lo, var] : basis.down[a]) {
            const std::uint64_t bit = 1ull << lo;
            if (mp.pos & bit)
                ++in_pos;
            else if (mp.neg & bit)
                ++in_neg;
            else
                ++absent;
        }
        const bool interior = (zeros == 0);
        long long& plus = interior ? te.t_plus : te.e_plus;
        long long& minus = interior ? te.t_minus : te.e_minus;
        long long& zero = interior ? te.t_zero : te.e_zero;
        long long& residual = interior ? te.t_residual : te.e_residual;
        if (in_pos > 0 && in_neg > 0)
            ++zero;
        else if (absent == 0 && in_neg == 0)
            ++plus;
        else if (absent == 0 && in_pos == 0)
            ++minus;
        else
            ++residual;
    }
    return te;
}

std::optional<MaskPattern> fill_masks(const MaskPattern& mp) {
    const ProductBasis& basis = *mp.basis;
    std::vector<int> missing;
    for (std::size_t i = 0; i < basis.lo.size(); ++i)
        if (!((mp.pos | mp.neg) >> i & 1)) missing.push_back(static_cast<int>(i));
    if (missing.empty()) return mp;

    const long long original_nodes = node_count_masks(mp);
    const int k = static_cast<int>(missing.size());
    std::uint64_t best_pos = 0, best_neg = 0;
    long long best_nodes = -1;

    constexpr int kExhaustiveBits = 20;
    if (k <= kExhaustiveBits) {
        // Assignment bits: 0 sends the monomial to the positive side, so
        // ascending enumeration prefers positives and lexicographically
        // first assignments at equal node count.
        for (std::uint64_t assign = 0; assign < (1ull << k); ++assign) {
            std::uint64_t pos = mp.pos, neg = mp.neg;
            for (int i = 0; i < k; ++i) {
                const std::uint64_t bit = 1ull << missing[static_cast<std::size_t>(i)];
                if (assign >> i & 1)
                    neg |= bit;
                else
                    pos |= bit;
            }
            const long long nodes = node_count_masks(make_mask_pattern(basis, pos, neg));
            if (best_nodes < 0 || nodes < best_nodes) {
                best_nodes = nodes;
                best_pos = pos;
                best_neg = neg;
            }
        }
    } else {
        // Greedy beyond the exhaustive ceiling: sign each missing monomial
        // in canonical order, preferring the positive side.
        std::uint64_t pos = mp.pos, neg = mp.neg;
        for (const int i : missing) {
            const std::uint64_t bit = 1ull << i;
            const long long with_pos = node_count_masks(make_mask_pattern(basis, pos | bit, neg));
            const long long with_neg = node_count_masks(make_mask_pattern(basis, pos, neg | bit));
            if (with_pos <= with_neg)
                pos |= bit;
            else
                neg |= bit;
        }
        best_pos = pos;
        best_neg = neg;
        best_nodes = node_count_masks(make_mask_pattern(basis, pos, neg));
    }

    if (best_nodes > original_nodes) return std::nullopt;
    return make_mask_pattern(basis, best_pos, best_neg);
}

bool connected_masks(const MaskPattern& mp) {
    const std::uint64_t support = mp.pos | mp.neg;
    if (support == 0) return false;
    std::uint64_t visited = support & (~support + 1);  // lowest set bit
    for (;;) {
        std::uint64_t frontier = 0;
        for (std::uint64_t bits = visited; bits;) {
            const int i = std::countr_zero(bits);
            bits &= bits - 1;
            frontier |= mp.basis->adjacency[static_cast<std::size_t>(i)];
        }
        const std::uint64_t next = visited | (frontier & support);
        if (next == visited) break;
        visited = next;
    }
    return visited == support;
}

bool primitive_masks(const MaskPattern& mp) {
    const std::uint64_t support = mp.pos | mp.neg;
    if (support == 0) return false;
    for (int j = 0; j < mp.basis->vars; ++j)
        if (!(support & mp.basis->lo_var_zero[static_cast<std::size_t>(j)])) return false;
    return true;
}

}  // namespace detail

std::string ascii_diagram(const SupportPattern& pattern) {
    if (pattern.vars() != 3) throw std::invalid_argument("ascii_diagram: requires n = 3");
    const int m = pattern.degree();
    const auto in = [&](const std::vector<MultiIndex>& v, const MultiIndex& x) {
        return std::binary_search(v.begin(), v.end(), x);
    };
    std::ostringstream out;
    for (int x3 = 0; x3 <= m; ++x3) {
        out << std::string(static_cast<std::size_t>(x3), ' ');
        for (int x1 = m - x3; x1 >= 0; --x1) {
            const MultiIndex mono({x1, m - x3 - x1, x3});
            char mark = '.';
            if (in(pattern.pos(), mono)) mark = 'P';
            if (in(pattern.neg(), mono)) mark = 'N';
            out << mark;
            if (x1 > 0) out << ' ';
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace sosrank
