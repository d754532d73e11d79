#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sosrank/errors.hpp"
#include "sosrank/feasibility.hpp"
#include "sosrank/form.hpp"

namespace sosrank {

/// Newton-diagram graph: one vertex per support monomial, an edge between
/// a and b whenever x_j x^a = x_k x^b for some variables j, k.
struct NewtonGraph {
    std::vector<MultiIndex> vertices;          // canonical order
    std::vector<std::pair<int, int>> edges;    // vertex index pairs, i < j
};

NewtonGraph build_graph(const std::vector<MultiIndex>& support);
NewtonGraph build_graph(const SupportPattern& pattern);
NewtonGraph build_graph(const SignedForm& q);

/// Partition of the vertices into maximal connected sets (vertex indices,
/// each set sorted, sets ordered by smallest member).
std::vector<std::vector<int>> connected_components(const NewtonGraph& g);

/// Checks rho(sq) = sum rho(s q_j) over the connected components q_j of q.
bool component_rank_additivity_check(const SupportPattern& pattern,
                                     const std::map<MultiIndex, Rat>& magnitudes);

/// Smallest pi with p = x^alpha psi, deg psi = pi: the degree of p minus
/// the degree of the componentwise minimum of its support. Rejects zero.
int pi_degree(const SignedForm& p);

/// Divides out the support gcd; the result has pi_degree equal to degree.
SignedForm strip_common_factor(const SignedForm& q);

/// #(sq) = [H_{I_{f+g}}(d) - H_{I_f}(d)] + [H_{I_{f+g}}(d) - H_{I_g}(d)],
/// with an absent ideal contributing Hilbert value 0.
long long node_count(const SupportPattern& pattern);

/// Counts of the degree-d interior (T) and edge (E) multi-indices by the
/// sign classes of their neighbours A - e_j. Residual counts collect T/E
/// elements that fall in no class because some neighbour is absent from
/// the support; they vanish exactly when the pattern is full.
struct TEPartition {
    long long t_plus = 0, t_minus = 0, t_zero = 0, t_residual = 0;
    long long e_plus = 0, e_minus = 0, e_zero = 0, e_residual = 0;
    long long t_total = 0;  // C(d-1, 2)
    long long e_total = 0;  // 3(d-1)
    bool full = false;      // pos + neg covers every degree-(d-1) monomial
};

/// Requires n = 3.
TEPartition te_partition(const SupportPattern& pattern);

/// Lower bound n gamma_{0,d-1} - 2 gamma_{1,d} + alpha_{1,d} + beta_{1,d}
/// for rho(sq), from the first Betti numbers of I_f, I_g, I_{f+g}.
long long betti_rank_bound(const SupportPattern& pattern);

/// Verifies min_rank(pattern) >= ceil((pi + 5) / 2) where pi is the
/// pi-degree of the generic product sq. Requires n = 3 and a connected
/// diagram (DisconnectedDiagramError otherwise); throws
/// BudgetExceededError when min_rank runs out of budget. Infeasible
/// patterns satisfy the bound vacuously.
bool lp_theorem_check(const SupportPattern& pattern, const MinRankOptions& options = {});

/// Extends a connected pattern with trivial support gcd to a full pattern
/// (every degree-(d-1) monomial signed) without increasing the node count.
/// Exhaustive over sign assignments at desk scale, greedy beyond; ties are
/// broken toward the positive side, then by the lexicographically first
/// assignment. Throws SearchExhaustedError if no extension satisfies the
/// node-count inequality.
SupportPattern fill_to_full(const SupportPattern& pattern);

/// Edge-list export, one "u v" line per edge with single-token vertex
/// names (e.g. "x1^2*x2"); isolated vertices appear as single-token lines.
std::string write_edge_list(const NewtonGraph& g);

/// Triangular marker rendering of an n = 3 pattern: one row per power of
/// x3 starting from x3^0, entries ordered by descending x1 exponent,
/// P / N / '.' for positive, negative, absent.
std::string ascii_diagram(const SupportPattern& pattern);

namespace detail {

/// Mask-level counterparts used by the sweep engine.
TEPartition te_partition_masks(const MaskPattern& mp);

/// Best full extension by the fill search, or nullopt when every
/// extension increases the node count. Preconditions are the caller's.
std::optional<MaskPattern> fill_masks(const MaskPattern& mp);

bool connected_masks(const MaskPattern& mp);
bool primitive_masks(const MaskPattern& mp);

}  // namespace detail

}  // namespace sosrank
