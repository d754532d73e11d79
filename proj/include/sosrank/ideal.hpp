#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sosrank/multiindex.hpp"
#include "sosrank/numbers.hpp"

namespace sosrank {

/// A divided Koszul relation sigma(a,b) between two monomial generators:
///   sigma(a,b) = (x^b / gcd) eps(a) - (x^a / gcd) eps(b),
/// of degree |lcm(a,b)|.
struct KoszulRelation {
    MultiIndex a;
    MultiIndex b;
    int degree;
    MultiIndex multiplier_a;  // x^b / gcd, the factor in front of eps(a)
    MultiIndex multiplier_b;  // x^a / gcd
};

/// Monomial ideal generated in a single degree d-1. Generators are
/// deduplicated and kept in canonical order. The empty generating set is
/// allowed (the zero ideal) and still carries a nominal generator degree.
class MonomialIdeal {
public:
    MonomialIdeal(int vars, int gen_degree, std::vector<MultiIndex> generators);

    int vars() const { return vars_; }
    int gen_degree() const { return gen_degree_; }
    const std::vector<MultiIndex>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    /// The degree-ell graded piece, as a sorted deduplicated monomial list.
    /// Empty below the generator degree.
    std::vector<MultiIndex> graded_piece(int ell) const;

    /// H_I(ell) = |graded_piece(ell)|.
    long long hilbert(int ell) const;

    /// H_{R/I}(ell) = C(ell+n-1, ell) - H_I(ell).
    Int hilbert_quotient(int ell) const;

    /// Macaulay's growth estimate H_{R/I}(ell+1) <= H_{R/I}(ell)^{<ell>},
    /// evaluated at ell >= 1. Holds for every ideal; exists as a test oracle.
    bool macaulay_bound_check(int ell) const;

    /// All divided Koszul relations of degree <= degree_cap, pairs in
    /// canonical order (a < b).
    std::vector<KoszulRelation> koszul_relations(int degree_cap) const;

    /// beta_{1,d} with d = gen_degree + 1, via the counting identity
    /// H_I(d) = n beta_{0,d-1} - beta_{1,d}.
    long long beta_1_d() const;

    /// Independent route to beta_{1,d}: the exact rank of the degree-d
    /// Koszul relation matrix over the rationals. Test oracle for
    /// beta_1_d(), not the production path.
    long long beta_1_d_koszul_rank() const;

private:
    int vars_ = 0;
    int gen_degree_ = 0;
    std::vector<MultiIndex> gens_;
};

/// true iff graded_piece(inner, ell) is contained in graded_piece(outer, ell).
bool graded_containment(const MonomialIdeal& outer, const MonomialIdeal& inner, int ell);

/// Ideal text format: one generator per line, e.g. "x1^2 x2". Blank lines
/// and lines starting with '#' are skipped.
std::string format_ideal(const MonomialIdeal& ideal);
std::optional<MonomialIdeal> parse_ideal(std::istream& in, int vars);

}  // namespace sosrank
