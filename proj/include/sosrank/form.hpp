#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sosrank/multiindex.hpp"
#include "sosrank/numbers.hpp"

namespace sosrank {

/// Homogeneous real polynomial with exact rational coefficients, stored
/// sparsely (no zero coefficients). For diagonal Hermitian forms this is
/// the real realization q(x) = sum c_a x^a; p = sq is the same type.
class SignedForm {
public:
    SignedForm(int vars, int degree) : vars_(vars), degree_(degree) {}
    SignedForm(int vars, int degree, std::map<MultiIndex, Rat> coefficients);

    int vars() const { return vars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<MultiIndex, Rat>& coefficients() const { return coeffs_; }
    Rat coefficient(const MultiIndex& m) const;

    /// Adds c * x^m, dropping the entry if the sum cancels.
    void add_term(const MultiIndex& m, const Rat& c);

    /// Number of monomials with nonzero coefficient (the rank rho of a
    /// diagonal form).
    long long rank() const { return static_cast<long long>(coeffs_.size()); }

    /// (P, N): counts of positive and negative coefficients.
    std::pair<long long, long long> signature_pair() const;

    /// The support as a sorted monomial list.
    std::vector<MultiIndex> support() const;

    bool operator==(const SignedForm& o) const;

private:
    int vars_;
    int degree_;
    std::map<MultiIndex, Rat> coeffs_;
};

/// Coefficient-free sign assignment on the degree-(d-1) monomials:
/// pos is the positive support (script A), neg the negative support
/// (script B). Disjoint, all of the stated degree, kept sorted.
class SupportPattern {
public:
    SupportPattern(int vars, int degree, std::vector<MultiIndex> pos, std::vector<MultiIndex> neg);

    static SupportPattern from_form(const SignedForm& q);

    int vars() const { return vars_; }
    int degree() const { return degree_; }
    const std::vector<MultiIndex>& pos() const { return pos_; }
    const std::vector<MultiIndex>& neg() const { return neg_; }
    std::vector<MultiIndex> support() const;

    /// Signature pair (P, N) = (|pos|, |neg|).
    std::pair<long long, long long> signature_pair() const;

    bool operator==(const SupportPattern& o) const;

private:
    int vars_;
    int degree_;
    std::vector<MultiIndex> pos_;
    std::vector<MultiIndex> neg_;
};

/// q with coefficient +magnitude on pos and -magnitude on neg. Magnitudes
/// must be strictly positive and keyed exactly by pos or neg.
SignedForm realize(const SupportPattern& pattern, const std::map<MultiIndex, Rat>& magnitudes);

/// p = (x1 + ... + xn) q, expanded exactly.
SignedForm multiply_by_s(const SignedForm& q);

/// Text format: one term per line, exact rational coefficient with explicit
/// sign, then the monomial, e.g. "+3/2 x1^2 x2". The zero form is the
/// empty string. Round-trips bit-exactly.
std::string format_form(const SignedForm& f);
std::optional<SignedForm> parse_form(std::istream& in, int vars);

/// Inline format: infix sum like "x1^2 - 1/2 x1 x2 + x2^2".
std::optional<SignedForm> parse_form_inline(const std::string& text, int vars);

/// JSON alternative: {"vars":n,"degree":d,"terms":[{"exponents":[...],
/// "num":"...","den":"..."}]}. Numerator and denominator are decimal
/// strings so arbitrary precision survives the round trip.
std::string form_to_json(const SignedForm& f);
std::optional<SignedForm> form_from_json(const std::string& text);

}  // namespace sosrank
