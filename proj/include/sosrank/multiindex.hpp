#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sosrank {

/// Exponent tuple of a monomial in n variables. Immutable value type;
/// every arithmetic operation returns a fresh index.
///
/// The canonical order used throughout the project (and in every file
/// format) is graded lexicographic with x1 > x2 > ... > xn: indices of
/// lower total degree come first, and within a degree the exponent
/// vectors are ordered lexicographically descending, so x1^d is the
/// first monomial of degree d and xn^d the last.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> exponents);

    static MultiIndex zero(int vars);
    /// e_k, 0-based: the exponent tuple with a single 1 in slot k.
    static MultiIndex unit(int vars, int k);

    int vars() const { return static_cast<int>(e_.size()); }
    int degree() const;
    int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& exponents() const { return e_; }

    MultiIndex plus_unit(int k) const;
    /// Subtraction of e_k; requires exponent k to be positive.
    MultiIndex minus_unit(int k) const;
    MultiIndex operator+(const MultiIndex& o) const;
    /// Componentwise difference, or nullopt if any component would go negative.
    std::optional<MultiIndex> minus(const MultiIndex& o) const;

    bool divides(const MultiIndex& o) const;
    static MultiIndex gcd(const MultiIndex& a, const MultiIndex& b);
    static MultiIndex lcm(const MultiIndex& a, const MultiIndex& b);

    bool operator==(const MultiIndex& o) const { return e_ == o.e_; }
    /// Canonical (graded-lex) order; see class comment.
    bool operator<(const MultiIndex& o) const;

    /// Readable form, e.g. "x1^2 x3"; the degree-0 index prints as "1".
    std::string str() const;
    /// Single-token form for edge lists, e.g. "x1^2*x3".
    std::string compact_str() const;
    /// Parses the output of str(): whitespace-separated "x<i>" / "x<i>^<e>"
    /// factors, or "1". Returns nullopt on malformed input.
    static std::optional<MultiIndex> parse(const std::string& text, int vars);

private:
    std::vector<int> e_;
};

/// All multi-indices with `vars` slots and the given total degree, in
/// canonical order. Size is binomial(degree + vars - 1, degree).
std::vector<MultiIndex> enumerate_multiindices(int vars, int degree);

struct MultiIndexHash {
    std::size_t operator()(const MultiIndex& m) const;
};

}  // namespace sosrank
