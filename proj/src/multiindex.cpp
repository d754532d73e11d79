#include "sosrank/multiindex.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sosrank {

MultiIndex::MultiIndex(std::vector<int> exponents) : e_(std::move(exponents)) {
    if (e_.empty()) throw std::invalid_argument("MultiIndex: need at least one variable");
    for (int v : e_)
        if (v < 0) throw std::invalid_argument("MultiIndex: negative exponent");
}

MultiIndex MultiIndex::zero(int vars) {
    return MultiIndex(std::vector<int>(static_cast<std::size_t>(vars), 0));
}

MultiIndex MultiIndex::unit(int vars, int k) {
    auto m = zero(vars);
    m.e_[static_cast<std::size_t>(k)] = 1;
    return m;
}

int MultiIndex::degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0);
}

MultiIndex MultiIndex::plus_unit(int k) const {
    MultiIndex r = *this;
    r.e_[static_cast<std::size_t>(k)] += 1;
    return r;
}

MultiIndex MultiIndex::minus_unit(int k) const {
    if (e_[static_cast<std::size_t>(k)] == 0)
        throw std::invalid_argument("MultiIndex: subtracting unit from zero exponent");
    MultiIndex r = *this;
    r.e_[static_cast<std::size_t>(k)] -= 1;
    return r;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
    if (vars() != o.vars()) throw std::invalid_argument("MultiIndex: variable count mismatch");
    MultiIndex r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

std::optional<MultiIndex> MultiIndex::minus(const MultiIndex& o) const {
    if (vars() != o.vars()) throw std::invalid_argument("MultiIndex: variable count mismatch");
    MultiIndex r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        r.e_[i] -= o.e_[i];
        if (r.e_[i] < 0) return std::nullopt;
    }
    return r;
}

bool MultiIndex::divides(const MultiIndex& o) const {
    if (vars() != o.vars()) throw std::invalid_argument("MultiIndex: variable count mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

MultiIndex MultiIndex::gcd(const MultiIndex& a, const MultiIndex& b) {
    if (a.vars() != b.vars()) throw std::invalid_argument("MultiIndex: variable count mismatch");
    MultiIndex r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::min(r.e_[i], b.e_[i]);
    return r;
}

MultiIndex MultiIndex::lcm(const MultiIndex& a, const MultiIndex& b) {
    if (a.vars() != b.vars()) throw std::invalid_argument("MultiIndex: variable count mismatch");
    MultiIndex r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(r.e_[i], b.e_[i]);
    return r;
}

bool MultiIndex::operator<(const MultiIndex& o) const {
    if (vars() != o.vars()) throw std::invalid_argument("MultiIndex: variable count mismatch");
    const int da = degree(), db = o.degree();
    if (da != db) return da < db;
    // Within a degree: lexicographically descending, x1 strongest.
    return e_ > o.e_;
}

std::string MultiIndex::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0) continue;
        if (!first) out << ' ';
        out << 'x' << (i + 1);
        if (e_[i] > 1) out << '^' << e_[i];
        first = false;
    }
    if (first) out << '1';
    return out.str();
}

std::string MultiIndex::compact_str() const {
    std::string s = str();
    for (char& c : s)
        if (c == ' ') c = '*';
    return s;
}

std::optional<MultiIndex> MultiIndex::parse(const std::string& text, int vars) {
    std::vector<int> e(static_cast<std::size_t>(vars), 0);
    std::istringstream in(text);
    std::string tok;
    bool any = false;
    while (in >> tok) {
        any = true;
        if (tok == "1") continue;
        if (tok.size() < 2 || tok[0] != 'x') return std::nullopt;
        std::size_t caret = tok.find('^');
        int idx = 0, exp = 1;
        try {
            idx = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
            if (caret != std::string::npos) exp = std::stoi(tok.substr(caret + 1));
        } catch (const std::exception&) {
            return std::nullopt;
        }
        if (idx < 1 || idx > vars || exp < 1) return std::nullopt;
        e[static_cast<std::size_t>(idx - 1)] += exp;
    }
    if (!any) return std::nullopt;
    return MultiIndex(std::move(e));
}

namespace {

void enumerate_rec(int vars, int slot, int remaining, std::vector<int>& cur,
                   std::vector<MultiIndex>& out) {
    if (slot == vars - 1) {
        cur[static_cast<std::size_t>(slot)] = remaining;
        out.emplace_back(cur);
        return;
    }
    // Highest exponent on the current (most significant) variable first,
    // which yields the canonical lexicographically-descending order.
    for (int e = remaining; e >= 0; --e) {
        cur[static_cast<std::size_t>(slot)] = e;
        enumerate_rec(vars, slot + 1, remaining - e, cur, out);
    }
}

}  // namespace

std::vector<MultiIndex> enumerate_multiindices(int vars, int degree) {
    if (vars < 1) throw std::invalid_argument("enumerate_multiindices: vars must be positive");
    if (degree < 0) throw std::invalid_argument("enumerate_multiindices: negative degree");
    std::vector<MultiIndex> out;
    std::vector<int> cur(static_cast<std::size_t>(vars), 0);
    enumerate_rec(vars, 0, degree, cur, out);
    return out;
}

std::size_t MultiIndexHash::operator()(const MultiIndex& m) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : m.exponents()) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace sosrank
