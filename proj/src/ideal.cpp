#include "sosrank/ideal.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "sosrank/macaulay.hpp"

namespace sosrank {

MonomialIdeal::MonomialIdeal(int vars, int gen_degree, std::vector<MultiIndex> generators)
    : vars_(vars), gen_degree_(gen_degree), gens_(std::move(generators)) {
    if (vars_ < 1) throw std::invalid_argument("MonomialIdeal: need at least one variable");
    if (gen_degree_ < 0) throw std::invalid_argument("MonomialIdeal: negative generator degree");
    for (const auto& g : gens_) {
        if (g.vars() != vars_)
            throw std::invalid_argument("MonomialIdeal: generator variable count mismatch");
        if (g.degree() != gen_degree_)
            throw std::invalid_argument("MonomialIdeal: generator degree mismatch");
    }
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

std::vector<MultiIndex> MonomialIdeal::graded_piece(int ell) const {
    if (ell < 0) throw std::invalid_argument("graded_piece: negative degree");
    if (gens_.empty() || ell < gen_degree_) return {};
    std::set<MultiIndex> piece;
    const auto shifts = enumerate_multiindices(vars_, ell - gen_degree_);
    for (const auto& g : gens_)
        for (const auto& m : shifts) piece.insert(g + m);
    return {piece.begin(), piece.end()};
}

long long MonomialIdeal::hilbert(int ell) const {
    return static_cast<long long>(graded_piece(ell).size());
}

Int MonomialIdeal::hilbert_quotient(int ell) const {
    return binomial(ell + vars_ - 1, ell) - hilbert(ell);
}

bool MonomialIdeal::macaulay_bound_check(int ell) const {
    if (ell < 1) throw std::invalid_argument("macaulay_bound_check: need ell >= 1");
    return hilbert_quotient(ell + 1) <= macaulay_growth(hilbert_quotient(ell), ell);
}

std::vector<KoszulRelation> MonomialIdeal::koszul_relations(int degree_cap) const {
    std::vector<KoszulRelation> out;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        for (std::size_t j = i + 1; j < gens_.size(); ++j) {
            const auto& a = gens_[i];
            const auto& b = gens_[j];
            const auto g = MultiIndex::gcd(a, b);
            const int degree = a.degree() + b.degree() - g.degree();
            if (degree > degree_cap) continue;
            out.push_back({a, b, degree, *b.minus(g), *a.minus(g)});
        }
    }
    return out;
}

long long MonomialIdeal::beta_1_d() const {
    return static_cast<long long>(vars_) * static_cast<long long>(gens_.size()) -
           hilbert(gen_degree_ + 1);
}

long long MonomialIdeal::beta_1_d_koszul_rank() const {
    const int d = gen_degree_ + 1;
    // Columns index the degree-d basis of F_0: pairs (generator, variable),
    // i.e. the products x_j * x^g. A degree-d relation sigma(a,b) has
    // single-variable multipliers and becomes a row with entries +1/-1.
    std::map<MultiIndex, std::size_t> gen_index;
    for (std::size_t i = 0; i < gens_.size(); ++i) gen_index[gens_[i]] = i;
    const std::size_t cols = gens_.size() * static_cast<std::size_t>(vars_);
    std::vector<std::vector<Int>> rows;
    for (const auto& rel : koszul_relations(d)) {
        if (rel.degree != d) continue;
        std::vector<Int> row(cols, 0);
        const auto var_of = [&](const MultiIndex& m) {
            for (int j = 0; j < m.vars(); ++j)
                if (m[j] == 1) return j;
            throw std::logic_error("degree-d Koszul multiplier is not a single variable");
        };
        row[gen_index.at(rel.a) * static_cast<std::size_t>(vars_) +
            static_cast<std::size_t>(var_of(rel.multiplier_a))] = 1;
        row[gen_index.at(rel.b) * static_cast<std::size_t>(vars_) +
            static_cast<std::size_t>(var_of(rel.multiplier_b))] = -1;
        rows.push_back(std::move(row));
    }
    return exact_rank(std::move(rows));
}

bool graded_containment(const MonomialIdeal& outer, const MonomialIdeal& inner, int ell) {
    if (outer.vars() != inner.vars())
        throw std::invalid_argument("graded_containment: variable count mismatch");
    const auto big = outer.graded_piece(ell);
    const auto small = inner.graded_piece(ell);
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::string format_ideal(const MonomialIdeal& ideal) {
    std::ostringstream out;
    for (const auto& g : ideal.generators()) out << g.str() << '\n';
    return out.str();
}

std::optional<MonomialIdeal> parse_ideal(std::istream& in, int vars) {
    std::vector<MultiIndex> gens;
    std::string line;
    while (std::getline(in, line)) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        auto m = MultiIndex::parse(line, vars);
        if (!m) return std::nullopt;
        gens.push_back(std::move(*m));
    }
    if (gens.empty()) return std::nullopt;
    const int degree = gens.front().degree();
    for (const auto& g : gens)
        if (g.degree() != degree) return std::nullopt;
    return MonomialIdeal(vars, degree, std::move(gens));
}

}  // namespace sosrank
