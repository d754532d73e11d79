#include "sosrank/form.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sosrank {

SignedForm::SignedForm(int vars, int degree, std::map<MultiIndex, Rat> coefficients)
    : vars_(vars), degree_(degree), coeffs_(std::move(coefficients)) {
    if (vars_ < 1) throw std::invalid_argument("SignedForm: need at least one variable");
    if (degree_ < 0) throw std::invalid_argument("SignedForm: negative degree");
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0) {
            it = coeffs_.erase(it);
            continue;
        }
        if (it->first.vars() != vars_ || it->first.degree() != degree_)
            throw std::invalid_argument("SignedForm: term does not match declared degree");
        ++it;
    }
}

Rat SignedForm::coefficient(const MultiIndex& m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void SignedForm::add_term(const MultiIndex& m, const Rat& c) {
    if (c == 0) return;
    if (m.vars() != vars_ || m.degree() != degree_)
        throw std::invalid_argument("SignedForm: term does not match declared degree");
    auto [it, inserted] = coeffs_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

std::pair<long long, long long> SignedForm::signature_pair() const {
    long long pos = 0, neg = 0;
    for (const auto& [m, c] : coeffs_) (c > 0 ? pos : neg) += 1;
    return {pos, neg};
}

std::vector<MultiIndex> SignedForm::support() const {
    std::vector<MultiIndex> out;
    out.reserve(coeffs_.size());
    for (const auto& [m, c] : coeffs_) out.push_back(m);
    return out;
}

bool SignedForm::operator==(const SignedForm& o) const {
    return vars_ == o.vars_ && degree_ == o.degree_ && coeffs_ == o.coeffs_;
}

SupportPattern::SupportPattern(int vars, int degree, std::vector<MultiIndex> pos,
                               std::vector<MultiIndex> neg)
    : vars_(vars), degree_(degree), pos_(std::move(pos)), neg_(std::move(neg)) {
    if (vars_ < 1) throw std::invalid_argument("SupportPattern: need at least one variable");
    if (degree_ < 0) throw std::invalid_argument("SupportPattern: negative degree");
    auto normalize = [&](std::vector<MultiIndex>& v, const char* side) {
        for (const auto& m : v) {
            if (m.vars() != vars_ || m.degree() != degree_)
                throw std::invalid_argument(std::string("SupportPattern: bad ") + side + " entry");
        }
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    normalize(pos_, "positive");
    normalize(neg_, "negative");
    std::vector<MultiIndex> both;
    std::set_intersection(pos_.begin(), pos_.end(), neg_.begin(), neg_.end(),
                          std::back_inserter(both));
    if (!both.empty())
        throw std::invalid_argument("SupportPattern: positive and negative supports overlap");
}

SupportPattern SupportPattern::from_form(const SignedForm& q) {
    std::vector<MultiIndex> pos, neg;
    for (const auto& [m, c] : q.coefficients()) (c > 0 ? pos : neg).push_back(m);
    return SupportPattern(q.vars(), q.degree(), std::move(pos), std::move(neg));
}

std::vector<MultiIndex> SupportPattern::support() const {
    std::vector<MultiIndex> out;
    out.reserve(pos_.size() + neg_.size());
    std::merge(pos_.begin(), pos_.end(), neg_.begin(), neg_.end(), std::back_inserter(out));
    return out;
}

std::pair<long long, long long> SupportPattern::signature_pair() const {
    return {static_cast<long long>(pos_.size()), static_cast<long long>(neg_.size())};
}

bool SupportPattern::operator==(const SupportPattern& o) const {
    return vars_ == o.vars_ && degree_ == o.degree_ && pos_ == o.pos_ && neg_ == o.neg_;
}

SignedForm realize(const SupportPattern& pattern, const std::map<MultiIndex, Rat>& magnitudes) {
    if (magnitudes.size() != pattern.pos().size() + pattern.neg().size())
        throw std::invalid_argument("realize: magnitudes must be keyed exactly by the support");
    SignedForm q(pattern.vars(), pattern.degree());
    for (const auto& m : pattern.pos()) {
        auto it = magnitudes.find(m);
        if (it == magnitudes.end() || it->second <= 0)
            throw std::invalid_argument("realize: missing or nonpositive magnitude");
        q.add_term(m, it->second);
    }
    for (const auto& m : pattern.neg()) {
        auto it = magnitudes.find(m);
        if (it == magnitudes.end() || it->second <= 0)
            throw std::invalid_argument("realize: missing or nonpositive magnitude");
        q.add_term(m, -it->second);
    }
    return q;
}

SignedForm multiply_by_s(const SignedForm& q) {
    SignedForm p(q.vars(), q.degree() + 1);
    for (const auto& [m, c] : q.coefficients())
        for (int j = 0; j < q.vars(); ++j) p.add_term(m.plus_unit(j), c);
    return p;
}

namespace {

std::string rat_str(const Rat& r) {
    std::ostringstream out;
    out << numerator(r);
    if (denominator(r) != 1) out << '/' << denominator(r);
    return out.str();
}

std::optional<Rat> parse_rat(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        const Int num(s.substr(0, slash));
        const Int den(s.substr(slash + 1));
        if (den == 0) return std::nullopt;
        return Rat(num, den);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace

std::string format_form(const SignedForm& f) {
    std::ostringstream out;
    for (const auto& [m, c] : f.coefficients()) {
        out << (c > 0 ? "+" : "") << rat_str(c) << ' ' << m.str() << '\n';
    }
    return out.str();
}

std::optional<SignedForm> parse_form(std::istream& in, int vars) {
    std::string line;
    int degree = -1;
    std::map<MultiIndex, Rat> coeffs;
    while (std::getline(in, line)) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        std::string coeff_tok;
        ls >> coeff_tok;
        auto c = parse_rat(coeff_tok);
        if (!c || *c == 0) return std::nullopt;
        std::string rest;
        std::getline(ls, rest);
        auto m = MultiIndex::parse(rest, vars);
        if (!m) return std::nullopt;
        if (degree == -1) degree = m->degree();
        if (m->degree() != degree) return std::nullopt;
        coeffs[*m] += *c;
    }
    if (degree == -1) return std::nullopt;
    return SignedForm(vars, degree, std::move(coeffs));
}

std::optional<SignedForm> parse_form_inline(const std::string& text, int vars) {
    // Split on top-level '+' / '-' into signed terms, then parse each term
    // as an optional rational coefficient followed by monomial factors.
    std::vector<std::pair<int, std::string>> terms;
    std::string current;
    int sign = +1;
    bool seen_content = false;
    for (char ch : text) {
        if (ch == '+' || ch == '-') {
            if (seen_content) terms.emplace_back(sign, current);
            current.clear();
            seen_content = false;
            sign = (ch == '-') ? -1 : +1;
        } else {
            current += ch;
            if (!std::isspace(static_cast<unsigned char>(ch))) seen_content = true;
        }
    }
    if (seen_content) terms.emplace_back(sign, current);
    if (terms.empty()) return std::nullopt;

    int degree = -1;
    std::map<MultiIndex, Rat> coeffs;
    for (const auto& [s, body] : terms) {
        std::istringstream ts(body);
        std::string tok;
        Rat coeff = 1;
        std::string monomial_part;
        bool first = true;
        while (ts >> tok) {
            if (first && (std::isdigit(static_cast<unsigned char>(tok[0])))) {
                auto c = parse_rat(tok);
                if (!c) return std::nullopt;
                coeff = *c;
            } else {
                monomial_part += tok + " ";
            }
            first = false;
        }
        if (monomial_part.empty()) monomial_part = "1";
        auto m = MultiIndex::parse(monomial_part, vars);
        if (!m) return std::nullopt;
        if (degree == -1) degree = m->degree();
        if (m->degree() != degree) return std::nullopt;
        coeffs[*m] += s * coeff;
    }
    if (degree == -1) return std::nullopt;
    return SignedForm(vars, degree, std::move(coeffs));
}

std::string form_to_json(const SignedForm& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : f.coefficients()) {
        nlohmann::json t;
        t["exponents"] = m.exponents();
        t["num"] = numerator(c).str();
        t["den"] = denominator(c).str();
        terms.push_back(std::move(t));
    }
    nlohmann::json j;
    j["vars"] = f.vars();
    j["degree"] = f.degree();
    j["terms"] = std::move(terms);
    return j.dump();
}

std::optional<SignedForm> form_from_json(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        const int vars = j.at("vars").get<int>();
        const int degree = j.at("degree").get<int>();
        std::map<MultiIndex, Rat> coeffs;
        for (const auto& t : j.at("terms")) {
            const auto exps = t.at("exponents").get<std::vector<int>>();
            const Int num(t.at("num").get<std::string>());
            const Int den(t.at("den").get<std::string>());
            if (den == 0) return std::nullopt;
            coeffs[MultiIndex(exps)] += Rat(num, den);
        }
        return SignedForm(vars, degree, std::move(coeffs));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace sosrank
