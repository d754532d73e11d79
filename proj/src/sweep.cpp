#include "sosrank/sweep.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "sosrank/basis.hpp"
#include "sosrank/feasibility.hpp"
#include "sosrank/ideal.hpp"
#include "sosrank/macaulay.hpp"
#include "sosrank/newton.hpp"

namespace sosrank {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t pow3(int m) {
    std::uint64_t r = 1;
    for (int i = 0; i < m; ++i) r *= 3;
    return r;
}

// Counter-based sampling: stream position k of the seeded generator,
// rejection keeps the draw uniform on [0, range).
std::uint64_t sample_code(std::uint64_t seed, long long k, std::uint64_t range) {
    const std::uint64_t limit = range * (~0ull / range);
    for (std::uint64_t attempt = 0;; ++attempt) {
        const std::uint64_t v = splitmix64(splitmix64(seed ^ static_cast<std::uint64_t>(k)) + attempt);
        if (v < limit) return v % range;
    }
}

void decode_trits(std::uint64_t code, int m, std::uint64_t& pos, std::uint64_t& neg) {
    pos = neg = 0;
    for (int i = 0; i < m; ++i) {
        switch (code % 3) {
            case 1: pos |= 1ull << i; break;
            case 2: neg |= 1ull << i; break;
            default: break;
        }
        code /= 3;
    }
}

std::string mask_string(const ProductBasis& basis, std::uint64_t mask) {
    std::string out = "{";
    bool first = true;
    for (std::uint64_t bits = mask; bits;) {
        const int i = std::countr_zero(bits);
        bits &= bits - 1;
        if (!first) out += ", ";
        out += basis.lo[static_cast<std::size_t>(i)].str();
        first = false;
    }
    return out + "}";
}

std::string pattern_string(const ProductBasis& basis, std::uint64_t pos, std::uint64_t neg) {
    return "A = " + mask_string(basis, pos) + "  B = " + mask_string(basis, neg);
}

enum Family { kSos = 0, kProps = 1, kLp = 2 };

struct Partial {
    long long examined = 0;
    long long feasible = 0;
    long long budget = 0;
    std::map<std::pair<long long, long long>, std::map<long long, long long>> hist[3];
    std::vector<Violation> violations[3];
};

void add_violation(Partial& out, Family fam, const ProductBasis& basis, std::uint64_t code,
                   std::uint64_t pos, std::uint64_t neg, const std::string& check,
                   const std::string& detail) {
    out.violations[fam].push_back({check, code, pattern_string(basis, pos, neg), detail});
}

void process_pattern(const ProductBasis& basis, std::uint64_t code, const SweepConfig& cfg,
                     unsigned checks, Partial& out) {
    std::uint64_t pos = 0, neg = 0;
    decode_trits(code, static_cast<int>(basis.lo.size()), pos, neg);
    const auto mp = detail::make_mask_pattern(basis, pos, neg);
    const long long p_count = std::popcount(pos);
    const long long n_count = std::popcount(neg);
    const int d = basis.degree + 1;

    ++out.examined;
    const bool feasible =
        (p_count == 0) ? (n_count == 0) : detail::containment_holds(mp);
    if (feasible) ++out.feasible;

    const bool do_sos = checks & kCheckSos;
    const bool do_props = checks & kCheckPropositions;
    const bool do_lp = checks & kCheckLpTheorem;

    bool lp_applicable = false;
    if (do_lp && (pos | neg) != 0)
        lp_applicable = detail::connected_masks(mp) && detail::primitive_masks(mp);

    const bool need_rank = feasible && (do_sos || do_props || (do_lp && lp_applicable));
    detail::MaskMinRank rank;
    bool have_rank = false;
    if (need_rank) {
        rank = detail::min_rank_masks(mp, cfg.ambiguous_cap, false);
        if (rank.status == MinRankResult::Status::BudgetExceeded) {
            ++out.budget;
        } else if (rank.status == MinRankResult::Status::Computed) {
            have_rank = true;
        }
    }

    if (have_rank) {
        if (do_sos) out.hist[kSos][{p_count, n_count}][rank.value] += 1;
        if (do_props) out.hist[kProps][{p_count, n_count}][rank.value] += 1;
        if (do_lp && lp_applicable) out.hist[kLp][{p_count, n_count}][rank.value] += 1;
    }

    if (do_sos && feasible) {
        if (n_count >= 1 && have_rank && rank.value < 5) {
            add_violation(out, kSos, basis, code, pos, neg, "sos-rank-floor",
                          "min_rank = " + std::to_string(rank.value) + " < 5");
        }
        if (n_count == 0 && have_rank) {
            const auto verdict = sos_window_verdict(basis.vars, rank.value);
            if (!verdict.consistent)
                add_violation(out, kSos, basis, code, pos, neg, "sos-window", verdict.gap);
        }
    }

    if (do_props && feasible && n_count >= 1) {
        if (p_count < basis.vars)
            add_violation(out, kProps, basis, code, pos, neg, "positives-at-least-n",
                          "P = " + std::to_string(p_count));
        if (n_count == 1 && have_rank && rank.value < 5)
            add_violation(out, kProps, basis, code, pos, neg, "signature-P1-rank",
                          "min_rank = " + std::to_string(rank.value) + " < 5");
        if (n_count == 2) {
            const long long beta = basis.vars * n_count - std::popcount(mp.g_d);
            if (beta == 0) {
                if (p_count < 5)
                    add_violation(out, kProps, basis, code, pos, neg, "signature-P2-beta0-P",
                                  "P = " + std::to_string(p_count) + " < 5");
                if (have_rank && rank.value < 6)
                    add_violation(out, kProps, basis, code, pos, neg, "signature-P2-beta0-rank",
                                  "min_rank = " + std::to_string(rank.value) + " < 6");
            } else if (beta == 1) {
                if (p_count < 4)
                    add_violation(out, kProps, basis, code, pos, neg, "signature-P2-beta1-P",
                                  "P = " + std::to_string(p_count) + " < 4");
                if (have_rank && rank.value < 5)
                    add_violation(out, kProps, basis, code, pos, neg, "signature-P2-beta1-rank",
                                  "min_rank = " + std::to_string(rank.value) + " < 5");
            } else {
                add_violation(out, kProps, basis, code, pos, neg, "signature-P2-beta-range",
                              "beta_{1,d} = " + std::to_string(beta));
            }
        }
    }

    if (do_lp && lp_applicable) {
        const int pi = d;  // trivial support gcd forces pi(sq) = d
        if (have_rank) {
            if (rank.value < (pi + 6) / 2)
                add_violation(out, kLp, basis, code, pos, neg, "pi-degree-bound",
                              "min_rank = " + std::to_string(rank.value) + " < ceil((pi+5)/2) = " +
                                  std::to_string((pi + 6) / 2));
            const long long gamma0 = p_count + n_count;
            const long long gamma1 = basis.vars * gamma0 - std::popcount(mp.u_d);
            const long long alpha1 = basis.vars * p_count - std::popcount(mp.f_d);
            const long long beta1 = basis.vars * n_count - std::popcount(mp.g_d);
            const long long bound = basis.vars * gamma0 - 2 * gamma1 + alpha1 + beta1;
            if (rank.value < bound)
                add_violation(out, kLp, basis, code, pos, neg, "betti-rank-bound",
                              "min_rank = " + std::to_string(rank.value) + " < bound = " +
                                  std::to_string(bound));
        }
        const auto filled = detail::fill_masks(mp);
        if (!filled) {
            add_violation(out, kLp, basis, code, pos, neg, "fill-lemma",
                          "no full extension with #(sq') <= #(sq)");
        } else {
            const auto te = detail::te_partition_masks(*filled);
            const long long lhs = te.e_zero + 2 * te.t_zero;
            const long long rhs = static_cast<long long>(d) * d - d;
            if (lhs > rhs)
                add_violation(out, kLp, basis, code, pos, neg, "te-zero-bound",
                              "|E0| + 2|T0| = " + std::to_string(lhs) + " > " +
                                  std::to_string(rhs));
        }
    }
}

void merge_partial(Partial& into, const Partial& from) {
    into.examined += from.examined;
    into.feasible += from.feasible;
    into.budget += from.budget;
    for (int f = 0; f < 3; ++f) {
        for (const auto& [key, inner] : from.hist[f])
            for (const auto& [rank, count] : inner) into.hist[f][key][rank] += count;
        into.violations[f].insert(into.violations[f].end(), from.violations[f].begin(),
                                  from.violations[f].end());
    }
}

}  // namespace

std::vector<VerificationReport> run_sweeps(const SweepConfig& config, unsigned checks) {
    if (config.vars != 3)
        throw std::invalid_argument("run_sweeps: sweeps are defined for n = 3");
    if (config.degree < 0) throw std::invalid_argument("run_sweeps: negative degree");
    if (config.mode == SweepConfig::Mode::Exhaustive && config.degree > config.exhaustive_ceiling)
        throw std::invalid_argument("run_sweeps: degree exceeds the exhaustive ceiling");
    if (config.mode == SweepConfig::Mode::Random && config.samples <= 0)
        throw std::invalid_argument("run_sweeps: random mode needs a positive sample count");

    const auto start = std::chrono::steady_clock::now();
    const ProductBasis& basis = ProductBasis::get(config.vars, config.degree);
    const std::uint64_t space = pow3(static_cast<int>(basis.lo.size()));
    const long long total = config.mode == SweepConfig::Mode::Exhaustive
                                ? static_cast<long long>(space)
                                : config.samples;

    const int workers = std::max(1, config.workers);
    std::vector<Partial> partials(static_cast<std::size_t>(workers));
    const auto run_range = [&](long long lo, long long hi, Partial& out) {
        for (long long k = lo; k < hi; ++k) {
            const std::uint64_t code = config.mode == SweepConfig::Mode::Exhaustive
                                           ? static_cast<std::uint64_t>(k)
                                           : sample_code(config.seed, k, space);
            process_pattern(basis, code, config, checks, out);
        }
    };

    if (workers == 1) {
        run_range(0, total, partials[0]);
    } else {
        std::vector<std::thread> threads;
        const long long chunk = (total + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const long long lo = std::min<long long>(total, w * chunk);
            const long long hi = std::min<long long>(total, lo + chunk);
            threads.emplace_back(run_range, lo, hi, std::ref(partials[static_cast<std::size_t>(w)]));
        }
        for (auto& t : threads) t.join();
    }

    Partial merged;
    for (const auto& p : partials) merge_partial(merged, p);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::vector<VerificationReport> reports;
    const auto emit = [&](unsigned flag, Family fam, const char* name) {
        if (!(checks & flag)) return;
        VerificationReport r;
        r.name = name;
        r.config = config;
        r.patterns_examined = merged.examined;
        r.feasible_count = merged.feasible;
        r.budget_errors = merged.budget;
        r.incomplete = merged.budget > 0;
        r.rank_histogram = merged.hist[fam];
        r.violations = merged.violations[fam];
        r.elapsed_seconds = elapsed;
        reports.push_back(std::move(r));
    };
    emit(kCheckSos, kSos, "sos");
    emit(kCheckPropositions, kProps, "propositions");
    emit(kCheckLpTheorem, kLp, "lp-theorem");
    return reports;
}

VerificationReport sweep_sos(const SweepConfig& config) {
    return run_sweeps(config, kCheckSos).front();
}

VerificationReport sweep_propositions(const SweepConfig& config) {
    return run_sweeps(config, kCheckPropositions).front();
}

VerificationReport sweep_lp_theorem(const SweepConfig& config) {
    return run_sweeps(config, kCheckLpTheorem).front();
}

namespace {

std::vector<MultiIndex> parse_monomials(const std::vector<const char*>& texts) {
    std::vector<MultiIndex> out;
    for (const char* t : texts) out.push_back(*MultiIndex::parse(t, 3));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MultiIndex> apply_permutation(const std::vector<MultiIndex>& gens,
                                          const std::vector<int>& perm) {
    std::vector<MultiIndex> out;
    for (const auto& g : gens) {
        std::vector<int> e(3);
        for (int i = 0; i < 3; ++i) e[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = g[i];
        out.emplace_back(std::move(e));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> all_permutations3() {
    std::vector<int> p = {0, 1, 2};
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// Degree-d monomials of (I_g)_d with a unique producing generator outside
/// the negative support force that producer into I_f.
std::vector<MultiIndex> forced_generators(const MonomialIdeal& ig) {
    const int d = ig.gen_degree() + 1;
    std::set<MultiIndex> neg(ig.generators().begin(), ig.generators().end());
    std::set<MultiIndex> forced;
    for (const auto& a : ig.graded_piece(d)) {
        std::vector<MultiIndex> available;
        for (int j = 0; j < ig.vars(); ++j) {
            if (a[j] == 0) continue;
            const auto producer = a.minus_unit(j);
            if (!neg.count(producer)) available.push_back(producer);
        }
        std::sort(available.begin(), available.end());
        available.erase(std::unique(available.begin(), available.end()), available.end());
        if (available.size() == 1) forced.insert(available.front());
    }
    return {forced.begin(), forced.end()};
}

struct FixtureCase {
    const char* name;
    std::vector<const char*> gens;
    long long hilbert_d;   // H_{I_g}(4)
    long long beta;        // beta_{1,4}(I_g)
    std::vector<const char*> forced;
    long long floor;       // M(P_min + N) - H_{I_g}(4)
    std::size_t orbit;     // distinct variable permutations
};

const std::vector<FixtureCase>& fixture_table() {
    static const std::vector<FixtureCase> cases = {
        {"case-1",
         {"x1^2 x2", "x1 x3^2", "x2^2 x3"},
         9,
         0,
         {"x1^3", "x1^2 x3", "x1 x2^2", "x2^3", "x2 x3^2", "x3^3"},
         5,
         2},
        {"case-2",
         {"x1^2 x2", "x1 x3^2", "x2^2 x3", "x1 x2 x3"},
         9,
         3,
         {"x1^3", "x1^2 x3", "x1 x2^2", "x2^3", "x2 x3^2", "x3^3"},
         6,
         2},
        {"case-3",
         {"x1^2 x2", "x1^2 x3", "x2^2 x3"},
         8,
         1,
         {"x1^3", "x1 x2^2", "x1 x3^2", "x2^3", "x2 x3^2", "x1 x2 x3"},
         6,
         6},
        {"case-4",
         {"x1^2 x2", "x1 x2 x3", "x1 x3^2"},
         7,
         2,
         {"x1^3", "x1^2 x3", "x1 x2^2", "x3^3", "x2 x3^2"},
         6,
         6},
        {"case-5",
         {"x1^2 x2", "x1 x2 x3", "x2 x3^2"},
         7,
         2,
         {"x1^3", "x1 x2^2", "x2^2 x3", "x3^3", "x1^2 x3", "x1 x3^2"},
         7,
         3},
    };
    return cases;
}

}  // namespace

VerificationReport fixture_cases() {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.name = "fixtures";
    report.config.vars = 3;
    report.config.degree = 3;

    const auto perms = all_permutations3();
    const auto fail = [&](const std::string& check, const std::string& where,
                          const std::string& detail) {
        report.violations.push_back({check, 0, where, detail});
    };

    for (const auto& fc : fixture_table()) {
        const auto base = parse_monomials(fc.gens);
        const auto base_forced = parse_monomials(fc.forced);

        std::set<std::vector<MultiIndex>> orbit;
        for (const auto& perm : perms) orbit.insert(apply_permutation(base, perm));
        if (orbit.size() != fc.orbit)
            fail("fixture-orbit", fc.name,
                 "orbit size " + std::to_string(orbit.size()) + " expected " +
                     std::to_string(fc.orbit));

        for (const auto& perm : perms) {
            const auto gens = apply_permutation(base, perm);
            const MonomialIdeal ig(3, 3, gens);
            const std::string where = std::string(fc.name) + " / " + format_ideal(ig);
            ++report.patterns_examined;

            if (ig.hilbert(4) != fc.hilbert_d)
                fail("fixture-hilbert", where, "H_{I_g}(4) = " + std::to_string(ig.hilbert(4)) +
                                                   " expected " + std::to_string(fc.hilbert_d));
            if (ig.beta_1_d() != fc.beta)
                fail("fixture-beta", where, "beta_{1,4} = " + std::to_string(ig.beta_1_d()) +
                                                " expected " + std::to_string(fc.beta));
            if (ig.beta_1_d_koszul_rank() != ig.beta_1_d())
                fail("fixture-beta-oracle", where, "Koszul rank disagrees with counting identity");

            const auto forced = forced_generators(ig);
            const auto expected_forced = apply_permutation(base_forced, perm);
            if (forced != expected_forced)
                fail("fixture-forced", where, "forced generator list mismatch");

            const long long p_min = static_cast<long long>(forced.size());
            const long long n_count = static_cast<long long>(gens.size());
            const Int floor = macaulay_function(3, 3, p_min + n_count) - ig.hilbert(4);
            if (floor != fc.floor)
                fail("fixture-floor", where, "rank floor " + floor.str() + " expected " +
                                                 std::to_string(fc.floor));
        }
    }

    // The excluded configuration: x1^2 x2, x1^2 x3, x1 x2 x3 in I_g leaves
    // x1^2 x2 x3 without any producer, so graded containment must fail even
    // with every remaining monomial positive.
    {
        const auto base = parse_monomials({"x1^2 x2", "x1^2 x3", "x1 x2 x3"});
        for (const auto& perm : perms) {
            const auto gens = apply_permutation(base, perm);
            const MonomialIdeal ig(3, 3, gens);
            std::vector<MultiIndex> complement;
            for (const auto& m : enumerate_multiindices(3, 3))
                if (!std::binary_search(gens.begin(), gens.end(), m)) complement.push_back(m);
            const MonomialIdeal max_if(3, 3, complement);
            ++report.patterns_examined;
            const std::string where = "excluded / " + format_ideal(ig);
            if (graded_containment(max_if, ig, 4)) {
                fail("fixture-excluded", where, "containment unexpectedly holds");
                continue;
            }
            // Identify the witnessing monomial.
            const auto gd = ig.graded_piece(4);
            const auto fd = max_if.graded_piece(4);
            std::vector<MultiIndex> missing;
            std::set_difference(gd.begin(), gd.end(), fd.begin(), fd.end(),
                                std::back_inserter(missing));
            const auto expected =
                apply_permutation({*MultiIndex::parse("x1^2 x2 x3", 3)}, perm);
            if (missing != expected)
                fail("fixture-excluded-witness", where, "unexpected uncovered monomial set");
        }
    }

    report.feasible_count = report.patterns_examined;
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace {

nlohmann::json report_json_content(const VerificationReport& r, bool include_volatile) {
    nlohmann::json j;
    j["schema"] = "sosrank-report/1";
    j["name"] = r.name;
    j["config"] = {
        {"vars", r.config.vars},
        {"degree", r.config.degree},
        {"mode", r.config.mode == SweepConfig::Mode::Exhaustive ? "exhaustive" : "random"},
        {"samples", r.config.samples},
        {"seed", r.config.seed},
        {"ambiguous_cap", r.config.ambiguous_cap},
    };
    if (include_volatile) j["config"]["workers"] = r.config.workers;
    j["patterns_examined"] = r.patterns_examined;
    j["feasible_count"] = r.feasible_count;
    j["budget_errors"] = r.budget_errors;
    j["incomplete"] = r.incomplete;
    nlohmann::json hist = nlohmann::json::array();
    for (const auto& [key, inner] : r.rank_histogram)
        for (const auto& [rank, count] : inner)
            hist.push_back({{"P", key.first}, {"N", key.second}, {"min_rank", rank}, {"count", count}});
    j["rank_histogram"] = std::move(hist);
    nlohmann::json viols = nlohmann::json::array();
    for (const auto& v : r.violations)
        viols.push_back({{"check", v.check},
                         {"pattern_code", v.pattern_code},
                         {"pattern", v.pattern},
                         {"detail", v.detail}});
    j["violations"] = std::move(viols);
    j["pass"] = r.pass();
    return j;
}

}  // namespace

std::string VerificationReport::content_hash() const {
    const std::string canonical = report_json_content(*this, false).dump();
    std::uint64_t h = 1469598103934665603ull;
    for (const char c : canonical) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::string VerificationReport::to_json() const {
    nlohmann::json j = report_json_content(*this, true);
    j["elapsed_seconds"] = elapsed_seconds;
    j["content_hash"] = content_hash();
    return j.dump(2);
}

std::string VerificationReport::table() const {
    std::ostringstream out;
    out << "sweep " << name;
    if (name != "fixtures") {
        out << "  (n=" << config.vars << ", d-1=" << config.degree << ", "
            << (config.mode == SweepConfig::Mode::Exhaustive ? "exhaustive" : "random");
        if (config.mode == SweepConfig::Mode::Random)
            out << ", samples=" << config.samples << ", seed=" << config.seed;
        out << ")";
    }
    out << '\n';
    out << "  patterns examined : " << patterns_examined << '\n';
    out << "  feasible          : " << feasible_count << '\n';
    out << "  budget errors     : " << budget_errors << '\n';
    out << "  violations        : " << violations.size() << '\n';
    if (!rank_histogram.empty()) {
        out << "  min_rank histogram by signature pair:\n";
        for (const auto& [key, inner] : rank_histogram) {
            out << "    (P,N)=(" << key.first << "," << key.second << "):";
            for (const auto& [rank, count] : inner) out << "  " << rank << " x" << count;
            out << '\n';
        }
    }
    for (const auto& v : violations)
        out << "  VIOLATION [" << v.check << "] " << v.pattern << "  " << v.detail << '\n';
    out << "  content hash      : " << content_hash() << '\n';
    out << "  verdict           : "
        << (!violations.empty() ? "FAIL" : (incomplete ? "INCOMPLETE" : "PASS")) << '\n';
    return out.str();
}

}  // namespace sosrank
