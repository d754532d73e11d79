#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sosrank/numbers.hpp"

namespace sosrank {

/// Configuration of a verification sweep over sign patterns. Patterns are
/// encoded in base 3 over the canonical degree-(d-1) monomial order, least
/// significant trit first: 0 absent, 1 positive, 2 negative.
struct SweepConfig {
    int vars = 3;
    int degree = 2;  // d-1
    enum class Mode { Exhaustive, Random };
    Mode mode = Mode::Exhaustive;
    long long samples = 0;       // random mode sample count
    std::uint64_t seed = 0;      // random mode seed
    int workers = 1;
    int ambiguous_cap = 21;      // min_rank enumeration budget
    int exhaustive_ceiling = 4;  // largest d-1 accepted in exhaustive mode
};

struct Violation {
    std::string check;
    std::uint64_t pattern_code = 0;
    std::string pattern;  // readable "A = {...}  B = {...}"
    std::string detail;
};

struct VerificationReport {
    std::string name;
    SweepConfig config;
    long long patterns_examined = 0;
    long long feasible_count = 0;
    long long budget_errors = 0;
    bool incomplete = false;
    // (P, N) -> min_rank -> count, over feasible patterns whose rank was computed.
    std::map<std::pair<long long, long long>, std::map<long long, long long>> rank_histogram;
    std::vector<Violation> violations;
    double elapsed_seconds = 0;  // excluded from the content hash

    bool pass() const { return violations.empty() && !incomplete; }
    /// FNV-1a over the deterministic content; identical (config, seed)
    /// runs produce identical hashes regardless of timing or worker count.
    std::string content_hash() const;
    std::string to_json() const;
    std::string table() const;
};

/// Bit flags selecting which assertion families a sweep evaluates.
enum SweepChecks : unsigned {
    kCheckSos = 1u,
    kCheckPropositions = 2u,
    kCheckLpTheorem = 4u,
};

/// Single pass over the configured pattern space evaluating the selected
/// check families; one report per family, in flag order. Sharing the pass
/// avoids recomputing min_rank when several families need it.
std::vector<VerificationReport> run_sweeps(const SweepConfig& config, unsigned checks);

/// Rank-window verification of the diagonal SOS statement at n = 3:
/// feasible patterns with N >= 1 must have min_rank >= 5, and the N = 0
/// slice must avoid the forbidden ranks {1, 2, 4}.
VerificationReport sweep_sos(const SweepConfig& config);

/// The small-N propositions: N >= 1 implies P >= 3; N = 1 implies
/// min_rank >= 5; N = 2 with beta_{1,d}(I_g) = 0 implies P >= 5 and
/// min_rank >= 6; N = 2 with beta_{1,d}(I_g) = 1 implies P >= 4 and
/// min_rank >= 5.
VerificationReport sweep_propositions(const SweepConfig& config);

/// For connected primitive patterns: min_rank >= ceil((pi+5)/2) on the
/// feasible slice, min_rank >= the Betti rank bound, the fill inequality
/// #(sq) >= #(sq'), and |E0| + 2|T0| <= d^2 - d on the filled pattern.
VerificationReport sweep_lp_theorem(const SweepConfig& config);

/// Regression fixtures: the five explicit degree-3 ideal cases with their
/// printed Hilbert values, first Betti numbers, forced generator lists and
/// rank floors, across all variable permutations, plus the excluded
/// configuration that breaks graded containment.
VerificationReport fixture_cases();

}  // namespace sosrank
