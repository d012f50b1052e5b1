#pragma once

#include "permstat/bijections.hpp"
#include "permstat/qseries.hpp"

// Exhaustive enumeration engine, exact distribution comparison, and the
// runnable claim suites.  Enumeration is deterministic (lexicographic),
// so every report is reproducible; the parallel kernel merges per-worker
// counts with a commutative fold and matches the serial reference
// exactly.

namespace permstat {

/// Raised when a distribution request exceeds the enumeration budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(int n, unsigned long long required, int limit)
        : std::runtime_error("enumeration budget exceeded: n=" + std::to_string(n) +
                             " requires " + std::to_string(required) +
                             " permutations (limit n<=" + std::to_string(limit) +
                             "; raise via PERMSTAT_MAX_N or --max-n)"),
          n(n),
          required(required),
          limit(limit) {}
    int n;
    unsigned long long required;
    int limit;
};

/// Current budget for full-S_n enumeration in distribution().  Defaults
/// to 8; the PERMSTAT_MAX_N environment variable or an explicit set call
/// overrides it.
int enumeration_limit();
void set_enumeration_limit(int n);

/// A named pure statistic extractor; keys are canonical renderings of the
/// statistic tuple (set components as sorted {..} lists).
struct StatProfile {
    std::string name;
    std::function<std::string(const Permutation&)> key;
};

/// Exact multiset of statistic tuples over S_n.
struct Distribution {
    unsigned long long domain_size = 0;
    std::map<std::string, unsigned long long> counts;

    friend bool operator==(const Distribution&, const Distribution&) = default;
};

/// OpenMP kernel, partitioned on the first letter.
Distribution distribution(int n, const StatProfile& profile);
/// Serial reference kernel; kept for testing the parallel one.
Distribution distribution_serial(int n, const StatProfile& profile);

enum class Status { pass, fail, informative };

struct VerificationReport {
    std::string claim;
    int n_lo = 0;
    int n_hi = 0;
    Status status = Status::pass;
    bool binding = true;
    std::string witness;  // minimal counterexample (smallest n, lex-least element)
    std::string detail;
    double ms = 0.0;  // wall time; omitted from machine records
};

struct SuiteOptions {
    int n_max = 7;
    StatSet stats = StatSet::standard();
    /// Optional externally seeded oracles (plug-in tables); when null the
    /// suites build matched oracles locally.
    DwOracle* dw = nullptr;
    WordOracle* f3_words = nullptr;
};

// Suites; each returns one report per claim.
std::vector<VerificationReport> check_theorem_1_1(const SuiteOptions& opts);
std::vector<VerificationReport> check_theorem_1_2(const SuiteOptions& opts);
std::vector<VerificationReport> check_theorem_1_3(const SuiteOptions& opts);
std::vector<VerificationReport> check_propositions(const SuiteOptions& opts);

// Claim-granular entry points (the suites compose these; the acceptance
// harness drives some of them at larger n than the default).
VerificationReport check_dw_oracle(int n_max);
VerificationReport check_word_oracle(int n_max, const StatSet& stats = StatSet::standard());
VerificationReport check_phi_oracle(int n_max, const StatSet& stats = StatSet::standard());
VerificationReport check_chz_oracle(int n_max, const StatSet& stats = StatSet::standard());
VerificationReport check_derangement_counts();

/// The four equidistribution groups, as named profiles.
std::vector<StatProfile> theorem_1_2_group(int group, const StatSet& stats);

bool all_binding_pass(const std::vector<VerificationReport>& reports);

/// Deterministic key=value record (no timing).
std::string machine_record(const VerificationReport& r);
/// Human-readable line including wall time.
std::string human_line(const VerificationReport& r);

} // namespace permstat
