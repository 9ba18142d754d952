#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sweeps {

// Outcome of one exhaustive (or sampled) verification sweep. Failures are
// recorded as "instance;property;observed;expected;FAIL" lines for machine
// diffing; only the first few are kept verbatim.
struct SweepReport {
    std::string name;
    std::size_t checked = 0;
    std::size_t failure_count = 0;
    std::vector<std::string> failures;

    SweepReport() = default;
    explicit SweepReport(std::string sweep_name) : name(std::move(sweep_name)) {}

    bool pass() const { return failure_count == 0; }
    void fail(const std::string& instance, const std::string& property,
              const std::string& observed, const std::string& expected);
};

// Count of q-dominating cut positions (exactly p) over all (k, qk+p)-
// arrangements up to the given length.
SweepReport cycle_lemma(std::size_t max_len = 16, unsigned max_q = 3);

// Closed-form counts of q-satisfying strings against exhaustive enumeration,
// per length and per number of ones.
SweepReport satisfying_counts(std::size_t max_m = 18, unsigned max_q = 3);

// Good-count profiles of (k, qk+1)-arrangements: each value 1..qk+1 exactly
// once, with nested good sets.
SweepReport strong_lemma(std::size_t max_len = 16, unsigned max_q = 3);

// Same restricted to every nonempty set S of zero positions.
SweepReport stronger_lemma(std::size_t max_len = 12, unsigned max_q = 3);

// Lower bounds of the extended lemma over all (k, qk+p)-arrangements.
SweepReport extended_lemma(std::size_t max_len = 14, std::size_t max_p = 4, unsigned max_q = 3);

// Blocked arrangements (all ones adjacent) meet every bound with equality.
SweepReport blocked_tightness(std::size_t max_len = 14, std::size_t max_p = 4,
                              unsigned max_q = 3);

// Inserting a 0 strictly increases the number of q-good 0-intervals.
SweepReport augmentation(std::size_t max_len = 12, unsigned max_q = 3);

// Position sums of 0-linearizations are distinct modulo the zero count for
// coprime contents.
SweepReport position_sum(std::size_t max_total = 16);

// The A-before-B statistic is exactly uniform over all balanced words.
SweepReport chung_feller(std::size_t max_n = 7);

// Rotations of small integer cycles realize each positive-partial-sum count
// once; includes the nesting property and the walk-based start rule.
SweepReport montagh_exhaustive(std::size_t max_n = 4, std::int64_t entry_bound = 3);
SweepReport montagh_random(std::size_t samples = 10000, std::size_t max_n = 8,
                           std::int64_t entry_bound = 6, std::uint64_t seed = 0);

// Raney-sequence and plane-tree counts against the closed form, the
// tree/sequence round trip, and the ballot-vs-arrangement count identity.
SweepReport catalan_models(std::size_t max_k = 6, unsigned max_q = 3,
                           std::size_t tree_max_n = 5);

// Full bijection round trip between q-stacks and q-satisfying strings,
// with the ones-refinement, the dominating/first-space characterization,
// the concatenation property, and per-n counts.
SweepReport bijection(std::size_t max_m = 10, unsigned max_q = 3);

// First-return recurrence table against the closed form, plus the
// composition and convolution recurrences.
SweepReport recurrences(std::size_t table_m_max = 40, unsigned max_q = 3,
                        std::size_t hp_max_n = 12, std::size_t catalan_max_n = 20);

// Periodic family of the tightness discussion: per-class not-good counts and
// the everything-above-p claim for k > 1.
SweepReport periodic_family(std::size_t max_k = 3, unsigned max_q = 3, std::size_t max_t = 2);

}  // namespace sweeps
