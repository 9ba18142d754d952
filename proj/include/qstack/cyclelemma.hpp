#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "qstack/seqcore.hpp"

namespace cyclelemma {

// One 0-linearization (cut, cut] together with the ends of its q-good
// 0-intervals. The cut is the index of the 0 that ENDS the linearization;
// the sequence starts at the following index.
struct LinearizationReport {
    std::size_t cut = 0;
    std::set<std::size_t> good_set;
    std::size_t good_count = 0;
};

struct BoundCheck {
    std::size_t target_i = 0;  // at least this many q-good 0-intervals
    std::size_t observed = 0;  // 0-linearizations achieving it
    std::size_t bound = 0;     // guaranteed lower bound qk + 2p - i
};

// All indices that START a q-dominating linearization of a (k, qk+p)-
// arrangement; exactly p of them. Rejects arrangements with zeros < q*ones.
std::vector<std::size_t> dominating_cuts(const seqcore::CyclicArrangement& a, unsigned q);

// For a (k, qk+1)-arrangement, the unique 0-linearization with exactly i
// q-good 0-intervals, 1 <= i <= qk+1.
LinearizationReport strong_linearization(const seqcore::CyclicArrangement& a, std::size_t i,
                                         unsigned q);

// Restriction to a nonempty set S of zero positions: the unique
// 0-linearization with cut in S and exactly i q-good 0-intervals ending in S.
LinearizationReport stronger_linearization(const seqcore::CyclicArrangement& a,
                                           const std::set<std::size_t>& s, std::size_t i,
                                           unsigned q);

// cut -> number of q-good 0-intervals, one entry per 0 of the arrangement.
std::map<std::size_t, std::size_t> good_count_profile(const seqcore::CyclicArrangement& a,
                                                      unsigned q);

// One BoundCheck per i in p..qk+p for a (k, qk+p)-arrangement with p >= 1.
std::vector<BoundCheck> extended_bounds_check(const seqcore::CyclicArrangement& a, unsigned q);

// Number of q-good 0-intervals of a linear string read as a 0-linearization.
std::size_t good_interval_count(const seqcore::BitString& b, unsigned q);

struct AugmentationResult {
    seqcore::BitString augmented;
    std::size_t good_before = 0;
    std::size_t good_after = 0;
};

// Insert a 0 into a string that ends in 0 and has zeros > q*ones; the number
// of q-good 0-intervals strictly increases.
AugmentationResult augmentation_insert(const seqcore::BitString& b, std::size_t position,
                                       unsigned q);

// (cut, sum of 1-based indices of the 1's) per 0-linearization. Requires
// gcd(ones, zeros) == 1; the sums are then pairwise distinct modulo zeros.
std::vector<std::pair<std::size_t, std::uint64_t>> position_sums(
    const seqcore::CyclicArrangement& a);

// The periodic (k, qk+tk)-arrangement where each 1 is followed by exactly
// q+t zeros, plus the predicted number of NOT-q-good 0-intervals for the
// class of 0-linearizations whose first 1 sits at position j+1 (j = 0..q).
struct PeriodicFamily {
    seqcore::CyclicArrangement arrangement;
    std::vector<std::size_t> predicted_not_good;  // indexed by j
};

PeriodicFamily periodic_arrangement(std::size_t k, unsigned q, std::size_t t);

}  // namespace cyclelemma
