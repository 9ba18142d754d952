#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qstack/cyclelemma.hpp"
#include "qstack/seqcore.hpp"
#include "qstack/sweeps.hpp"

using namespace cyclelemma;
using seqcore::BitString;
using seqcore::CyclicArrangement;

TEST_CASE("dominating cuts") {
    // The (2,7)-arrangement with q = 2: exactly three 2-dominating starts.
    const CyclicArrangement fig2{BitString::parse("100100000")};
    const auto cuts = dominating_cuts(fig2, 2);
    CHECK(cuts == std::vector<std::size_t>{0, 1, 2});  // canonical rep 000001001
    for (std::size_t start : cuts) {
        CHECK(seqcore::is_q_dominating(seqcore::linearize(fig2, (start + fig2.size() - 1) %
                                                                    fig2.size()),
                                       2));
    }

    const CyclicArrangement zeros{BitString::parse("0000")};
    CHECK(dominating_cuts(zeros, 1).size() == 4);

    const CyclicArrangement small{BitString::parse("0001")};
    CHECK(dominating_cuts(small, 1).size() == 2);

    const CyclicArrangement ones{BitString::parse("11")};
    CHECK_THROWS_AS(dominating_cuts(ones, 1), std::invalid_argument);
}

TEST_CASE("strong linearization reproduces the (3,7)-arrangement table") {
    const CyclicArrangement a{BitString::parse("1010010000")};
    const auto row1 = strong_linearization(a, 1, 2);
    CHECK(seqcore::linearize(a, row1.cut) == BitString::parse("1010010000"));
    CHECK(row1.good_set == std::set<std::size_t>{row1.cut});

    const auto row7 = strong_linearization(a, 7, 2);
    CHECK(seqcore::linearize(a, row7.cut) == BitString::parse("0001010010"));
    CHECK(row7.good_count == 7);

    // Nesting chain across i = 1..7.
    std::set<std::size_t> previous;
    for (std::size_t i = 1; i <= 7; ++i) {
        const auto report = strong_linearization(a, i, 2);
        CHECK(report.good_count == i);
        CHECK(std::includes(report.good_set.begin(), report.good_set.end(), previous.begin(),
                            previous.end()));
        previous = report.good_set;
    }

    const CyclicArrangement lone{BitString::parse("0")};
    CHECK(strong_linearization(lone, 1, 1).good_count == 1);

    CHECK_THROWS_AS(strong_linearization(a, 8, 2), std::invalid_argument);
    const CyclicArrangement p2{BitString::parse("100000")};  // p = 2 when q = 2
    CHECK_THROWS_AS(strong_linearization(p2, 1, 2), std::invalid_argument);
}

TEST_CASE("stronger linearization") {
    const CyclicArrangement a{BitString::parse("1010010000")};
    std::set<std::size_t> all_zeros;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) all_zeros.insert(i);
    }
    for (std::size_t i = 1; i <= all_zeros.size(); ++i) {
        const auto restricted = stronger_linearization(a, all_zeros, i, 2);
        const auto plain = strong_linearization(a, i, 2);
        CHECK(restricted.cut == plain.cut);
        CHECK(restricted.good_set == plain.good_set);
    }

    // cyc:00101 with S = the two zeros preceding 1s.
    const CyclicArrangement b{BitString::parse("00101")};
    std::set<std::size_t> s;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] == 0 && b[(i + 1) % b.size()] == 1) s.insert(i);
    }
    REQUIRE(s.size() == 2);
    const auto first = stronger_linearization(b, s, 1, 1);
    const auto second = stronger_linearization(b, s, 2, 1);
    CHECK(first.cut != second.cut);
    CHECK(s.count(first.cut) == 1);
    CHECK(s.count(second.cut) == 1);
    CHECK(std::includes(second.good_set.begin(), second.good_set.end(), first.good_set.begin(),
                        first.good_set.end()));

    CHECK_THROWS_AS(stronger_linearization(b, std::set<std::size_t>{}, 1, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(stronger_linearization(b, s, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(stronger_linearization(b, std::set<std::size_t>{2}, 1, 1),
                    std::invalid_argument);  // position 2 holds a 1
}

TEST_CASE("good count profile") {
    const CyclicArrangement a{BitString::parse("1010010000")};
    std::multiset<std::size_t> counts;
    for (const auto& [cut, count] : good_count_profile(a, 2)) counts.insert(count);
    CHECK(counts == std::multiset<std::size_t>{1, 2, 3, 4, 5, 6, 7});

    // Blocked (2, 1*2+2): profile is {2, 3, 4, 4}.
    const CyclicArrangement blocked{BitString::parse("110000")};
    std::multiset<std::size_t> blocked_counts;
    for (const auto& [cut, count] : good_count_profile(blocked, 1)) blocked_counts.insert(count);
    CHECK(blocked_counts == std::multiset<std::size_t>{2, 3, 4, 4});

    const CyclicArrangement zeros{BitString::parse("000")};
    for (const auto& [cut, count] : good_count_profile(zeros, 1)) CHECK(count == 3);
}

TEST_CASE("extended bounds") {
    // Blocked arrangements meet every bound with equality.
    const CyclicArrangement blocked{BitString::parse("110000")};
    for (const auto& check : extended_bounds_check(blocked, 1)) {
        CHECK(check.observed == check.bound);
    }

    // Periodic (k=2, q=2, t=1): at i = qk+p = 6 exactly p = 2 linearizations.
    const auto family = periodic_arrangement(2, 2, 1);
    const auto checks = extended_bounds_check(family.arrangement, 2);
    REQUIRE(!checks.empty());
    const auto& last = checks.back();
    CHECK(last.target_i == 6);
    CHECK(last.bound == 2);
    CHECK(last.observed == 2);

    // k = 0: every 0-linearization of the all-zeros cycle has p good intervals.
    const CyclicArrangement zeros{BitString::parse("0000")};
    for (const auto& check : extended_bounds_check(zeros, 3)) {
        CHECK(check.observed >= check.bound);
    }

    const CyclicArrangement exact{BitString::parse("100")};  // p = 0 when q = 2
    CHECK_THROWS_AS(extended_bounds_check(exact, 2), std::invalid_argument);
}

TEST_CASE("augmentation") {
    // The ten-bit row with a single good interval gains goods from a front insertion.
    const BitString row1 = BitString::parse("1010010000");
    const auto front = augmentation_insert(row1, 0, 2);
    CHECK(front.good_before == 1);
    CHECK(front.good_after >= 2);
    CHECK(front.augmented == BitString::parse("01010010000"));

    const auto lone = augmentation_insert(BitString::parse("0"), 1, 1);
    CHECK(lone.good_before == 1);
    CHECK(lone.good_after == 2);

    const auto tail = augmentation_insert(BitString::parse("100"), 3, 1);
    CHECK(tail.good_before == 1);
    CHECK(tail.good_after == 2);

    CHECK_THROWS_AS(augmentation_insert(BitString::parse("001"), 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(augmentation_insert(BitString::parse("1010010000"), 0, 3),
                    std::invalid_argument);  // zeros not above q*ones
}

TEST_CASE("position sums") {
    const CyclicArrangement a{BitString::parse("00101")};
    const auto sums = position_sums(a);
    std::multiset<std::uint64_t> values;
    std::set<std::uint64_t> residues;
    for (const auto& [cut, sum] : sums) {
        values.insert(sum);
        residues.insert(sum % a.zeros());
    }
    CHECK(values == std::multiset<std::uint64_t>{4, 5, 6});
    CHECK(residues == std::set<std::uint64_t>{0, 1, 2});

    const auto lone = position_sums(CyclicArrangement{BitString::parse("0")});
    REQUIRE(lone.size() == 1);
    CHECK(lone[0].second == 0);

    const auto ones_heavy = position_sums(CyclicArrangement{BitString::parse("011")});
    REQUIRE(ones_heavy.size() == 1);
    CHECK(ones_heavy[0].second == 3);  // linearization 110

    CHECK_THROWS_AS(position_sums(CyclicArrangement{BitString::parse("0011")}),
                    std::invalid_argument);
}

TEST_CASE("periodic family predictions") {
    const auto f221 = periodic_arrangement(2, 2, 1);
    CHECK(f221.arrangement == CyclicArrangement{BitString::parse("10001000")});
    CHECK(f221.predicted_not_good == std::vector<std::size_t>{3, 1, 0});

    const auto f111 = periodic_arrangement(1, 1, 1);
    CHECK(f111.arrangement == CyclicArrangement{BitString::parse("100")});
    CHECK(f111.predicted_not_good == std::vector<std::size_t>{1, 0});

    // Zero count per linearization is (q+t)k.
    for (std::size_t k = 1; k <= 3; ++k) {
        for (unsigned q = 1; q <= 3; ++q) {
            for (std::size_t t = 1; t <= 2; ++t) {
                CHECK(periodic_arrangement(k, q, t).arrangement.zeros() == (q + t) * k);
            }
        }
    }

    // Per-class predictions against direct profiles, and the above-p property
    // for k > 1, across the whole small family.
    const auto sweep = sweeps::periodic_family(3, 3, 2);
    CHECK(sweep.pass());
    CHECK(sweep.checked == 18);
}
