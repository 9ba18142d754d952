#include "doctest.h"

#include <set>
#include <stdexcept>

#include "qstack/applications.hpp"
#include "qstack/counting.hpp"

using namespace applications;
using counting::CountValue;
using seqcore::BitString;

TEST_CASE("A-before-B statistic") {
    CHECK(chung_feller_statistic("AABB") == 2);
    CHECK(chung_feller_statistic("BBAA") == 0);
    CHECK(chung_feller_statistic("ABBA") == 1);
    CHECK(chung_feller_statistic("") == 0);
    CHECK_THROWS_AS(chung_feller_statistic("AAB"), std::invalid_argument);
    CHECK_THROWS_AS(chung_feller_statistic("AxBB"), std::invalid_argument);
}

TEST_CASE("statistic distribution is uniform") {
    CHECK(chung_feller_distribution(1) == std::vector<std::uint64_t>{1, 1});
    CHECK(chung_feller_distribution(2) == std::vector<std::uint64_t>{2, 2, 2});
    CHECK(chung_feller_distribution(4) == std::vector<std::uint64_t>(5, 14));
    CHECK_THROWS_AS(chung_feller_distribution(13), std::invalid_argument);
}

TEST_CASE("integer cycle parsing and checks") {
    const IntegerCycle c = IntegerCycle::parse("2,-1,2,-5,3,-2,1,-2,3");
    CHECK(c.size() == 9);
    CHECK(c.str() == "2,-1,2,-5,3,-2,1,-2,3");
    CHECK_THROWS_AS(IntegerCycle::parse("1,1"), std::invalid_argument);   // sums to 2
    CHECK_THROWS_AS(IntegerCycle::parse("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(IntegerCycle(std::vector<std::int64_t>{}), std::invalid_argument);
}

TEST_CASE("montagh encoding") {
    const IntegerCycle fig7 = IntegerCycle::parse("2,-1,2,-5,3,-2,1,-2,3");
    const MontaghEncoding enc = montagh_encode(fig7);
    CHECK(enc.arrangement.ones() == 19);
    CHECK(enc.arrangement.zeros() == 20);
    CHECK(enc.run_end_zeros.size() == 9);
    for (std::size_t idx : enc.run_end_zeros) {
        CHECK(enc.arrangement[idx] == 0);
        // Ends a maximal run: the next position holds a 1.
        CHECK(enc.arrangement[(idx + 1) % enc.arrangement.size()] == 1);
    }

    const MontaghEncoding single = montagh_encode(IntegerCycle::parse("1"));
    CHECK(single.arrangement.str() == "cyc:001");
    CHECK(single.arrangement.ones() == 1);
    CHECK(single.arrangement.zeros() == 2);
    CHECK(single.run_end_zeros.size() == 1);

    const MontaghEncoding three = montagh_encode(IntegerCycle::parse("0,1,0"));
    CHECK(three.arrangement.ones() == 3);
    CHECK(three.arrangement.zeros() == 4);
    CHECK(three.run_end_zeros.size() == 3);
}

TEST_CASE("montagh linearization matches the worked rows") {
    const IntegerCycle fig7 = IntegerCycle::parse("2,-1,2,-5,3,-2,1,-2,3");
    CHECK(montagh_linearization(fig7, 9).values ==
          std::vector<std::int64_t>{3, 2, -1, 2, -5, 3, -2, 1, -2});
    CHECK(montagh_linearization(fig7, 1).values ==
          std::vector<std::int64_t>{-5, 3, -2, 1, -2, 3, 2, -1, 2});
    CHECK(montagh_linearization(fig7, 5).values ==
          std::vector<std::int64_t>{2, -1, 2, -5, 3, -2, 1, -2, 3});

    std::set<std::size_t> starts;
    for (std::size_t l = 1; l <= 9; ++l) {
        const auto rotation = montagh_linearization(fig7, l);
        CHECK(positive_partial_sums(rotation.values) == l);
        starts.insert(rotation.start);
    }
    CHECK(starts.size() == 9);
    CHECK_THROWS_AS(montagh_linearization(fig7, 0), std::invalid_argument);
    CHECK_THROWS_AS(montagh_linearization(fig7, 10), std::invalid_argument);
}

TEST_CASE("walk-based start rule") {
    CHECK(raney_start(IntegerCycle::parse("2,-1,2,-5,3,-2,1,-2,3")) == 8);
    CHECK(raney_start(IntegerCycle::parse("1")) == 0);
    const IntegerCycle c = IntegerCycle::parse("-1,1,1");
    CHECK(raney_start(c) == 1);
    CHECK(montagh_linearization(c, 3).start == 1);
}

TEST_CASE("raney sequences") {
    std::vector<std::string> all;
    enumerate_raney(2, 1, [&](const RaneySequence& r) { all.push_back(r.str()); });
    CHECK(all == std::vector<std::string>{"1,1,1,-1,-1", "1,1,-1,1,-1"});

    std::size_t lone = 0;
    enumerate_raney(0, 3, [&](const RaneySequence& r) {
        ++lone;
        CHECK(r.terms() == std::vector<std::int64_t>{1});
        CHECK(r.drops() == 0);
    });
    CHECK(lone == 1);

    std::size_t k2q2 = 0;
    enumerate_raney(2, 2, [&](const RaneySequence& r) {
        ++k2q2;
        CHECK(r.terms().size() == 7);
        CHECK(r.drops() == 2);
        CHECK(r.terms().front() == 1);
    });
    CHECK(CountValue(k2q2) == counting::generalized_catalan(2, 2));

    // The type rejects anything violating its invariants.
    CHECK_THROWS_AS(RaneySequence(1, {1, -1}), std::invalid_argument);       // bad length
    CHECK_THROWS_AS(RaneySequence(2, {1, 1, -1}), std::invalid_argument);    // term not in {1,-q}
    CHECK_THROWS_AS(RaneySequence(1, {-1, 1, 1}), std::invalid_argument);    // sum dips
    CHECK(RaneySequence(1, {1, 1, -1, 1, -1}).drops() == 2);
}

TEST_CASE("plane tree enumeration and encoding") {
    std::vector<PlaneTree> trees;
    enumerate_plane_trees(2, 2, [&](const PlaneTree& t) { trees.push_back(t); });
    REQUIRE(trees.size() == 3);
    std::set<std::string> encodings;
    for (const PlaneTree& t : trees) {
        CHECK(t.internal_count() == 2);
        CHECK(t.leaf_count() == 5);
        encodings.insert(tree_to_sequence(t).str());
    }
    CHECK(encodings == std::set<std::string>{"0001001", "0000101", "0000011"});

    std::size_t leaf_only = 0;
    enumerate_plane_trees(0, 3, [&](const PlaneTree& t) {
        ++leaf_only;
        CHECK(t.leaf());
        CHECK(t.str() == "·");
    });
    CHECK(leaf_only == 1);

    std::size_t ternary = 0;
    enumerate_plane_trees(3, 1, [&](const PlaneTree&) { ++ternary; });
    CHECK(CountValue(ternary) == counting::catalan(3));
}

TEST_CASE("sequence to tree") {
    const PlaneTree left = sequence_to_tree(BitString::parse("0001001"), 2);
    CHECK(left.str() == "((···)··)");
    CHECK(tree_to_sequence(left) == BitString::parse("0001001"));

    const PlaneTree right = sequence_to_tree(BitString::parse("0000011"), 2);
    CHECK(right.str() == "(··(···))");
    CHECK(tree_to_sequence(right) == BitString::parse("0000011"));

    CHECK(sequence_to_tree(BitString::parse("0"), 3).leaf());

    CHECK_THROWS_AS(sequence_to_tree(BitString::parse("0100"), 1), std::invalid_argument);
    CHECK_THROWS_AS(sequence_to_tree(BitString::parse("00"), 1), std::invalid_argument);
    CHECK_THROWS_AS(sequence_to_tree(BitString::parse("001001"), 2), std::invalid_argument);
}
