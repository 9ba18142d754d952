#include "doctest.h"

#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "qstack/counting.hpp"
#include "qstack/seqcore.hpp"

using counting::CountValue;

namespace {

// Brute-force oracle: number of q-satisfying strings of length m with a given
// number of ones (or any, when ones is SIZE_MAX).
std::uint64_t oracle_satisfying(std::size_t m, unsigned q, std::size_t ones = SIZE_MAX) {
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::size_t z = 0, o = 0;
        bool good = true;
        for (std::size_t i = 0; i < m && good; ++i) {
            if ((mask >> i) & 1) ++o; else ++z;
            if (z < static_cast<std::size_t>(q) * o) good = false;
        }
        if (good && (ones == SIZE_MAX || o == ones)) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("binomial") {
    CHECK(counting::binomial(5, 2) == CountValue(10));
    CHECK(counting::binomial(9, 3) == CountValue(84));
    CHECK(counting::binomial(4, 7).is_zero());
    CHECK(counting::binomial(4, -1).is_zero());
    CHECK(counting::binomial(0, 0) == CountValue(1));
    CHECK(counting::binomial(100, 50).to_decimal() == "100891344545564193334812497256");
}

TEST_CASE("catalan numbers") {
    CHECK(counting::catalan(0) == CountValue(1));
    // Oracle: ballot sequences of length 2k.
    CHECK(CountValue(oracle_satisfying(4, 1, 2)) == counting::catalan(2));
    CHECK(CountValue(oracle_satisfying(6, 1, 3)) == counting::catalan(3));
    CHECK(counting::catalan(2) == CountValue(2));
    CHECK(counting::catalan(3) == CountValue(5));
    CHECK(counting::catalan(20) == CountValue(6564120420ull));
    CHECK(counting::catalan(40).to_decimal() == "2622127042276492108820");
}

TEST_CASE("generalized catalan numbers") {
    CHECK(counting::generalized_catalan(2, 2) == CountValue(3));
    for (unsigned q = 0; q <= 4; ++q) CHECK(counting::generalized_catalan(0, q) == CountValue(1));
    CHECK(counting::generalized_catalan(3, 2) == CountValue(12));
    CHECK(CountValue(oracle_satisfying(9, 2, 3)) == counting::generalized_catalan(3, 2));
    for (std::size_t n = 0; n <= 8; ++n) {
        CHECK(counting::generalized_catalan(n, 1) == counting::catalan(n));
    }
}

TEST_CASE("count of q-satisfying sequences per ones") {
    CHECK(counting::count_q_satisfying(2, 2, 1) == CountValue(5));
    CHECK(CountValue(oracle_satisfying(5, 1, 2)) == CountValue(5));
    CHECK(counting::count_q_satisfying(0, 7, 2) == CountValue(1));
    CHECK(counting::count_q_satisfying(3, 1, 2) == counting::generalized_catalan(3, 2));
    CHECK_THROWS_AS(counting::count_q_satisfying(2, 0, 1), std::invalid_argument);
    // Closed form equals generalized Catalan at p = 1.
    for (unsigned q = 0; q <= 3; ++q) {
        for (std::size_t k = 0; k <= 8; ++k) {
            CHECK(counting::count_q_satisfying(k, 1, q) == counting::generalized_catalan(k, q));
        }
    }
}

TEST_CASE("count of q-satisfying sequences by length") {
    CHECK(counting::count_q_satisfying_length(9, 2) == CountValue(38));
    CHECK(CountValue(oracle_satisfying(9, 2)) == CountValue(38));
    for (unsigned q = 0; q <= 4; ++q) {
        CHECK(counting::count_q_satisfying_length(0, q) == CountValue(1));
    }
    CHECK(counting::count_q_satisfying_length(4, 1) == CountValue(6));
    CHECK(counting::count_q_satisfying_length(4, 1) == counting::count_q_stacks_total(4, 1));
}

TEST_CASE("stack counts") {
    CHECK(counting::count_q_stacks(4, 1, 1) == CountValue(3));
    CHECK(counting::count_q_stacks(9, 3, 2) == CountValue(12));
    CHECK(counting::count_q_stacks(4, 2, 1) == CountValue(2));
    CHECK(counting::count_q_stacks(4, 3, 1).is_zero());

    CHECK(counting::count_q_stacks_total(4, 1) == CountValue(6));
    CHECK(counting::count_q_stacks_total(5, 1) == CountValue(10));
    CHECK(counting::count_q_stacks_total(6, 2) == CountValue(8));
    CHECK_THROWS_AS(counting::count_q_stacks(4, 1, 0), std::invalid_argument);

    // Totals refine over n against the per-ones formula with p = m-(q+1)n+1.
    for (unsigned q = 1; q <= 3; ++q) {
        for (std::uint64_t m = 1; m <= 12; ++m) {
            for (std::uint64_t n = 0; (q + 1) * n <= m; ++n) {
                CHECK(counting::count_q_stacks(m, n, q) ==
                      counting::count_q_satisfying(n, m - (q + 1) * n + 1, q));
            }
        }
    }
}

TEST_CASE("arrangement counts via necklace formula") {
    CHECK(counting::count_arrangements(2, 3) == CountValue(2));
    CHECK(counting::count_arrangements(1, 1) == CountValue(1));
    CHECK(counting::count_arrangements(2, 2) == CountValue(2));
    for (std::size_t ones = 0; ones <= 6; ++ones) {
        for (std::size_t zeros = ones ? 0 : 1; ones + zeros <= 12; ++zeros) {
            CHECK(counting::count_arrangements(ones, zeros) ==
                  CountValue(seqcore::all_arrangements(ones, zeros).size()));
        }
    }
}

TEST_CASE("recurrence table") {
    const counting::CountTable table = counting::recurrence_table(12, 1);
    CHECK(table.at(4, 1) == CountValue(3));
    CHECK(table.at(1, 0) == CountValue(1));
    CHECK(table.at(1, 1).is_zero());
    for (std::size_t m = 1; m <= 12; ++m) CHECK(table.at(m, 0) == CountValue(1));

    const counting::CountTable table2 = counting::recurrence_table(12, 2);
    CHECK(table2.at(9, 3) == CountValue(12));

    for (unsigned q = 1; q <= 3; ++q) {
        const counting::CountTable t = counting::recurrence_table(25, q);
        for (std::size_t m = 1; m <= 25; ++m) {
            for (std::size_t n = 0; (q + 1) * n <= m; ++n) {
                CHECK(t.at(m, n) == counting::count_q_stacks(m, n, q));
            }
        }
    }
    CHECK_THROWS_AS(counting::recurrence_table(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(counting::recurrence_table(5, 0), std::invalid_argument);
}

TEST_CASE("recurrence table csv export") {
    const counting::CountTable table = counting::recurrence_table(4, 1);
    std::istringstream lines(table.to_csv());
    std::string line;
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        const auto first = line.find(',');
        const auto second = line.find(',', first + 1);
        const std::size_t m = std::stoul(line.substr(0, first));
        const std::size_t n = std::stoul(line.substr(first + 1, second - first - 1));
        CHECK(table.at(m, n).to_decimal() == line.substr(second + 1));
    }
    CHECK(rows == 1 + 2 + 2 + 3);  // n ranges 0..floor(m/2) for m = 1..4
}

TEST_CASE("composition recurrence for generalized catalan numbers") {
    CHECK(counting::hp_recurrence(1, 2) == CountValue(1));
    CHECK(counting::hp_recurrence(2, 2) == CountValue(3));
    CHECK(counting::hp_recurrence(4, 1) == CountValue(14));
    for (unsigned q = 1; q <= 3; ++q) {
        for (std::size_t n = 0; n <= 9; ++n) {
            CHECK(counting::hp_recurrence(n, q) == counting::generalized_catalan(n, q));
        }
    }
}

TEST_CASE("convolution recurrence for catalan numbers") {
    CHECK(counting::catalan_recurrence(0) == CountValue(1));
    CHECK(counting::catalan_recurrence(2) == CountValue(2));
    CHECK(counting::catalan_recurrence(5) == CountValue(42));
    CHECK(CountValue(oracle_satisfying(10, 1, 5)) == counting::catalan_recurrence(5));
    for (std::size_t n = 0; n <= 20; ++n) {
        CHECK(counting::catalan_recurrence(n) == counting::catalan(n));
    }
}
