#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qstack/bigint.hpp"

namespace counting {

// C(n, k); zero when k < 0 or k > n.
CountValue binomial(std::uint64_t n, std::int64_t k);

// C(2k, k) / (k + 1).
CountValue catalan(std::uint64_t k);

// C((q+1)n, n) / (qn + 1); equals catalan(n) when q == 1.
CountValue generalized_catalan(std::uint64_t n, unsigned q);

// Number of q-satisfying strings with k ones and qk+p-1 zeros:
// (p / (qk+p)) * C((q+1)k + p - 1, k). Requires p >= 1.
CountValue count_q_satisfying(std::uint64_t k, std::uint64_t p, unsigned q);

// Number of q-satisfying strings of length m (any number of ones).
CountValue count_q_satisfying_length(std::uint64_t m, unsigned q);

// Number of q-stacks on a base of length m with n bricks on the base:
// ((m - (q+1)n + 1) / (m - n + 1)) * C(m, n); zero when (q+1)n > m.
CountValue count_q_stacks(std::uint64_t m, std::uint64_t n, unsigned q);

// Total number of q-stacks on a base of length m, empty stack included.
CountValue count_q_stacks_total(std::uint64_t m, unsigned q);

// Number of rotation classes of cycles with the given content (Burnside).
CountValue count_arrangements(std::uint64_t ones, std::uint64_t zeros);

// Table of c_{m,n} = number of q-satisfying strings of length m with n ones,
// filled by the first-return recurrence (never by the closed form, so the two
// routes stay independent).
class CountTable {
public:
    CountTable(std::size_t m_max, unsigned q);

    unsigned q() const { return q_; }
    std::size_t m_max() const { return m_max_; }

    // Zero outside the stored range (n > m / (q+1)).
    CountValue at(std::size_t m, std::size_t n) const;

    // One "m,n,count" row per stored entry, 1 <= m <= m_max.
    std::string to_csv() const;

private:
    unsigned q_;
    std::size_t m_max_;
    std::vector<std::vector<CountValue>> rows_;  // rows_[m][n]
};

CountTable recurrence_table(std::size_t m_max, unsigned q);

// Composition recurrence for generalized Catalan numbers: parts range over
// nonnegative integers summing to n-1, q+1 of them.
CountValue hp_recurrence(std::uint64_t n, unsigned q);

// a_0 = 1, a_n = sum_{k=1..n} a_{k-1} a_{n-k}.
CountValue catalan_recurrence(std::uint64_t n);

}  // namespace counting
