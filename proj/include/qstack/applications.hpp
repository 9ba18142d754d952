#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qstack/seqcore.hpp"

namespace applications {

// Number of indices i (1-based) whose i-th A sits strictly before the i-th B.
// Rejects words that are not over {A, B} with equal counts.
std::size_t chung_feller_statistic(std::string_view word);

// Exhaustive distribution of the statistic over all C(2n, n) words; entry l
// holds the number of words with statistic l. The guard keeps runaway
// exhaustions out; raise it deliberately.
std::vector<std::uint64_t> chung_feller_distribution(std::size_t n,
                                                     std::size_t max_exhaustive_n = 12);

// A cyclic list of integers summing to +1, direction fixed.
// Text form: comma-separated values, e.g. "2,-1,2,-5,3,-2,1,-2,3".
class IntegerCycle {
public:
    explicit IntegerCycle(std::vector<std::int64_t> values);
    static IntegerCycle parse(std::string_view text);

    std::size_t size() const { return values_.size(); }
    const std::vector<std::int64_t>& values() const { return values_; }
    std::int64_t operator[](std::size_t i) const { return values_[i]; }
    std::string str() const;

    bool operator==(const IntegerCycle&) const = default;

private:
    std::vector<std::int64_t> values_;
};

// 0/1 encoding of an integer cycle: each nonnegative entry becomes a single 1
// followed by 1+b zeros, each negative entry becomes 1-b ones followed by one
// 0. The result is a (k, k+1)-arrangement with k = n + sum|b|/2 rounded down.
struct MontaghEncoding {
    seqcore::CyclicArrangement arrangement;
    std::set<std::size_t> run_end_zeros;  // S: the zeros ending maximal 0-runs
    std::vector<std::size_t> entry_end;   // entry i -> index of its final 0
};

MontaghEncoding montagh_encode(const IntegerCycle& c);

struct CycleRotation {
    std::size_t start = 0;  // index into the cycle where the rotation begins
    std::vector<std::int64_t> values;
};

// Number of strictly positive partial sums of a linear list.
std::size_t positive_partial_sums(const std::vector<std::int64_t>& values);

// The unique rotation with exactly l positive partial sums, 1 <= l <= n.
// Computed through the encoded arrangement and cross-checked by scanning all
// rotations directly; a mismatch is a hard error.
CycleRotation montagh_linearization(const IntegerCycle& c, std::size_t l);

// Start index of the all-positive rotation: the position following the last
// minimum of the prefix sums over one period.
std::size_t raney_start(const IntegerCycle& c);

// A sequence over {+1, -q} of length (q+1)k+1 with exactly k terms equal to
// -q and every partial sum positive (which forces a leading +1).
class RaneySequence {
public:
    RaneySequence(unsigned q, std::vector<std::int64_t> terms);

    unsigned q() const { return q_; }
    std::size_t drops() const;  // k, the number of -q terms
    const std::vector<std::int64_t>& terms() const { return terms_; }
    std::string str() const;  // comma-separated terms

    bool operator==(const RaneySequence&) const = default;

private:
    unsigned q_;
    std::vector<std::int64_t> terms_;
};

// All q-Raney sequences with k drops; generalized_catalan(k, q) of them.
void enumerate_raney(std::size_t k, unsigned q,
                     const std::function<void(const RaneySequence&)>& visit);

// Rooted plane tree in which every internal node has the same number of
// ordered children. Text form: leaves are "·", internal nodes parenthesize
// their children.
struct PlaneTree {
    std::vector<PlaneTree> children;

    bool leaf() const { return children.empty(); }
    std::size_t internal_count() const;
    std::size_t leaf_count() const;
    std::string str() const;

    bool operator==(const PlaneTree&) const = default;
};

// All plane trees with n internal nodes of arity q+1 (and qn+1 leaves).
void enumerate_plane_trees(std::size_t n, unsigned q,
                           const std::function<void(const PlaneTree&)>& visit);

// Post-order encoding: 0 per leaf, 1 when an internal node's subtree closes.
seqcore::BitString tree_to_sequence(const PlaneTree& t);

// Stack evaluation: 0 pushes a leaf, 1 pops q+1 subtrees into a new node.
// Rejects strings that underflow the stack or leave more than one tree.
PlaneTree sequence_to_tree(const seqcore::BitString& s, unsigned q);

}  // namespace applications
