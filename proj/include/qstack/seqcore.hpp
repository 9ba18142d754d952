#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace seqcore {

// A finite 0/1 sequence. Text form: a string over '0' and '1'.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::vector<std::uint8_t> bits);

    // Throws std::invalid_argument on characters outside {'0','1'}.
    static BitString parse(std::string_view text);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }
    std::size_t ones() const;
    std::size_t zeros() const { return size() - ones(); }
    std::string str() const;

    BitString prefix(std::size_t len) const;
    BitString suffix_from(std::size_t pos) const;
    BitString with_inserted(std::size_t pos, std::uint8_t bit) const;
    friend BitString operator+(const BitString& lhs, const BitString& rhs);

    bool operator==(const BitString&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

struct PrefixCount {
    std::size_t zeros = 0;
    std::size_t ones = 0;
    bool operator==(const PrefixCount&) const = default;
};

// Entry i holds the counts over the first i+1 bits.
std::vector<PrefixCount> prefix_counts(const BitString& s);

// Every nonempty prefix has zeros > q*ones. Vacuously true for the empty string.
bool is_q_dominating(const BitString& s, unsigned q);

// Every prefix has zeros >= q*ones.
bool is_q_satisfying(const BitString& s, unsigned q);

// q-satisfying with zeros == q*ones exactly.
bool is_q_ballot(const BitString& s, unsigned q);

// Rotation class of a nonempty 0/1 cycle with a fixed direction, stored as
// the lexicographically least rotation. Reversal is a different arrangement.
// Text form: "cyc:" followed by the representative's bits.
class CyclicArrangement {
public:
    explicit CyclicArrangement(const BitString& representative);
    explicit CyclicArrangement(std::vector<std::uint8_t> bits);
    static CyclicArrangement parse(std::string_view text);

    // Index at which the canonical (lexicographically least) rotation starts.
    static std::size_t canonical_offset(const std::vector<std::uint8_t>& bits);

    std::size_t size() const { return bits_.size(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }
    std::size_t ones() const;
    std::size_t zeros() const { return size() - ones(); }
    std::string str() const;

    bool operator==(const CyclicArrangement&) const = default;

private:
    std::vector<std::uint8_t> bits_;  // canonical representative
};

// The interval (start, end] of a cyclic arrangement, indices modulo length.
// (r, r] denotes the full cycle, never the empty list.
struct IntervalRef {
    std::size_t start = 0;
    std::size_t end = 0;
};

// q*w1(I) - w0(I). An interval is q-good iff the value is negative and the
// interval ends at a 0.
struct Deficiency {
    std::int64_t value = 0;
    bool operator==(const Deficiency&) const = default;
};

Deficiency deficiency(const CyclicArrangement& a, IntervalRef interval, unsigned q);

// D(r): the ends of q-good 0-intervals of the linearization (r, r], optionally
// restricted to a set S of zero positions. Requires a[r] == 0, and r in S with
// S holding only zero positions when S is given.
std::set<std::size_t> good_zero_set(const CyclicArrangement& a, std::size_t r, unsigned q,
                                    const std::optional<std::set<std::size_t>>& restrict_to =
                                        std::nullopt);

// The rotation a[cut+1], ..., a[cut].
BitString linearize(const CyclicArrangement& a, std::size_t cut);

// All C(ones+zeros, ones) strings, lexicographic order.
void enumerate_bitstrings(std::size_t ones, std::size_t zeros,
                          const std::function<void(const BitString&)>& visit);
std::vector<BitString> all_bitstrings(std::size_t ones, std::size_t zeros);

// One canonical representative per rotation class, in order of representative.
void enumerate_arrangements(std::size_t ones, std::size_t zeros,
                            const std::function<void(const CyclicArrangement&)>& visit);
std::vector<CyclicArrangement> all_arrangements(std::size_t ones, std::size_t zeros);

// q-satisfying strings of the given length in lexicographic order, optionally
// restricted to an exact count of ones.
void enumerate_q_satisfying(std::size_t length, unsigned q, std::optional<std::size_t> ones,
                            const std::function<void(const BitString&)>& visit);

}  // namespace seqcore
