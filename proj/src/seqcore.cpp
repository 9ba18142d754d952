#include "qstack/seqcore.hpp"

#include <algorithm>
#include <stdexcept>

namespace seqcore {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) require(b == 0 || b == 1, "BitString elements must be 0 or 1");
}

BitString BitString::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        require(c == '0' || c == '1', "BitString text must consist of '0' and '1'");
        bits.push_back(c == '1');
    }
    return BitString(std::move(bits));
}

std::size_t BitString::ones() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::string BitString::str() const {
    std::string out;
    out.reserve(size());
    for (auto b : bits_) out.push_back(b ? '1' : '0');
    return out;
}

BitString BitString::prefix(std::size_t len) const {
    require(len <= size(), "prefix length out of range");
    return BitString(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + len));
}

BitString BitString::suffix_from(std::size_t pos) const {
    require(pos <= size(), "suffix position out of range");
    return BitString(std::vector<std::uint8_t>(bits_.begin() + pos, bits_.end()));
}

BitString BitString::with_inserted(std::size_t pos, std::uint8_t bit) const {
    require(pos <= size(), "insertion position out of range");
    std::vector<std::uint8_t> bits = bits_;
    bits.insert(bits.begin() + pos, bit);
    return BitString(std::move(bits));
}

BitString operator+(const BitString& lhs, const BitString& rhs) {
    std::vector<std::uint8_t> bits = lhs.bits_;
    bits.insert(bits.end(), rhs.bits_.begin(), rhs.bits_.end());
    return BitString(std::move(bits));
}

std::vector<PrefixCount> prefix_counts(const BitString& s) {
    std::vector<PrefixCount> out;
    out.reserve(s.size());
    PrefixCount running;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i]) ++running.ones; else ++running.zeros;
        out.push_back(running);
    }
    return out;
}

bool is_q_dominating(const BitString& s, unsigned q) {
    std::size_t zeros = 0, ones = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i]) ++ones; else ++zeros;
        if (zeros <= static_cast<std::size_t>(q) * ones) return false;
    }
    return true;
}

bool is_q_satisfying(const BitString& s, unsigned q) {
    std::size_t zeros = 0, ones = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i]) ++ones; else ++zeros;
        if (zeros < static_cast<std::size_t>(q) * ones) return false;
    }
    return true;
}

bool is_q_ballot(const BitString& s, unsigned q) {
    return s.zeros() == static_cast<std::size_t>(q) * s.ones() && is_q_satisfying(s, q);
}

std::size_t CyclicArrangement::canonical_offset(const std::vector<std::uint8_t>& bits) {
    const std::size_t n = bits.size();
    std::size_t best = 0;
    for (std::size_t cand = 1; cand < n; ++cand) {
        for (std::size_t i = 0; i < n; ++i) {
            std::uint8_t b = bits[(best + i) % n];
            std::uint8_t c = bits[(cand + i) % n];
            if (c != b) {
                if (c < b) best = cand;
                break;
            }
        }
    }
    return best;
}

CyclicArrangement::CyclicArrangement(std::vector<std::uint8_t> bits) {
    require(!bits.empty(), "CyclicArrangement must be nonempty");
    for (auto b : bits) require(b == 0 || b == 1, "CyclicArrangement elements must be 0 or 1");
    const std::size_t n = bits.size();
    const std::size_t off = canonical_offset(bits);
    bits_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) bits_.push_back(bits[(off + i) % n]);
}

CyclicArrangement::CyclicArrangement(const BitString& representative)
    : CyclicArrangement(representative.bits()) {}

CyclicArrangement CyclicArrangement::parse(std::string_view text) {
    require(text.substr(0, 4) == "cyc:", "arrangement text must start with \"cyc:\"");
    return CyclicArrangement(BitString::parse(text.substr(4)));
}

std::size_t CyclicArrangement::ones() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::string CyclicArrangement::str() const {
    std::string out = "cyc:";
    for (auto b : bits_) out.push_back(b ? '1' : '0');
    return out;
}

Deficiency deficiency(const CyclicArrangement& a, IntervalRef interval, unsigned q) {
    const std::size_t n = a.size();
    require(interval.start < n && interval.end < n, "interval indices out of range");
    // (r, r] is the full cycle.
    const std::size_t len = (interval.end + n - interval.start - 1) % n + 1;
    std::int64_t value = 0;
    std::size_t j = interval.start;
    for (std::size_t step = 0; step < len; ++step) {
        j = (j + 1) % n;
        value += a[j] ? static_cast<std::int64_t>(q) : -1;
    }
    return Deficiency{value};
}

std::set<std::size_t> good_zero_set(const CyclicArrangement& a, std::size_t r, unsigned q,
                                    const std::optional<std::set<std::size_t>>& restrict_to) {
    const std::size_t n = a.size();
    require(r < n, "cut index out of range");
    require(a[r] == 0, "good_zero_set requires a cut at a 0");
    if (restrict_to) {
        require(restrict_to->count(r) == 1, "restriction set must contain the cut");
        for (std::size_t idx : *restrict_to) {
            require(idx < n && a[idx] == 0, "restriction set must hold zero positions");
        }
    }
    std::set<std::size_t> good;
    std::int64_t delta = 0;
    std::size_t j = r;
    for (std::size_t step = 0; step < n; ++step) {
        j = (j + 1) % n;
        delta += a[j] ? static_cast<std::int64_t>(q) : -1;
        if (a[j] == 0 && delta < 0 && (!restrict_to || restrict_to->count(j))) good.insert(j);
    }
    return good;
}

BitString linearize(const CyclicArrangement& a, std::size_t cut) {
    const std::size_t n = a.size();
    require(cut < n, "cut index out of range");
    std::vector<std::uint8_t> bits;
    bits.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) bits.push_back(a[(cut + i) % n]);
    return BitString(std::move(bits));
}

void enumerate_bitstrings(std::size_t ones, std::size_t zeros,
                          const std::function<void(const BitString&)>& visit) {
    std::vector<std::uint8_t> bits(zeros, 0);
    bits.insert(bits.end(), ones, 1);
    do {
        visit(BitString(bits));
    } while (std::next_permutation(bits.begin(), bits.end()));
}

std::vector<BitString> all_bitstrings(std::size_t ones, std::size_t zeros) {
    std::vector<BitString> out;
    enumerate_bitstrings(ones, zeros, [&](const BitString& s) { out.push_back(s); });
    return out;
}

void enumerate_arrangements(std::size_t ones, std::size_t zeros,
                            const std::function<void(const CyclicArrangement&)>& visit) {
    require(ones + zeros > 0, "arrangements must be nonempty");
    enumerate_bitstrings(ones, zeros, [&](const BitString& s) {
        if (CyclicArrangement::canonical_offset(s.bits()) == 0) visit(CyclicArrangement(s));
    });
}

std::vector<CyclicArrangement> all_arrangements(std::size_t ones, std::size_t zeros) {
    std::vector<CyclicArrangement> out;
    enumerate_arrangements(ones, zeros, [&](const CyclicArrangement& a) { out.push_back(a); });
    return out;
}

namespace {

void satisfying_rec(std::vector<std::uint8_t>& bits, std::size_t length, unsigned q,
                    std::optional<std::size_t> target_ones, std::size_t zeros, std::size_t ones,
                    const std::function<void(const BitString&)>& visit) {
    if (bits.size() == length) {
        if (!target_ones || ones == *target_ones) visit(BitString(bits));
        return;
    }
    const std::size_t remaining = length - bits.size();
    if (target_ones) {
        if (ones > *target_ones) return;
        if (ones + remaining < *target_ones) return;
    }
    bits.push_back(0);
    satisfying_rec(bits, length, q, target_ones, zeros + 1, ones, visit);
    bits.pop_back();
    if (zeros >= static_cast<std::size_t>(q) * (ones + 1)) {
        bits.push_back(1);
        satisfying_rec(bits, length, q, target_ones, zeros, ones + 1, visit);
        bits.pop_back();
    }
}

}  // namespace

void enumerate_q_satisfying(std::size_t length, unsigned q, std::optional<std::size_t> ones,
                            const std::function<void(const BitString&)>& visit) {
    std::vector<std::uint8_t> bits;
    bits.reserve(length);
    satisfying_rec(bits, length, q, ones, 0, 0, visit);
}

}  // namespace seqcore
