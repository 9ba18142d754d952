#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace counting {

// Arbitrary-precision natural number. Every counting formula in this
// project runs on these; divisions are exact by construction and anything
// that would leave a remainder is a hard error, never a rounding.
//
// Representation: little-endian base-2^32 limbs, no trailing zero limbs
// (zero is the empty limb vector).
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v);

    bool is_zero() const { return limbs_.empty(); }

    // Throws std::overflow_error when the value does not fit.
    std::uint64_t to_u64() const;

    std::string to_decimal() const;

    BigUint& operator+=(const BigUint& rhs);
    friend BigUint operator+(BigUint lhs, const BigUint& rhs) {
        lhs += rhs;
        return lhs;
    }

    BigUint& operator*=(std::uint32_t m);
    friend BigUint operator*(const BigUint& lhs, const BigUint& rhs);

    // In-place quotient, returns the remainder. d must be nonzero.
    std::uint32_t divmod_u32(std::uint32_t d);

    // Division that must leave no remainder; throws std::logic_error
    // otherwise (a formula whose divisibility argument broke).
    BigUint& exact_div(std::uint32_t d);

    friend bool operator==(const BigUint&, const BigUint&) = default;
    std::strong_ordering operator<=>(const BigUint& rhs) const;

private:
    void trim();

    std::vector<std::uint32_t> limbs_;
};

// The value type of every count in the library.
using CountValue = BigUint;

}  // namespace counting
