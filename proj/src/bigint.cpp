#include "qstack/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace counting {

BigUint::BigUint(std::uint64_t v) {
    if (v != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(v));
        if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    }
}

std::uint64_t BigUint::to_u64() const {
    if (limbs_.size() > 2) throw std::overflow_error("BigUint does not fit in 64 bits");
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
    if (rhs.limbs_.size() > limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t sum = carry + limbs_[i];
        if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUint& BigUint::operator*=(std::uint32_t m) {
    if (m == 0) {
        limbs_.clear();
        return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        std::uint64_t prod = static_cast<std::uint64_t>(limb) * m + carry;
        limb = static_cast<std::uint32_t>(prod);
        carry = prod >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUint operator*(const BigUint& lhs, const BigUint& rhs) {
    BigUint out;
    if (lhs.is_zero() || rhs.is_zero()) return out;
    out.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            std::uint64_t cur = out.limbs_[i + j] + carry +
                                static_cast<std::uint64_t>(lhs.limbs_[i]) * rhs.limbs_[j];
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        out.limbs_[i + rhs.limbs_.size()] += static_cast<std::uint32_t>(carry);
    }
    out.trim();
    return out;
}

std::uint32_t BigUint::divmod_u32(std::uint32_t d) {
    if (d == 0) throw std::invalid_argument("division by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

BigUint& BigUint::exact_div(std::uint32_t d) {
    if (divmod_u32(d) != 0) throw std::logic_error("inexact division in counting formula");
    return *this;
}

std::strong_ordering BigUint::operator<=>(const BigUint& rhs) const {
    if (limbs_.size() != rhs.limbs_.size())
        return limbs_.size() <=> rhs.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
    }
    return std::strong_ordering::equal;
}

std::string BigUint::to_decimal() const {
    if (is_zero()) return "0";
    BigUint tmp = *this;
    std::vector<std::uint32_t> groups;
    while (!tmp.is_zero()) groups.push_back(tmp.divmod_u32(1000000000u));
    std::string out = std::to_string(groups.back());
    for (std::size_t i = groups.size() - 1; i-- > 0;) {
        std::string part = std::to_string(groups[i]);
        out.append(9 - part.size(), '0');
        out += part;
    }
    return out;
}

}  // namespace counting
