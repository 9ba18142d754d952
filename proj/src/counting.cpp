#include "qstack/counting.hpp"

#include <numeric>
#include <stdexcept>

namespace counting {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

std::uint32_t checked_u32(std::uint64_t v, const char* what) {
    if (v > 0xffffffffull) throw std::invalid_argument(std::string("parameter too large: ") + what);
    return static_cast<std::uint32_t>(v);
}

}  // namespace

CountValue binomial(std::uint64_t n, std::int64_t k) {
    if (k < 0 || static_cast<std::uint64_t>(k) > n) return CountValue();
    std::uint64_t kk = static_cast<std::uint64_t>(k);
    if (kk > n - kk) kk = n - kk;
    CountValue result(1);
    for (std::uint64_t i = 1; i <= kk; ++i) {
        result = result * CountValue(n - kk + i);
        result.exact_div(checked_u32(i, "binomial index"));
    }
    return result;
}

CountValue catalan(std::uint64_t k) {
    CountValue c = binomial(2 * k, static_cast<std::int64_t>(k));
    c.exact_div(checked_u32(k + 1, "catalan divisor"));
    return c;
}

CountValue generalized_catalan(std::uint64_t n, unsigned q) {
    CountValue c = binomial((static_cast<std::uint64_t>(q) + 1) * n, static_cast<std::int64_t>(n));
    c.exact_div(checked_u32(static_cast<std::uint64_t>(q) * n + 1, "generalized catalan divisor"));
    return c;
}

CountValue count_q_satisfying(std::uint64_t k, std::uint64_t p, unsigned q) {
    require(p >= 1, "count_q_satisfying requires p >= 1");
    CountValue c = binomial((static_cast<std::uint64_t>(q) + 1) * k + p - 1,
                            static_cast<std::int64_t>(k));
    c *= checked_u32(p, "p");
    c.exact_div(checked_u32(static_cast<std::uint64_t>(q) * k + p, "count_q_satisfying divisor"));
    return c;
}

CountValue count_q_satisfying_length(std::uint64_t m, unsigned q) {
    CountValue total;
    for (std::uint64_t k = 0; (static_cast<std::uint64_t>(q) + 1) * k <= m; ++k) {
        CountValue term = binomial(m, static_cast<std::int64_t>(k));
        term *= checked_u32(m - (static_cast<std::uint64_t>(q) + 1) * k + 1, "weight");
        term.exact_div(checked_u32(m - k + 1, "count_q_satisfying_length divisor"));
        total += term;
    }
    return total;
}

CountValue count_q_stacks(std::uint64_t m, std::uint64_t n, unsigned q) {
    require(q >= 1, "q-stacks require q >= 1");
    if ((static_cast<std::uint64_t>(q) + 1) * n > m) return CountValue();
    CountValue c = binomial(m, static_cast<std::int64_t>(n));
    c *= checked_u32(m - (static_cast<std::uint64_t>(q) + 1) * n + 1, "weight");
    c.exact_div(checked_u32(m - n + 1, "count_q_stacks divisor"));
    return c;
}

CountValue count_q_stacks_total(std::uint64_t m, unsigned q) {
    require(q >= 1, "q-stacks require q >= 1");
    CountValue total;
    for (std::uint64_t n = 0; (static_cast<std::uint64_t>(q) + 1) * n <= m; ++n) {
        total += count_q_stacks(m, n, q);
    }
    return total;
}

CountValue count_arrangements(std::uint64_t ones, std::uint64_t zeros) {
    const std::uint64_t n = ones + zeros;
    require(n > 0, "arrangements must be nonempty");
    const std::uint64_t g = std::gcd(n, ones);
    CountValue total;
    for (std::uint64_t d = 1; d <= g; ++d) {
        if (g % d != 0) continue;
        // Euler phi by trial division.
        std::uint64_t phi = d, x = d;
        for (std::uint64_t f = 2; f * f <= x; ++f) {
            if (x % f == 0) {
                phi -= phi / f;
                while (x % f == 0) x /= f;
            }
        }
        if (x > 1) phi -= phi / x;
        CountValue term = binomial(n / d, static_cast<std::int64_t>(ones / d));
        term *= checked_u32(phi, "phi");
        total += term;
    }
    total.exact_div(checked_u32(n, "necklace divisor"));
    return total;
}

CountTable::CountTable(std::size_t m_max, unsigned q) : q_(q), m_max_(m_max) {
    require(q >= 1, "recurrence table requires q >= 1");
    require(m_max >= 1, "recurrence table requires m_max >= 1");
    const std::size_t period = q_ + 1;
    rows_.resize(m_max + 1);
    rows_[0] = {CountValue(1)};  // the empty sequence
    for (std::size_t m = 1; m <= m_max; ++m) {
        rows_[m].resize(m / period + 1);
        for (std::size_t n = 0; n <= m / period; ++n) {
            CountValue c = at(m - 1, n);
            if (n >= 1 && m == period * n) c += at(m - 2, n - 1);
            // Sequences whose shortest q-ballot prefix has k ones and ends
            // before m: the prefix is a q-ballot block with no proper
            // q-ballot prefix, counted by c_{(q+1)k-2, k-1} via the
            // strip-first-0-and-last-1 bijection.
            for (std::size_t k = 1; period * k < m && k <= n; ++k) {
                c += at(period * k - 2, k - 1) * at(m - period * k, n - k);
            }
            rows_[m][n] = std::move(c);
        }
    }
}

CountValue CountTable::at(std::size_t m, std::size_t n) const {
    if (m >= rows_.size() || n >= rows_[m].size()) return CountValue();
    return rows_[m][n];
}

std::string CountTable::to_csv() const {
    std::string out;
    for (std::size_t m = 1; m <= m_max_; ++m) {
        for (std::size_t n = 0; n < rows_[m].size(); ++n) {
            out += std::to_string(m);
            out += ',';
            out += std::to_string(n);
            out += ',';
            out += rows_[m][n].to_decimal();
            out += '\n';
        }
    }
    return out;
}

CountTable recurrence_table(std::size_t m_max, unsigned q) { return CountTable(m_max, q); }

CountValue hp_recurrence(std::uint64_t n, unsigned q) {
    require(q >= 1, "hp_recurrence requires q >= 1");
    std::vector<CountValue> h(n + 1);
    h[0] = CountValue(1);
    for (std::uint64_t j = 1; j <= n; ++j) {
        // (q+1)-fold convolution of h[0..j-1], evaluated at degree j-1.
        std::vector<CountValue> power(j, CountValue());
        power[0] = CountValue(1);
        for (unsigned step = 0; step <= q; ++step) {
            std::vector<CountValue> next(j, CountValue());
            for (std::uint64_t d = 0; d < j; ++d) {
                if (power[d].is_zero()) continue;
                for (std::uint64_t e = 0; d + e < j; ++e) {
                    next[d + e] += power[d] * h[e];
                }
            }
            power = std::move(next);
        }
        h[j] = power[j - 1];
    }
    return h[n];
}

CountValue catalan_recurrence(std::uint64_t n) {
    std::vector<CountValue> a(n + 1);
    a[0] = CountValue(1);
    for (std::uint64_t i = 1; i <= n; ++i) {
        CountValue sum;
        for (std::uint64_t k = 1; k <= i; ++k) sum += a[k - 1] * a[i - k];
        a[i] = std::move(sum);
    }
    return a[n];
}

}  // namespace counting
