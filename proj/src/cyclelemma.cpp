#include "qstack/cyclelemma.hpp"

#include <numeric>
#include <stdexcept>

namespace cyclelemma {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// p = zeros - q*ones, rejecting arrangements outside the (k, qk+p) family.
std::size_t derive_p(const seqcore::CyclicArrangement& a, unsigned q) {
    const std::size_t needed = static_cast<std::size_t>(q) * a.ones();
    require(a.zeros() >= needed, "arrangement has fewer zeros than q times ones");
    return a.zeros() - needed;
}

}  // namespace

std::vector<std::size_t> dominating_cuts(const seqcore::CyclicArrangement& a, unsigned q) {
    derive_p(a, q);
    const std::size_t n = a.size();
    std::vector<std::size_t> cuts;
    for (std::size_t start = 0; start < n; ++start) {
        std::size_t zeros = 0, ones = 0;
        bool dominating = true;
        for (std::size_t step = 0; step < n; ++step) {
            if (a[(start + step) % n]) ++ones; else ++zeros;
            if (zeros <= static_cast<std::size_t>(q) * ones) {
                dominating = false;
                break;
            }
        }
        if (dominating) cuts.push_back(start);
    }
    return cuts;
}

LinearizationReport strong_linearization(const seqcore::CyclicArrangement& a, std::size_t i,
                                         unsigned q) {
    const std::size_t p = derive_p(a, q);
    require(p == 1, "strong cycle lemma requires a (k, qk+1)-arrangement");
    require(i >= 1 && i <= a.zeros(), "good-interval target out of range");
    std::vector<LinearizationReport> matches;
    for (std::size_t r = 0; r < a.size(); ++r) {
        if (a[r] != 0) continue;
        std::set<std::size_t> good = good_zero_set(a, r, q);
        if (good.size() == i) matches.push_back(LinearizationReport{r, std::move(good), i});
    }
    if (matches.size() != 1)
        throw std::logic_error("strong cycle lemma: target count not realized uniquely");
    return matches.front();
}

LinearizationReport stronger_linearization(const seqcore::CyclicArrangement& a,
                                           const std::set<std::size_t>& s, std::size_t i,
                                           unsigned q) {
    const std::size_t p = derive_p(a, q);
    require(p == 1, "stronger cycle lemma requires a (k, qk+1)-arrangement");
    require(!s.empty(), "restriction set must be nonempty");
    for (std::size_t idx : s) require(idx < a.size() && a[idx] == 0,
                                      "restriction set must hold zero positions");
    require(i >= 1 && i <= s.size(), "good-interval target out of range");
    std::vector<LinearizationReport> matches;
    for (std::size_t r : s) {
        std::set<std::size_t> good = good_zero_set(a, r, q, s);
        if (good.size() == i) matches.push_back(LinearizationReport{r, std::move(good), i});
    }
    if (matches.size() != 1)
        throw std::logic_error("stronger cycle lemma: target count not realized uniquely");
    return matches.front();
}

std::map<std::size_t, std::size_t> good_count_profile(const seqcore::CyclicArrangement& a,
                                                      unsigned q) {
    std::map<std::size_t, std::size_t> profile;
    for (std::size_t r = 0; r < a.size(); ++r) {
        if (a[r] == 0) profile[r] = good_zero_set(a, r, q).size();
    }
    return profile;
}

std::vector<BoundCheck> extended_bounds_check(const seqcore::CyclicArrangement& a, unsigned q) {
    const std::size_t p = derive_p(a, q);
    require(p >= 1, "extended strong cycle lemma requires p >= 1");
    const std::size_t qk = static_cast<std::size_t>(q) * a.ones();
    const auto profile = good_count_profile(a, q);
    std::vector<BoundCheck> checks;
    for (std::size_t i = p; i <= qk + p; ++i) {
        std::size_t observed = 0;
        for (const auto& [cut, count] : profile) {
            if (count >= i) ++observed;
        }
        checks.push_back(BoundCheck{i, observed, qk + 2 * p - i});
    }
    return checks;
}

std::size_t good_interval_count(const seqcore::BitString& b, unsigned q) {
    std::size_t zeros = 0, ones = 0, good = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i]) ++ones; else ++zeros;
        if (b[i] == 0 && zeros > static_cast<std::size_t>(q) * ones) ++good;
    }
    return good;
}

AugmentationResult augmentation_insert(const seqcore::BitString& b, std::size_t position,
                                       unsigned q) {
    require(!b.empty() && b[b.size() - 1] == 0, "augmentation requires a string ending in 0");
    require(b.zeros() > static_cast<std::size_t>(q) * b.ones(),
            "augmentation requires zeros > q*ones");
    require(position <= b.size(), "insertion position out of range");
    AugmentationResult result;
    result.good_before = good_interval_count(b, q);
    result.augmented = b.with_inserted(position, 0);
    result.good_after = good_interval_count(result.augmented, q);
    return result;
}

std::vector<std::pair<std::size_t, std::uint64_t>> position_sums(
    const seqcore::CyclicArrangement& a) {
    require(std::gcd(a.ones(), a.zeros()) == 1, "position sums require coprime counts");
    std::vector<std::pair<std::size_t, std::uint64_t>> sums;
    for (std::size_t cut = 0; cut < a.size(); ++cut) {
        if (a[cut] != 0) continue;
        const seqcore::BitString lin = seqcore::linearize(a, cut);
        std::uint64_t sum = 0;
        for (std::size_t i = 0; i < lin.size(); ++i) {
            if (lin[i]) sum += i + 1;
        }
        sums.emplace_back(cut, sum);
    }
    return sums;
}

PeriodicFamily periodic_arrangement(std::size_t k, unsigned q, std::size_t t) {
    require(k >= 1, "periodic family requires k >= 1");
    require(q >= 1, "periodic family requires q >= 1");
    require(t >= 1, "periodic family requires t >= 1");
    std::vector<std::uint8_t> bits;
    bits.reserve(k * (q + t + 1));
    for (std::size_t block = 0; block < k; ++block) {
        bits.push_back(1);
        bits.insert(bits.end(), q + t, 0);
    }
    std::vector<std::size_t> predicted(q + 1, 0);
    for (std::size_t j = 0; j <= q; ++j) {
        const std::size_t r = std::min(k - 1, (q - j) / t);
        std::size_t sum = 0;
        for (std::size_t i = 0; i <= r; ++i) sum += q - j - i * t;
        predicted[j] = sum;
    }
    return PeriodicFamily{seqcore::CyclicArrangement(std::move(bits)), std::move(predicted)};
}

}  // namespace cyclelemma
