#include "qstack/sweeps.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "qstack/applications.hpp"
#include "qstack/brickstack.hpp"
#include "qstack/counting.hpp"
#include "qstack/cyclelemma.hpp"
#include "qstack/seqcore.hpp"

namespace sweeps {

namespace {

constexpr std::size_t kMaxRecordedFailures = 32;

bool nested(const std::set<std::size_t>& inner, const std::set<std::size_t>& outer) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

}  // namespace

void SweepReport::fail(const std::string& instance, const std::string& property,
                       const std::string& observed, const std::string& expected) {
    ++failure_count;
    if (failures.size() < kMaxRecordedFailures) {
        failures.push_back(instance + ";" + property + ";" + observed + ";" + expected + ";FAIL");
    }
}

SweepReport cycle_lemma(std::size_t max_len, unsigned max_q) {
    SweepReport report("cycle");
    for (unsigned q = 0; q <= max_q; ++q) {
        for (std::size_t k = 0; k <= max_len; ++k) {
            for (std::size_t l = static_cast<std::size_t>(q) * k; k + l <= max_len; ++l) {
                if (k + l == 0) continue;
                const std::size_t p = l - static_cast<std::size_t>(q) * k;
                seqcore::enumerate_arrangements(k, l, [&](const seqcore::CyclicArrangement& a) {
                    ++report.checked;
                    const std::size_t cuts = cyclelemma::dominating_cuts(a, q).size();
                    if (cuts != p) {
                        report.fail(a.str() + " q=" + std::to_string(q), "dominating-cuts",
                                    std::to_string(cuts), std::to_string(p));
                    }
                });
            }
        }
    }
    return report;
}

SweepReport satisfying_counts(std::size_t max_m, unsigned max_q) {
    SweepReport report("satisfying-counts");
    for (unsigned q = 0; q <= max_q; ++q) {
        for (std::size_t m = 0; m <= max_m; ++m) {
            // One pass over all 2^m strings, tallying q-satisfying per ones.
            std::vector<std::uint64_t> by_ones(m + 1, 0);
            for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
                std::size_t zeros = 0, ones = 0;
                bool good = true;
                for (std::size_t i = 0; i < m; ++i) {
                    if ((mask >> i) & 1) ++ones; else ++zeros;
                    if (zeros < static_cast<std::size_t>(q) * ones) {
                        good = false;
                        break;
                    }
                }
                if (good) ++by_ones[ones];
            }
            std::uint64_t total = 0;
            for (std::size_t k = 0; k <= m; ++k) {
                total += by_ones[k];
                if (static_cast<std::size_t>(q + 1) * k > m) continue;
                ++report.checked;
                const std::size_t p = m - static_cast<std::size_t>(q + 1) * k + 1;
                const counting::CountValue formula = counting::count_q_satisfying(k, p, q);
                if (formula != counting::CountValue(by_ones[k])) {
                    report.fail("m=" + std::to_string(m) + ",k=" + std::to_string(k) +
                                    ",q=" + std::to_string(q),
                                "count-q-satisfying", std::to_string(by_ones[k]),
                                formula.to_decimal());
                }
            }
            ++report.checked;
            const counting::CountValue formula = counting::count_q_satisfying_length(m, q);
            if (formula != counting::CountValue(total)) {
                report.fail("m=" + std::to_string(m) + ",q=" + std::to_string(q),
                            "count-q-satisfying-length", std::to_string(total),
                            formula.to_decimal());
            }
        }
    }
    return report;
}

SweepReport strong_lemma(std::size_t max_len, unsigned max_q) {
    SweepReport report("strong");
    for (unsigned q = 0; q <= max_q; ++q) {
        for (std::size_t k = 0; static_cast<std::size_t>(q) * k + k + 1 <= max_len; ++k) {
            const std::size_t zeros = static_cast<std::size_t>(q) * k + 1;
            seqcore::enumerate_arrangements(k, zeros, [&](const seqcore::CyclicArrangement& a) {
                ++report.checked;
                const auto profile = cyclelemma::good_count_profile(a, q);
                std::map<std::size_t, std::size_t> by_count;  // count -> cut
                std::set<std::size_t> seen;
                for (const auto& [cut, count] : profile) {
                    if (count < 1 || count > zeros || !seen.insert(count).second) {
                        report.fail(a.str() + " q=" + std::to_string(q), "profile-bijection",
                                    std::to_string(count), "each of 1.." + std::to_string(zeros));
                        return;
                    }
                    by_count[count] = cut;
                }
                if (seen.size() != zeros) {
                    report.fail(a.str() + " q=" + std::to_string(q), "profile-size",
                                std::to_string(seen.size()), std::to_string(zeros));
                    return;
                }
                // Nesting: the good sets grow with the good count.
                std::set<std::size_t> previous;
                for (const auto& [count, cut] : by_count) {
                    const auto good = seqcore::good_zero_set(a, cut, q);
                    if (!nested(previous, good)) {
                        report.fail(a.str() + " q=" + std::to_string(q), "nesting",
                                    "set(" + std::to_string(count) + ")",
                                    "superset of set(" + std::to_string(count - 1) + ")");
                    }
                    previous = good;
                }
            });
        }
    }
    return report;
}

SweepReport stronger_lemma(std::size_t max_len, unsigned max_q) {
    SweepReport report("stronger");
    for (unsigned q = 0; q <= max_q; ++q) {
        for (std::size_t k = 0; static_cast<std::size_t>(q) * k + k + 1 <= max_len; ++k) {
            const std::size_t zeros = static_cast<std::size_t>(q) * k + 1;
            seqcore::enumerate_arrangements(k, zeros, [&](const seqcore::CyclicArrangement& a) {
                std::vector<std::size_t> zero_positions;
                for (std::size_t i = 0; i < a.size(); ++i) {
                    if (a[i] == 0) zero_positions.push_back(i);
                }
                for (std::uint64_t mask = 1; mask < (1ull << zero_positions.size()); ++mask) {
                    std::set<std::size_t> s;
                    for (std::size_t bit = 0; bit < zero_positions.size(); ++bit) {
                        if ((mask >> bit) & 1) s.insert(zero_positions[bit]);
                    }
                    ++report.checked;
                    std::map<std::size_t, std::set<std::size_t>> by_count;
                    bool bad = false;
                    for (std::size_t r : s) {
                        auto good = seqcore::good_zero_set(a, r, q, s);
                        if (good.size() < 1 || good.size() > s.size() ||
                            !by_count.emplace(good.size(), std::move(good)).second) {
                            bad = true;
                            break;
                        }
                    }
                    if (bad || by_count.size() != s.size()) {
                        report.fail(a.str() + " q=" + std::to_string(q) + " |S|=" +
                                        std::to_string(s.size()),
                                    "restricted-profile", "collision-or-gap",
                                    "each of 1..|S| once");
                        continue;
                    }
                    std::set<std::size_t> previous;
                    for (const auto& [count, good] : by_count) {
                        if (!nested(previous, good)) {
                            report.fail(a.str() + " q=" + std::to_string(q), "restricted-nesting",
                                        std::to_string(count), "nested chain");
                        }
                        previous = good;
                    }
                }
            });
        }
    }
    return report;
}

SweepReport extended_lemma(std::size_t max_len, std::size_t max_p, unsigned max_q) {
    SweepReport report("extended");
    for (unsigned q = 0; q <= max_q; ++q) {
        for (std::size_t k = 0; k <= max_len; ++k) {
            for (std::size_t p = 1; p <= max_p; ++p) {
                const std::size_t zeros = static_cast<std::size_t>(q) * k + p;
                if (k + zeros > max_len) continue;
                seqcore::enumerate_arrangements(k, zeros, [&](const seqcore::CyclicArrangement& a) {
                    ++report.checked;
                    for (const auto& check : cyclelemma::extended_bounds_check(a, q)) {
                        if (check.observed < check.bound) {
                            report.fail(a.str() + " q=" + std::to_string(q) + " i=" +
                                            std::to_string(check.target_i),
                                        "extended-bound", std::to_string(check.observed),
                                        ">=" + std::to_string(check.bound));
                        }
                    }
                });
            }
        }
    }
    return report;
}

SweepReport blocked_tightness(std::size_t max_len, std::size_t max_p, unsigned max_q) {
    SweepReport report("blocked");
    for (unsigned q = 0; q <= max_q; ++q) {
        for (std::size_t k = 0; k <= max_len; ++k) {
            for (std::size_t p = 1; p <= max_p; ++p) {
                const std::size_t zeros = static_cast<std::size_t>(q) * k + p;
                if (k + zeros > max_len) continue;
                std::vector<std::uint8_t> bits(k, 1);
                bits.insert(bits.end(), zeros, 0);
                const seqcore::CyclicArrangement blocked{std::move(bits)};
                ++report.checked;
                for (const auto& check : cyclelemma::extended_bounds_check(blocked, q)) {
                    if (check.observed != check.bound) {
                        report.fail(blocked.str() + " q=" + std::to_string(q) + " i=" +
                                        std::to_string(check.target_i),
                                    "blocked-equality", std::to_string(check.observed),
                                    std::to_string(check.bound));
                    }
                }
            }
        }
    }
    return report;
}

SweepReport augmentation(std::size_t max_len, unsigned max_q) {
    SweepReport report("augmentation");
    for (unsigned q = 0; q <= max_q; ++q) {
        for (std::size_t len = 1; len <= max_len; ++len) {
            for (std::uint64_t mask = 0; mask < (1ull << len); ++mask) {
                std::vector<std::uint8_t> bits(len);
                for (std::size_t i = 0; i < len; ++i) bits[i] = (mask >> i) & 1;
                const seqcore::BitString b{std::move(bits)};
                if (b[len - 1] != 0) continue;
                if (b.zeros() <= static_cast<std::size_t>(q) * b.ones()) continue;
                for (std::size_t pos = 0; pos <= len; ++pos) {
                    ++report.checked;
                    const auto result = cyclelemma::augmentation_insert(b, pos, q);
                    if (result.good_after <= result.good_before) {
                        report.fail(b.str() + " q=" + std::to_string(q) + " pos=" +
                                        std::to_string(pos),
                                    "augmentation", std::to_string(result.good_after),
                                    ">" + std::to_string(result.good_before));
                    }
                }
            }
        }
    }
    return report;
}

SweepReport position_sum(std::size_t max_total) {
    SweepReport report("position-sum");
    for (std::size_t k = 0; k <= max_total; ++k) {
        for (std::size_t l = 1; k + l <= max_total; ++l) {
            if (std::gcd(k, l) != 1) continue;
            seqcore::enumerate_arrangements(k, l, [&](const seqcore::CyclicArrangement& a) {
                ++report.checked;
                const auto sums = cyclelemma::position_sums(a);
                std::set<std::uint64_t> residues;
                for (const auto& [cut, sum] : sums) residues.insert(sum % l);
                if (residues.size() != sums.size()) {
                    report.fail(a.str(), "position-sum-residues", std::to_string(residues.size()),
                                std::to_string(sums.size()));
                }
            });
        }
    }
    return report;
}

SweepReport chung_feller(std::size_t max_n) {
    SweepReport report("chung-feller");
    for (std::size_t n = 1; n <= max_n; ++n) {
        ++report.checked;
        const auto counts = applications::chung_feller_distribution(n, max_n);
        counting::CountValue expected = counting::binomial(2 * n, static_cast<std::int64_t>(n));
        expected.exact_div(static_cast<std::uint32_t>(n + 1));
        for (std::size_t l = 0; l <= n; ++l) {
            if (counting::CountValue(counts[l]) != expected) {
                report.fail("n=" + std::to_string(n) + ",l=" + std::to_string(l),
                            "chung-feller-uniform", std::to_string(counts[l]),
                            expected.to_decimal());
            }
        }
    }
    return report;
}

namespace {

// Shared checks for one integer cycle: every l realized exactly once, the
// dual-route linearization, the nesting of positive-partial-sum positions,
// and the geometric start rule at l = n.
void check_cycle(const applications::IntegerCycle& c, SweepReport& report) {
    const std::size_t n = c.size();
    ++report.checked;

    std::vector<std::set<std::size_t>> positive_positions(n + 1);
    std::vector<std::size_t> starts(n + 1, n);
    for (std::size_t start = 0; start < n; ++start) {
        std::int64_t sum = 0;
        std::set<std::size_t> positions;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t idx = (start + i) % n;
            sum += c[idx];
            if (sum > 0) positions.insert(idx);
        }
        const std::size_t l = positions.size();
        if (l < 1 || l > n || starts[l] != n) {
            report.fail(c.str(), "rotation-counts", "duplicate-or-out-of-range l=" +
                            std::to_string(l), "each l once");
            return;
        }
        starts[l] = start;
        positive_positions[l] = std::move(positions);
    }
    for (std::size_t l = 1; l <= n; ++l) {
        const auto rotation = applications::montagh_linearization(c, l);
        if (rotation.start != starts[l]) {
            report.fail(c.str() + " l=" + std::to_string(l), "montagh-start",
                        std::to_string(rotation.start), std::to_string(starts[l]));
        }
        if (l > 1 && !nested(positive_positions[l - 1], positive_positions[l])) {
            report.fail(c.str() + " l=" + std::to_string(l), "montagh-nesting", "not-nested",
                        "nested");
        }
    }
    if (applications::raney_start(c) != starts[n]) {
        report.fail(c.str(), "raney-start", std::to_string(applications::raney_start(c)),
                    std::to_string(starts[n]));
    }
}

}  // namespace

SweepReport montagh_exhaustive(std::size_t max_n, std::int64_t entry_bound) {
    SweepReport report("montagh-exhaustive");
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::vector<std::int64_t> values(n, -entry_bound);
        while (true) {
            std::int64_t sum = 0;
            for (std::int64_t v : values) sum += v;
            if (sum == 1) check_cycle(applications::IntegerCycle(values), report);
            std::size_t idx = 0;
            while (idx < n && values[idx] == entry_bound) {
                values[idx] = -entry_bound;
                ++idx;
            }
            if (idx == n) break;
            ++values[idx];
        }
    }
    return report;
}

SweepReport montagh_random(std::size_t samples, std::size_t max_n, std::int64_t entry_bound,
                           std::uint64_t seed) {
    SweepReport report("montagh-random");
    if (max_n < 1 || entry_bound < 1)
        throw std::invalid_argument("montagh sampling needs max_n >= 1 and entry_bound >= 1");
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    auto draw = [&](std::uint32_t span) { return static_cast<std::int64_t>(rng() % span); };
    const std::uint32_t span = static_cast<std::uint32_t>(2 * entry_bound + 1);
    std::size_t produced = 0;
    while (produced < samples) {
        const std::size_t n = 1 + static_cast<std::size_t>(draw(static_cast<std::uint32_t>(max_n)));
        std::vector<std::int64_t> values;
        values.reserve(n);
        std::int64_t sum = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            values.push_back(draw(span) - entry_bound);
            sum += values.back();
        }
        const std::int64_t last = 1 - sum;
        if (last < -entry_bound || last > entry_bound) continue;
        values.push_back(last);
        check_cycle(applications::IntegerCycle(std::move(values)), report);
        ++produced;
    }
    return report;
}

SweepReport catalan_models(std::size_t max_k, unsigned max_q, std::size_t tree_max_n) {
    SweepReport report("catalan-models");
    for (unsigned q = 1; q <= max_q; ++q) {
        for (std::size_t k = 0; k <= max_k; ++k) {
            const counting::CountValue expected = counting::generalized_catalan(k, q);
            ++report.checked;
            std::uint64_t raney = 0;
            applications::enumerate_raney(k, q,
                                          [&](const applications::RaneySequence&) { ++raney; });
            if (counting::CountValue(raney) != expected) {
                report.fail("k=" + std::to_string(k) + ",q=" + std::to_string(q), "raney-count",
                            std::to_string(raney), expected.to_decimal());
            }

            // q-ballot strings with k ones vs (k, qk+1)-arrangements.
            std::uint64_t ballots = 0;
            seqcore::enumerate_q_satisfying((q + 1) * k, q, k,
                                            [&](const seqcore::BitString&) { ++ballots; });
            std::uint64_t arrangements = 0;
            seqcore::enumerate_arrangements(k, static_cast<std::size_t>(q) * k + 1,
                                            [&](const seqcore::CyclicArrangement&) {
                                                ++arrangements;
                                            });
            if (ballots != arrangements || counting::CountValue(ballots) != expected) {
                report.fail("k=" + std::to_string(k) + ",q=" + std::to_string(q),
                            "ballot-vs-arrangement",
                            std::to_string(ballots) + "/" + std::to_string(arrangements),
                            expected.to_decimal());
            }

            if (k <= tree_max_n) {
                std::uint64_t trees = 0;
                applications::enumerate_plane_trees(k, q, [&](const applications::PlaneTree& t) {
                    ++trees;
                    const seqcore::BitString code = applications::tree_to_sequence(t);
                    if (!t.leaf() && !(applications::sequence_to_tree(code, q) == t)) {
                        report.fail("k=" + std::to_string(k) + ",q=" + std::to_string(q),
                                    "tree-round-trip", code.str(), t.str());
                    }
                });
                if (counting::CountValue(trees) != expected) {
                    report.fail("k=" + std::to_string(k) + ",q=" + std::to_string(q), "tree-count",
                                std::to_string(trees), expected.to_decimal());
                }
            }
        }
    }
    return report;
}

SweepReport bijection(std::size_t max_m, unsigned max_q) {
    SweepReport report("bijection");
    for (unsigned q = 1; q <= max_q; ++q) {
        for (std::size_t m = 1; m <= max_m; ++m) {
            std::set<std::string> images;
            std::map<std::size_t, std::uint64_t> per_n;
            std::uint64_t stacks = 0;
            brickstack::enumerate_stacks(m, q, [&](const brickstack::BrickStack& s) {
                ++stacks;
                ++report.checked;
                const std::string id = s.str();
                if (!brickstack::validate(s).ok()) {
                    report.fail(id, "enumerated-valid", "invalid", "valid");
                    return;
                }
                const seqcore::BitString image = brickstack::stack_to_sequence(s);
                if (!seqcore::is_q_satisfying(image, q)) {
                    report.fail(id, "image-satisfying", image.str(), "q-satisfying");
                }
                if (image.ones() != s.base_brick_count()) {
                    report.fail(id, "ones-refinement", std::to_string(image.ones()),
                                std::to_string(s.base_brick_count()));
                }
                if (!images.insert(image.str()).second) {
                    report.fail(id, "injectivity", image.str(), "fresh image");
                }
                ++per_n[s.base_brick_count()];
                const bool covers_first = !s.rows.empty() && !s.rows[0].empty() &&
                                          s.rows[0][0] == 0;
                if (seqcore::is_q_dominating(image, q) != !covers_first) {
                    report.fail(id, "dominating-characterization", image.str(),
                                "dominating iff first space uncovered");
                }
                const auto back = brickstack::sequence_to_stack(image, q);
                if (!(back == s)) {
                    report.fail(id, "round-trip", back.str(), id);
                }
                // Concatenation across the first return.
                const auto ret = brickstack::first_return(s);
                if (ret && *ret < m) {
                    brickstack::BrickStack left{q, *ret, {}}, right{q, m - *ret, {}};
                    bool spanning = false;
                    for (const auto& row : s.rows) {
                        std::vector<std::size_t> lrow, rrow;
                        for (std::size_t start : row) {
                            if (start + q + 1 <= *ret) lrow.push_back(start);
                            else if (start >= *ret) rrow.push_back(start - *ret);
                            else spanning = true;
                        }
                        left.rows.push_back(lrow);
                        right.rows.push_back(rrow);
                    }
                    if (spanning) {
                        report.fail(id, "concatenation", "brick spans the first return",
                                    "clean split");
                        return;
                    }
                    while (!left.rows.empty() && left.rows.back().empty()) left.rows.pop_back();
                    while (!right.rows.empty() && right.rows.back().empty()) right.rows.pop_back();
                    const auto glued = brickstack::stack_to_sequence(left) +
                                       brickstack::stack_to_sequence(right);
                    if (!(glued == image)) {
                        report.fail(id, "concatenation", glued.str(), image.str());
                    }
                }
            });
            // Image set must be exactly the q-satisfying strings of length m.
            std::uint64_t satisfying = 0;
            seqcore::enumerate_q_satisfying(m, q, std::nullopt, [&](const seqcore::BitString& b) {
                ++satisfying;
                if (images.find(b.str()) == images.end()) {
                    report.fail("m=" + std::to_string(m) + ",q=" + std::to_string(q),
                                "surjectivity", b.str(), "in image");
                }
            });
            if (satisfying != stacks) {
                report.fail("m=" + std::to_string(m) + ",q=" + std::to_string(q), "cardinality",
                            std::to_string(stacks), std::to_string(satisfying));
            }
            for (const auto& [n, observed] : per_n) {
                const counting::CountValue expected = counting::count_q_stacks(m, n, q);
                if (counting::CountValue(observed) != expected) {
                    report.fail("m=" + std::to_string(m) + ",n=" + std::to_string(n) +
                                    ",q=" + std::to_string(q),
                                "per-n-count", std::to_string(observed), expected.to_decimal());
                }
            }
        }
        // Coin-stacking specialization: full bases of length (q+1)n at q = 1.
        if (q == 1) {
            for (std::size_t n = 1; 2 * n <= max_m; ++n) {
                ++report.checked;
                std::uint64_t full = 0;
                brickstack::enumerate_stacks(2 * n, 1, [&](const brickstack::BrickStack& s) {
                    if (s.base_brick_count() == n) ++full;
                });
                if (counting::CountValue(full) != counting::catalan(n)) {
                    report.fail("n=" + std::to_string(n), "coin-stacks", std::to_string(full),
                                counting::catalan(n).to_decimal());
                }
            }
        }
    }
    return report;
}

SweepReport recurrences(std::size_t table_m_max, unsigned max_q, std::size_t hp_max_n,
                        std::size_t catalan_max_n) {
    SweepReport report("recurrences");
    for (unsigned q = 1; q <= max_q; ++q) {
        const counting::CountTable table = counting::recurrence_table(table_m_max, q);
        for (std::size_t m = 1; m <= table_m_max; ++m) {
            for (std::size_t n = 0; n * (q + 1) <= m; ++n) {
                ++report.checked;
                const counting::CountValue closed = counting::count_q_stacks(m, n, q);
                if (table.at(m, n) != closed) {
                    report.fail("m=" + std::to_string(m) + ",n=" + std::to_string(n) +
                                    ",q=" + std::to_string(q),
                                "table-vs-closed-form", table.at(m, n).to_decimal(),
                                closed.to_decimal());
                }
            }
        }
        for (std::size_t n = 0; n <= hp_max_n; ++n) {
            ++report.checked;
            const counting::CountValue viaHp = counting::hp_recurrence(n, q);
            const counting::CountValue closed = counting::generalized_catalan(n, q);
            if (viaHp != closed) {
                report.fail("n=" + std::to_string(n) + ",q=" + std::to_string(q),
                            "hp-recurrence", viaHp.to_decimal(), closed.to_decimal());
            }
        }
    }
    for (std::size_t n = 0; n <= catalan_max_n; ++n) {
        ++report.checked;
        const counting::CountValue viaRec = counting::catalan_recurrence(n);
        if (viaRec != counting::catalan(n) ||
            viaRec != counting::generalized_catalan(n, 1)) {
            report.fail("n=" + std::to_string(n), "catalan-recurrence", viaRec.to_decimal(),
                        counting::catalan(n).to_decimal());
        }
    }
    return report;
}

SweepReport periodic_family(std::size_t max_k, unsigned max_q, std::size_t max_t) {
    SweepReport report("periodic");
    for (std::size_t k = 1; k <= max_k; ++k) {
        for (unsigned q = 1; q <= max_q; ++q) {
            for (std::size_t t = 1; t <= max_t; ++t) {
                ++report.checked;
                const auto family = cyclelemma::periodic_arrangement(k, q, t);
                const std::size_t total_zeros = (q + t) * k;
                const auto profile = cyclelemma::good_count_profile(family.arrangement, q);
                // Classify each 0-linearization by the position of its first 1
                // and compare against the predicted not-good count. Beyond
                // position q+1 every 0-interval must be q-good.
                std::map<std::size_t, std::size_t> class_size;
                for (const auto& [cut, good] : profile) {
                    const seqcore::BitString lin = seqcore::linearize(family.arrangement, cut);
                    std::size_t first_one = 0;
                    while (first_one < lin.size() && lin[first_one] == 0) ++first_one;
                    ++class_size[std::min(first_one, static_cast<std::size_t>(q) + 1)];
                    const std::size_t predicted =
                        first_one > q ? 0 : family.predicted_not_good[first_one];
                    if (total_zeros - good != predicted) {
                        report.fail("k=" + std::to_string(k) + ",q=" + std::to_string(q) +
                                        ",t=" + std::to_string(t) + ",cut=" + std::to_string(cut),
                                    "periodic-not-good", std::to_string(total_zeros - good),
                                    std::to_string(predicted));
                    }
                }
                for (std::size_t j = 0; j <= q; ++j) {
                    if (class_size[j] != k) {
                        report.fail("k=" + std::to_string(k) + ",q=" + std::to_string(q) +
                                        ",t=" + std::to_string(t) + ",j=" + std::to_string(j),
                                    "periodic-class-size", std::to_string(class_size[j]),
                                    std::to_string(k));
                    }
                }
                // For k > 1 every 0-linearization has more than p good intervals.
                if (k > 1) {
                    const std::size_t p = t * k;
                    for (const auto& [cut, good] : profile) {
                        if (good <= p) {
                            report.fail("k=" + std::to_string(k) + ",q=" + std::to_string(q) +
                                            ",t=" + std::to_string(t),
                                        "periodic-above-p", std::to_string(good),
                                        ">" + std::to_string(p));
                        }
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace sweeps
