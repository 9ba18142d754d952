#include "qstack/brickstack.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace brickstack {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

std::size_t brick_len(const BrickStack& s) { return static_cast<std::size_t>(s.q) + 1; }

void drop_trailing_empty_rows(BrickStack& s) {
    while (!s.rows.empty() && s.rows.back().empty()) s.rows.pop_back();
}

// Heights of the shaved outline at integer coordinates 0..m.
std::vector<std::size_t> outline_heights(const BrickStack& s) {
    std::vector<std::size_t> h(s.base_length + 1, 0);
    for (std::size_t r = 0; r < s.rows.size(); ++r) {
        for (std::size_t start : s.rows[r]) {
            for (std::size_t x = start; x <= start + brick_len(s); ++x) {
                const std::size_t profile =
                    (x == start || x == start + brick_len(s)) ? r : r + 1;
                if (x < h.size()) h[x] = std::max(h[x], profile);
            }
        }
    }
    return h;
}

}  // namespace

std::size_t BrickStack::brick_count() const {
    std::size_t total = 0;
    for (const auto& row : rows) total += row.size();
    return total;
}

std::string BrickStack::str() const {
    std::string out = "q=" + std::to_string(q) + ";m=" + std::to_string(base_length) + ";rows=";
    if (rows.empty()) {
        out += "[]";
        return out;
    }
    for (const auto& row : rows) {
        out += '[';
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(row[i]);
        }
        out += ']';
    }
    return out;
}

BrickStack BrickStack::parse(std::string_view text) {
    auto consume = [&](std::string_view prefix) {
        require(text.substr(0, prefix.size()) == prefix,
                "stack text must look like q=..;m=..;rows=[..]");
        text.remove_prefix(prefix.size());
    };
    auto read_number = [&]() -> std::size_t {
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        require(ec == std::errc() && ptr != text.data(), "expected a number in stack text");
        text.remove_prefix(static_cast<std::size_t>(ptr - text.data()));
        return value;
    };

    BrickStack s;
    consume("q=");
    s.q = static_cast<unsigned>(read_number());
    consume(";m=");
    s.base_length = read_number();
    consume(";rows=");
    while (!text.empty()) {
        consume("[");
        std::vector<std::size_t> row;
        if (!text.empty() && text.front() != ']') {
            row.push_back(read_number());
            while (!text.empty() && text.front() == ',') {
                text.remove_prefix(1);
                row.push_back(read_number());
            }
        }
        consume("]");
        std::sort(row.begin(), row.end());
        s.rows.push_back(std::move(row));
    }
    drop_trailing_empty_rows(s);
    return s;
}

ValidationResult validate(const BrickStack& s) {
    ValidationResult result;
    auto flag = [&](std::string msg) { result.violations.push_back(std::move(msg)); };
    if (s.q < 1) {
        flag("q must be positive");
        return result;
    }
    for (std::size_t r = 0; r < s.rows.size(); ++r) {
        if (!std::is_sorted(s.rows[r].begin(), s.rows[r].end())) {
            flag("row " + std::to_string(r + 1) + " start coordinates are not sorted");
            return result;
        }
    }
    const std::size_t len = brick_len(s);
    for (std::size_t r = 0; r < s.rows.size(); ++r) {
        const auto& row = s.rows[r];
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (r == 0 && row[i] + len > s.base_length) {
                flag("row 1 brick at " + std::to_string(row[i]) + " does not fit on the base");
            }
            if (i + 1 < row.size() && row[i + 1] < row[i] + len) {
                flag("row " + std::to_string(r + 1) + " bricks at " + std::to_string(row[i]) +
                     " and " + std::to_string(row[i + 1]) + " overlap");
            }
            if (r > 0) {
                // Needs a junction x of the row below strictly inside the span:
                // bricks ending and starting at x, with offset x - start in 1..q.
                bool supported = false;
                const auto& below = s.rows[r - 1];
                for (std::size_t x = row[i] + 1; x < row[i] + len; ++x) {
                    if (x < len) continue;
                    const bool left = std::binary_search(below.begin(), below.end(), x - len);
                    const bool right = std::binary_search(below.begin(), below.end(), x);
                    if (left && right) {
                        supported = true;
                        break;
                    }
                }
                if (!supported) {
                    flag("row " + std::to_string(r + 1) + " brick at " + std::to_string(row[i]) +
                         " lacks two contiguous supporters");
                }
            }
        }
    }
    return result;
}

Silhouette silhouette(const BrickStack& s) {
    const ValidationResult check = validate(s);
    if (!check.ok()) {
        std::string msg = "invalid stack:";
        for (const auto& v : check.violations) msg += " " + v + ";";
        throw std::invalid_argument(msg);
    }
    const std::vector<std::size_t> h = outline_heights(s);
    Silhouette out;
    out.steps.reserve(s.base_length);
    for (std::size_t x = 0; x + 1 < h.size(); ++x) {
        if (h[x + 1] == h[x]) out.steps.push_back(Step::Flat);
        else if (h[x + 1] == h[x] + 1) out.steps.push_back(Step::Up);
        else if (h[x + 1] + 1 == h[x]) out.steps.push_back(Step::Down);
        else throw std::logic_error("outline jumps by more than one unit");
    }
    return out;
}

namespace {

// Enumeration of the rows above a fixed lower row: walk the junction list,
// choosing skip or one of the q overhangs for each, then recurse on the row
// just completed. The all-skip leaf yields the stack, so shorter stacks come
// out before their extensions.
void extend_upward(BrickStack& s, const std::function<void(const BrickStack&)>& visit) {
    const std::size_t len = brick_len(s);
    std::vector<std::size_t> junctions;
    const auto& top = s.rows.back();
    for (std::size_t i = 0; i + 1 < top.size(); ++i) {
        if (top[i + 1] == top[i] + len) junctions.push_back(top[i + 1]);
    }

    std::vector<std::size_t> next_row;
    auto choose = [&](auto&& self, std::size_t idx) -> void {
        if (idx == junctions.size()) {
            if (next_row.empty()) {
                visit(s);
            } else {
                s.rows.push_back(next_row);
                extend_upward(s, visit);
                s.rows.pop_back();
            }
            return;
        }
        self(self, idx + 1);  // skip this junction
        for (unsigned a = 1; a <= s.q; ++a) {
            const std::size_t start = junctions[idx] - a;
            if (!next_row.empty() && start < next_row.back() + len) continue;
            next_row.push_back(start);
            self(self, idx + 1);
            next_row.pop_back();
        }
    };
    choose(choose, 0);
}

void base_rows(BrickStack& s, std::size_t next_start, std::size_t remaining,
               const std::function<void(const BrickStack&)>& visit) {
    if (remaining == 0) {
        extend_upward(s, visit);
        return;
    }
    const std::size_t len = brick_len(s);
    for (std::size_t start = next_start; start + len * remaining <= s.base_length; ++start) {
        s.rows[0].push_back(start);
        base_rows(s, start + len, remaining - 1, visit);
        s.rows[0].pop_back();
    }
}

}  // namespace

void enumerate_stacks(std::size_t m, unsigned q,
                      const std::function<void(const BrickStack&)>& visit) {
    require(q >= 1, "q-stacks require q >= 1");
    require(m >= 1, "q-stacks require a base of positive length");
    BrickStack empty{q, m, {}};
    visit(empty);
    const std::size_t len = static_cast<std::size_t>(q) + 1;
    for (std::size_t n = 1; n * len <= m; ++n) {
        BrickStack s{q, m, {{}}};
        base_rows(s, 0, n, visit);
    }
}

std::vector<BrickStack> all_stacks(std::size_t m, unsigned q) {
    std::vector<BrickStack> out;
    enumerate_stacks(m, q, [&](const BrickStack& s) { out.push_back(s); });
    return out;
}

namespace {

BrickStack shifted(const BrickStack& s, std::int64_t delta, std::size_t new_base) {
    BrickStack out{s.q, new_base, {}};
    out.rows.reserve(s.rows.size());
    for (const auto& row : s.rows) {
        std::vector<std::size_t> moved;
        moved.reserve(row.size());
        for (std::size_t start : row)
            moved.push_back(static_cast<std::size_t>(static_cast<std::int64_t>(start) + delta));
        out.rows.push_back(std::move(moved));
    }
    return out;
}

// Recursive first-return form of the map; assumes a valid stack.
seqcore::BitString map_recursive(const BrickStack& s) {
    const std::size_t m = s.base_length;
    if (m == 0) return seqcore::BitString();
    const std::size_t len = brick_len(s);
    const bool covers_first = !s.rows.empty() && !s.rows[0].empty() && s.rows[0][0] == 0;

    if (!covers_first) {
        // Uncovered first space: strip it; the image gains a leading 0.
        return seqcore::BitString::parse("0") + map_recursive(shifted(s, -1, m - 1));
    }

    const std::vector<std::size_t> h = outline_heights(s);
    std::size_t m_prime = m;
    for (std::size_t x = 1; x <= m; ++x) {
        if (h[x] == 0) {
            m_prime = x;
            break;
        }
    }

    if (m_prime < m) {
        // Proper first return: the stack splits at m_prime.
        BrickStack left{s.q, m_prime, {}}, right{s.q, m - m_prime, {}};
        for (const auto& row : s.rows) {
            std::vector<std::size_t> lrow, rrow;
            for (std::size_t start : row) {
                if (start + len <= m_prime) lrow.push_back(start);
                else rrow.push_back(start - m_prime);
            }
            left.rows.push_back(std::move(lrow));
            right.rows.push_back(std::move(rrow));
        }
        drop_trailing_empty_rows(left);
        drop_trailing_empty_rows(right);
        return map_recursive(left) + map_recursive(right);
    }

    // Full mound: every notch of the bottom row is covered. Remove the bottom
    // row and one base space at each end; wrap the image in 0...1.
    BrickStack inner{s.q, m - 2, {}};
    for (std::size_t r = 1; r < s.rows.size(); ++r) {
        std::vector<std::size_t> moved;
        for (std::size_t start : s.rows[r]) moved.push_back(start - 1);
        inner.rows.push_back(std::move(moved));
    }
    return seqcore::BitString::parse("0") + map_recursive(inner) + seqcore::BitString::parse("1");
}

BrickStack unmap_recursive(const seqcore::BitString& b, unsigned q) {
    const std::size_t m = b.size();
    const std::size_t len = static_cast<std::size_t>(q) + 1;
    if (m == 0) return BrickStack{q, 0, {}};

    if (seqcore::is_q_dominating(b, q)) {
        BrickStack inner = unmap_recursive(b.suffix_from(1), q);
        return shifted(inner, 1, m);
    }

    // Shortest q-ballot prefix; one exists because b is q-satisfying but not
    // q-dominating.
    std::size_t zeros = 0, ones = 0, cut = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (b[i]) ++ones; else ++zeros;
        if (zeros == static_cast<std::size_t>(q) * ones && ones > 0) {
            cut = i + 1;
            break;
        }
    }
    if (cut == 0) throw std::logic_error("no ballot prefix in a non-dominating string");

    if (cut < m) {
        BrickStack left = unmap_recursive(b.prefix(cut), q);
        BrickStack right = unmap_recursive(b.suffix_from(cut), q);
        BrickStack out{q, m, {}};
        const std::size_t height = std::max(left.rows.size(), right.rows.size());
        out.rows.resize(height);
        for (std::size_t r = 0; r < height; ++r) {
            if (r < left.rows.size()) out.rows[r] = left.rows[r];
            if (r < right.rows.size()) {
                for (std::size_t start : right.rows[r]) out.rows[r].push_back(start + cut);
            }
        }
        return out;
    }

    // b is a q-ballot sequence with no proper ballot prefix: full bottom row,
    // everything else one level up.
    const std::size_t n = b.ones();
    if (b[0] != 0 || b[m - 1] != 1) throw std::logic_error("ballot block must match 0...1");
    BrickStack inner = unmap_recursive(b.prefix(m - 1).suffix_from(1), q);
    BrickStack out{q, m, {}};
    out.rows.resize(1 + inner.rows.size());
    for (std::size_t i = 0; i < n; ++i) out.rows[0].push_back(i * len);
    for (std::size_t r = 0; r < inner.rows.size(); ++r) {
        for (std::size_t start : inner.rows[r]) out.rows[r + 1].push_back(start + 1);
    }
    return out;
}

}  // namespace

seqcore::BitString stack_to_sequence(const BrickStack& s) {
    const Silhouette outline = silhouette(s);  // also validates
    std::vector<std::uint8_t> read;
    read.reserve(outline.steps.size());
    for (Step step : outline.steps) read.push_back(step == Step::Down ? 1 : 0);
    const seqcore::BitString via_outline{std::move(read)};

    const seqcore::BitString via_recursion = map_recursive(s);
    if (!(via_recursion == via_outline))
        throw std::logic_error("first-return map disagrees with the silhouette reading");
    return via_recursion;
}

BrickStack sequence_to_stack(const seqcore::BitString& b, unsigned q) {
    require(q >= 1, "q-stacks require q >= 1");
    require(seqcore::is_q_satisfying(b, q), "not q-satisfying");
    return unmap_recursive(b, q);
}

std::optional<std::size_t> first_return(const BrickStack& s) {
    const ValidationResult check = validate(s);
    if (!check.ok()) throw std::invalid_argument("invalid stack");
    if (s.rows.empty() || s.rows[0].empty() || s.rows[0][0] != 0) return std::nullopt;
    const std::vector<std::size_t> h = outline_heights(s);
    for (std::size_t x = 1; x <= s.base_length; ++x) {
        if (h[x] == 0) return x;
    }
    return s.base_length;
}

std::string render_ascii(const BrickStack& s, bool shaved) {
    const ValidationResult check = validate(s);
    if (!check.ok()) {
        std::string msg = "invalid stack:";
        for (const auto& v : check.violations) msg += " " + v + ";";
        throw std::invalid_argument(msg);
    }
    std::string glyph;
    glyph += shaved ? '/' : '[';
    glyph.append(s.q >= 1 ? s.q - 1 : 0, shaved ? '-' : '_');
    glyph += shaved ? '\\' : ']';

    std::string out;
    for (std::size_t r = s.rows.size(); r-- > 0;) {
        std::string line(s.base_length, ' ');
        for (std::size_t start : s.rows[r]) line.replace(start, glyph.size(), glyph);
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    out.append(s.base_length, '=');
    out += '\n';
    return out;
}

}  // namespace brickstack
