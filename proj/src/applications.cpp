#include "qstack/applications.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "qstack/cyclelemma.hpp"

namespace applications {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

std::size_t chung_feller_statistic(std::string_view word) {
    std::vector<std::size_t> a_pos, b_pos;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] == 'A') a_pos.push_back(i + 1);
        else if (word[i] == 'B') b_pos.push_back(i + 1);
        else throw std::invalid_argument("word must be over {A, B}");
    }
    require(a_pos.size() == b_pos.size(), "word must have equally many A's and B's");
    std::size_t l = 0;
    for (std::size_t i = 0; i < a_pos.size(); ++i) {
        if (a_pos[i] < b_pos[i]) ++l;
    }
    return l;
}

std::vector<std::uint64_t> chung_feller_distribution(std::size_t n,
                                                     std::size_t max_exhaustive_n) {
    require(n <= max_exhaustive_n, "n exceeds the exhaustive-search guard");
    std::vector<std::uint64_t> counts(n + 1, 0);
    std::string word(n, 'A');
    word.append(n, 'B');
    do {
        ++counts[chung_feller_statistic(word)];
    } while (std::next_permutation(word.begin(), word.end()));
    return counts;
}

IntegerCycle::IntegerCycle(std::vector<std::int64_t> values) : values_(std::move(values)) {
    require(!values_.empty(), "integer cycle must be nonempty");
    std::int64_t sum = 0;
    for (std::int64_t v : values_) sum += v;
    require(sum == 1, "integer cycle must sum to +1");
}

IntegerCycle IntegerCycle::parse(std::string_view text) {
    std::vector<std::int64_t> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - pos);
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        require(ec == std::errc() && ptr == token.data() + token.size(),
                "integer cycle tokens must be decimal integers");
        values.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return IntegerCycle(std::move(values));
}

std::string IntegerCycle::str() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values_[i]);
    }
    return out;
}

MontaghEncoding montagh_encode(const IntegerCycle& c) {
    std::vector<std::uint8_t> raw;
    std::vector<std::size_t> entry_end_raw;
    for (std::int64_t v : c.values()) {
        require(v <= 1000000 && v >= -1000000, "cycle entry too large to encode");
    }
    for (std::int64_t v : c.values()) {
        if (v >= 0) {
            raw.push_back(1);
            raw.insert(raw.end(), static_cast<std::size_t>(1 + v), 0);
        } else {
            raw.insert(raw.end(), static_cast<std::size_t>(1 - v), 1);
            raw.push_back(0);
        }
        entry_end_raw.push_back(raw.size() - 1);
    }
    const std::size_t total = raw.size();
    const std::size_t offset = seqcore::CyclicArrangement::canonical_offset(raw);
    MontaghEncoding enc{seqcore::CyclicArrangement(std::move(raw)), {}, {}};
    if (enc.arrangement.zeros() != enc.arrangement.ones() + 1)
        throw std::logic_error("montagh encoding is not a (k, k+1)-arrangement");
    for (std::size_t e : entry_end_raw) {
        const std::size_t mapped = (e + total - offset) % total;
        enc.entry_end.push_back(mapped);
        enc.run_end_zeros.insert(mapped);
    }
    if (enc.run_end_zeros.size() != c.size())
        throw std::logic_error("montagh encoding produced a short restriction set");
    return enc;
}

std::size_t positive_partial_sums(const std::vector<std::int64_t>& values) {
    std::int64_t sum = 0;
    std::size_t positive = 0;
    for (std::int64_t v : values) {
        sum += v;
        if (sum > 0) ++positive;
    }
    return positive;
}

namespace {

std::vector<std::int64_t> rotation_values(const IntegerCycle& c, std::size_t start) {
    std::vector<std::int64_t> out;
    out.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out.push_back(c[(start + i) % c.size()]);
    return out;
}

}  // namespace

CycleRotation montagh_linearization(const IntegerCycle& c, std::size_t l) {
    const std::size_t n = c.size();
    require(l >= 1 && l <= n, "positive-partial-sum target out of range");

    // Route 1: through the 0/1 encoding and the restricted (q=1) lemma.
    const MontaghEncoding enc = montagh_encode(c);
    const cyclelemma::LinearizationReport report =
        cyclelemma::stronger_linearization(enc.arrangement, enc.run_end_zeros, l, 1);
    std::size_t via_lemma = n;
    for (std::size_t e = 0; e < n; ++e) {
        if (enc.entry_end[e] == report.cut) {
            via_lemma = (e + 1) % n;
            break;
        }
    }
    if (via_lemma == n) throw std::logic_error("montagh cut does not end an entry block");

    // Route 2: direct scan of all rotations.
    std::vector<std::size_t> direct;
    for (std::size_t start = 0; start < n; ++start) {
        if (positive_partial_sums(rotation_values(c, start)) == l) direct.push_back(start);
    }
    if (direct.size() != 1 || direct.front() != via_lemma)
        throw std::logic_error("montagh linearization routes disagree");

    return CycleRotation{via_lemma, rotation_values(c, via_lemma)};
}

std::size_t raney_start(const IntegerCycle& c) {
    std::int64_t sum = 0, min = 0;
    std::size_t last_min = 0;
    bool seen = false;
    for (std::size_t j = 0; j < c.size(); ++j) {
        sum += c[j];
        if (!seen || sum <= min) {
            min = sum;
            last_min = j + 1;
            seen = true;
        }
    }
    return last_min % c.size();
}

RaneySequence::RaneySequence(unsigned q, std::vector<std::int64_t> terms)
    : q_(q), terms_(std::move(terms)) {
    require(q_ >= 1, "raney sequences require q >= 1");
    std::size_t k = 0;
    std::int64_t sum = 0;
    for (std::int64_t t : terms_) {
        require(t == 1 || t == -static_cast<std::int64_t>(q_),
                "raney terms must be +1 or -q");
        if (t != 1) ++k;
        sum += t;
        require(sum > 0, "raney partial sums must stay positive");
    }
    require(terms_.size() == (static_cast<std::size_t>(q_) + 1) * k + 1,
            "raney length must be (q+1)k + 1");
}

std::size_t RaneySequence::drops() const {
    std::size_t k = 0;
    for (std::int64_t t : terms_) {
        if (t != 1) ++k;
    }
    return k;
}

std::string RaneySequence::str() const {
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(terms_[i]);
    }
    return out;
}

namespace {

void raney_rec(std::vector<std::int64_t>& terms, std::size_t ones_left, std::size_t drops_left,
               std::int64_t sum, unsigned q,
               const std::function<void(const RaneySequence&)>& visit) {
    if (ones_left == 0 && drops_left == 0) {
        visit(RaneySequence(q, terms));
        return;
    }
    if (ones_left > 0) {
        terms.push_back(1);
        raney_rec(terms, ones_left - 1, drops_left, sum + 1, q, visit);
        terms.pop_back();
    }
    if (drops_left > 0 && sum > static_cast<std::int64_t>(q)) {
        terms.push_back(-static_cast<std::int64_t>(q));
        raney_rec(terms, ones_left, drops_left - 1, sum - q, q, visit);
        terms.pop_back();
    }
}

}  // namespace

void enumerate_raney(std::size_t k, unsigned q,
                     const std::function<void(const RaneySequence&)>& visit) {
    require(q >= 1, "raney sequences require q >= 1");
    std::vector<std::int64_t> terms;
    terms.reserve((q + 1) * k + 1);
    raney_rec(terms, static_cast<std::size_t>(q) * k + 1, k, 0, q, visit);
}

std::size_t PlaneTree::internal_count() const {
    if (leaf()) return 0;
    std::size_t total = 1;
    for (const PlaneTree& child : children) total += child.internal_count();
    return total;
}

std::size_t PlaneTree::leaf_count() const {
    if (leaf()) return 1;
    std::size_t total = 0;
    for (const PlaneTree& child : children) total += child.leaf_count();
    return total;
}

std::string PlaneTree::str() const {
    if (leaf()) return "·";
    std::string out = "(";
    for (const PlaneTree& child : children) out += child.str();
    out += ')';
    return out;
}

namespace {

void tree_product(const std::vector<std::vector<PlaneTree>>& pools, std::size_t index,
                  PlaneTree& current, const std::function<void(const PlaneTree&)>& visit) {
    if (index == pools.size()) {
        visit(current);
        return;
    }
    for (const PlaneTree& choice : pools[index]) {
        current.children.push_back(choice);
        tree_product(pools, index + 1, current, visit);
        current.children.pop_back();
    }
}

std::vector<PlaneTree> all_trees(std::size_t n, unsigned q);

void compositions_rec(std::size_t remaining, std::size_t parts, std::vector<std::size_t>& parts_so_far,
                      const std::function<void(const std::vector<std::size_t>&)>& visit) {
    if (parts == 1) {
        parts_so_far.push_back(remaining);
        visit(parts_so_far);
        parts_so_far.pop_back();
        return;
    }
    for (std::size_t first = 0; first <= remaining; ++first) {
        parts_so_far.push_back(first);
        compositions_rec(remaining - first, parts - 1, parts_so_far, visit);
        parts_so_far.pop_back();
    }
}

std::vector<PlaneTree> all_trees(std::size_t n, unsigned q) {
    std::vector<PlaneTree> out;
    if (n == 0) {
        out.push_back(PlaneTree{});
        return out;
    }
    std::vector<std::size_t> parts;
    compositions_rec(n - 1, q + 1, parts, [&](const std::vector<std::size_t>& sizes) {
        std::vector<std::vector<PlaneTree>> pools;
        pools.reserve(sizes.size());
        for (std::size_t s : sizes) pools.push_back(all_trees(s, q));
        PlaneTree current;
        tree_product(pools, 0, current, [&](const PlaneTree& t) { out.push_back(t); });
    });
    return out;
}

}  // namespace

void enumerate_plane_trees(std::size_t n, unsigned q,
                           const std::function<void(const PlaneTree&)>& visit) {
    require(q >= 1, "plane trees require q >= 1");
    for (const PlaneTree& t : all_trees(n, q)) visit(t);
}

namespace {

void collect_arities(const PlaneTree& t, std::vector<std::size_t>& arities) {
    if (t.leaf()) return;
    arities.push_back(t.children.size());
    for (const PlaneTree& child : t.children) collect_arities(child, arities);
}

void postorder_bits(const PlaneTree& t, std::vector<std::uint8_t>& bits) {
    if (t.leaf()) {
        bits.push_back(0);
        return;
    }
    for (const PlaneTree& child : t.children) postorder_bits(child, bits);
    bits.push_back(1);
}

}  // namespace

seqcore::BitString tree_to_sequence(const PlaneTree& t) {
    std::vector<std::size_t> arities;
    collect_arities(t, arities);
    for (std::size_t a : arities) {
        require(a == arities.front() && a >= 2, "internal nodes must share one arity >= 2");
    }
    std::vector<std::uint8_t> bits;
    postorder_bits(t, bits);
    return seqcore::BitString(std::move(bits));
}

PlaneTree sequence_to_tree(const seqcore::BitString& s, unsigned q) {
    require(q >= 1, "plane trees require q >= 1");
    std::vector<PlaneTree> stack;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 0) {
            stack.push_back(PlaneTree{});
        } else {
            require(stack.size() >= q + 1u, "marker with too few objects on the stack");
            PlaneTree node;
            node.children.assign(stack.end() - (q + 1), stack.end());
            stack.erase(stack.end() - (q + 1), stack.end());
            stack.push_back(std::move(node));
        }
    }
    require(stack.size() == 1, "sequence must evaluate to exactly one tree");
    return stack.back();
}

}  // namespace applications
