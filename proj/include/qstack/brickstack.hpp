#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qstack/seqcore.hpp"

namespace brickstack {

// A stack of bricks of length q+1 over a base of length m. rows[0] sits on
// the base; each entry is the sorted list of brick start coordinates, a brick
// occupying the half-open span [start, start+q+1). A brick above the base
// rests on two contiguous bricks of the row below, covering a positive
// integer amount of each (q possible offsets).
//
// Text form: "q=<q>;m=<m>;rows=[<starts>][<starts>]..." with the empty stack
// written "rows=[]".
struct BrickStack {
    unsigned q = 1;
    std::size_t base_length = 0;
    std::vector<std::vector<std::size_t>> rows;

    std::size_t base_brick_count() const { return rows.empty() ? 0 : rows[0].size(); }
    std::size_t brick_count() const;
    std::string str() const;
    static BrickStack parse(std::string_view text);

    bool operator==(const BrickStack&) const = default;
};

struct ValidationResult {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

ValidationResult validate(const BrickStack& s);

// Outline of the shaved stack, one step per unit of horizontal coordinate.
enum class Step : std::uint8_t { Up, Flat, Down };

struct Silhouette {
    std::vector<Step> steps;
    bool operator==(const Silhouette&) const = default;
};

// Throws std::invalid_argument (with the violation list) on invalid stacks.
Silhouette silhouette(const BrickStack& s);

// Every q-stack of length m exactly once, the empty stack included. Order:
// base brick count ascending, then base placements lexicographically, then
// upper rows by junction choices (skip before the overhang options).
void enumerate_stacks(std::size_t m, unsigned q,
                      const std::function<void(const BrickStack&)>& visit);
std::vector<BrickStack> all_stacks(std::size_t m, unsigned q);

// The bijection onto q-satisfying strings of length m, computed by the
// first-return decomposition and cross-checked against the silhouette
// reading (up/flat = 0, down = 1); a mismatch is a hard error.
seqcore::BitString stack_to_sequence(const BrickStack& s);

// Inverse map; rejects strings that are not q-satisfying.
BrickStack sequence_to_stack(const seqcore::BitString& b, unsigned q);

// Smallest positive coordinate where the shaved outline returns to the base,
// or nullopt when the first base space is uncovered.
std::optional<std::size_t> first_return(const BrickStack& s);

// Fixed-width drawing, one text row per brick row plus a base line.
std::string render_ascii(const BrickStack& s, bool shaved);

}  // namespace brickstack
