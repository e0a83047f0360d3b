#pragma once

// Elements and exact word metric for G wr Z with G a finite group table:
// G-valued slots along the integer line plus a cursor, measured with respect
// to G's generators together with the shift t. The cursor travel term is the
// same two-sided tour as for L_n; each occupied slot costs its exact word
// length inside G.

#include <cstdint>
#include <string>
#include <vector>

#include "lamplight/finite_group.hpp"
#include "lamplight/lamplighter.hpp"
#include "lamplight/tour.hpp"
#include "lamplight/word.hpp"

namespace lamplight {

struct WreathElement {
  const FiniteGroupTable* group = nullptr;
  SupportMap slots;  // position -> element index, never 0
  Position cursor = 0;

  // Slots and cursor only; elements are never mixed across groups.
  bool operator==(const WreathElement& o) const {
    return slots == o.slots && cursor == o.cursor;
  }
};

WreathElement identity(const FiniteGroupTable& group);

// G's generator names plus "t".
std::vector<std::string> wreath_alphabet(const FiniteGroupTable& group);

// t shifts the cursor; a G-generator right-multiplies the slot under the
// cursor, erasing it when the product is the identity.
WreathElement apply_gen(const WreathElement& e, const Letter& letter);
WreathElement eval_word(const FiniteGroupTable& group, const Word& word);

std::int64_t word_length(const WreathElement& e);
// Lamp costs plus one side's cursor travel.
std::int64_t side_cost(const WreathElement& e, Side side);

// Word of length word_length(e) evaluating to e: cheaper side (ties
// right-first), each slot realized entirely on the first visit via the
// group's geodesic witness.
Word emit_geodesic(const WreathElement& e);

// Geodesic words obtained by splitting each slot's geodesic witness
// contiguously across the visits of its position, over the minimal side(s).
// Supported for at most 4 occupied slots.
std::vector<Word> enumerate_geodesics(const WreathElement& e);

// Slots at every position within `radius_m` of the origin holding the given
// dead-end element of G, cursor at the origin. Throws when `dead_end` is not
// a dead end in G.
WreathElement lift_dead_end_family(const FiniteGroupTable& group, int dead_end, int radius_m);

// `slots={p1:i1,...} cursor=m`, positions ascending.
std::string to_string(const WreathElement& e);
std::string encode(const WreathElement& e);

struct WreathElementHash {
  std::size_t operator()(const WreathElement& e) const;
};

}  // namespace lamplight
