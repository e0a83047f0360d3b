#pragma once

// Exact word length and geodesics in L_n with respect to {a, t}.
//
// An element is measured from its two-sided normal forms: service every lit
// lamp while sweeping one side of the line, return through the origin, sweep
// the other side, then park the cursor. With R the rightmost lit extent,
// L the leftmost lit extent (both clamped at 0) and m the cursor,
//
//   length = sum of lamp costs + min(2R + L + |m+L|, 2L + R + |m-R|)
//
// where a lamp in state s costs min(s, n-s) letters.

#include <cstdint>
#include <string>
#include <vector>

#include "lamplight/lamplighter.hpp"
#include "lamplight/tour.hpp"
#include "lamplight/word.hpp"

namespace lamplight {

struct NormalFormTerm {
  Position position;
  int exponent;  // minimal signed lamp exponent, in [-h, h] \ {0}

  auto operator<=>(const NormalFormTerm&) const = default;
};

struct NormalForm {
  Side side = Side::RightFirst;
  std::vector<NormalFormTerm> nonneg_terms;  // ascending position, >= 0
  std::vector<NormalFormTerm> neg_terms;     // descending position, < 0
  Position right_extent = 0;                 // R: max(0, largest lit position)
  Position left_extent = 0;                  // L: max(0, -(smallest lit position))
  Position cursor = 0;
  std::int64_t cost = 0;  // lamp costs + this side's cursor travel
};

// Letters needed to reach `state` from off: min(state, n - state), in [1, h].
int lamp_cost(const Lamplighter& group, int state);
// Minimal signed exponent realizing `state`; the positive one on ties.
int lamp_exponent(const Lamplighter& group, int state);

std::int64_t word_length(const LampElement& e);

NormalForm normal_form(const LampElement& e, Side side);

// `side=rf terms=[(1,1),(-1,1)] R=1 L=1 m=0 cost=6`; terms in application
// order for the side.
std::string to_string(const NormalForm& nf);

// A word of length word_length(e) evaluating to e: cheaper side (ties
// right-first), every lamp set on the first visit with its minimal exponent.
Word emit_geodesic(const LampElement& e);

struct GeodesicVisitChoice {
  Position position;
  std::vector<int> increments;  // signed lamp increment per visit, summing to the exponent
};

struct GeodesicSchedule {
  Side side = Side::RightFirst;
  Word letters;
  std::vector<GeodesicVisitChoice> choices;
};

// Every geodesic schedule of the minimal side(s): each lamp's minimal
// exponent distributed across the visits of its position, same-sign splits
// only. Tied sides are both listed.
std::vector<GeodesicSchedule> enumerate_geodesic_schedules(const LampElement& e);

// The distinct words of enumerate_geodesic_schedules, sorted by rendered
// text.
std::vector<Word> enumerate_geodesics(const LampElement& e);

}  // namespace lamplight
