#pragma once

// Canonical service tours shared by the L_n and wreath metrics.
//
// A tour visits one side of the line first, returns through the origin to
// sweep the other side, then parks the cursor: 0 -> R -> -L -> m for the
// right-first form, 0 -> -L -> R -> m for the left-first form. Geodesics are
// tours with every occupied position serviced across its visits.

#include <cstdint>
#include <vector>

#include "lamplight/lamplighter.hpp"
#include "lamplight/word.hpp"

namespace lamplight {

enum class Side { RightFirst, LeftFirst };

namespace detail {

// Cursor travel of the side's tour: 2R + L + |m+L| right-first,
// 2L + R + |m-R| left-first.
std::int64_t tour_cost(Side side, Position right, Position left, Position cursor);

// The cheaper side, ties broken right-first.
Side cheaper_side(Position right, Position left, Position cursor);
std::vector<Side> minimal_sides(Position right, Position left, Position cursor);

// Every position the cursor occupies along the tour, in order, starting at 0.
// Consecutive entries differ by exactly 1, so each index is one maximal
// visit interval of its position.
std::vector<Position> tour_positions(Side side, Position right, Position left, Position cursor);

// One position that must be serviced during the tour, together with the full
// word that realizes its value.
struct TourService {
  Position position;
  Word service;
};

// The tour word with every service emitted on the first visit of its
// position.
Word first_visit_word(const std::vector<Position>& tour,
                      const std::vector<TourService>& services);

// How one service was spread over the visits of its position.
struct ScheduleChoice {
  Position position;
  std::vector<int> per_visit;  // service letters emitted at each visit
};

struct Schedule {
  Word word;
  std::vector<ScheduleChoice> choices;
};

// All tour words obtained by splitting each service word contiguously across
// the visits of its position (empty chunks allowed), with the split that
// produced each word. Throws when more than `cap` words would be produced.
std::vector<Schedule> all_schedules(const std::vector<Position>& tour,
                                    const std::vector<TourService>& services,
                                    std::uint64_t cap);

}  // namespace detail
}  // namespace lamplight
