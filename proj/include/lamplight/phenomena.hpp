#pragma once

// Named families with distinguished metric behavior, and the reports that
// verify them: dead ends (no generator moves the element farther from the
// identity), seesaw words (exactly one generator and its inverse shorten,
// and keep doing so for many steps), and pairs witnessing the failure of
// almost convexity.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lamplight/lamplighter.hpp"
#include "lamplight/metric.hpp"
#include "lamplight/oracle.hpp"
#include "lamplight/wreath.hpp"

namespace lamplight {

// Every lamp within m of the origin at its farthest-from-off state, cursor
// home. Length 4m + h(2m+1); a dead end whose escape depth grows with m.
LampElement dead_end_family(const Lamplighter& group, int m);

// Two lamps at +k and -k in nontrivial states, cursor home. Length
// lamp costs + 4k; a seesaw word with pivot t.
LampElement seesaw_family(const Lamplighter& group, int k, int right_state = 1,
                          int left_state = 1);

struct DeadEndReport {
  std::string element;
  std::int64_t length = 0;
  bool is_dead_end = false;
  std::vector<std::pair<std::string, std::int64_t>> neighbor_lengths;  // letter -> length
  std::optional<DepthResult> depth;  // computed when is_dead_end and steps > 0 allowed
};

DeadEndReport check_dead_end(const LampElement& e, int max_depth_steps = 12);
DeadEndReport check_dead_end(const WreathElement& e, int max_depth_steps = 12);
std::string to_string(const DeadEndReport& report);

struct SeesawReport {
  std::string element;
  std::int64_t length = 0;
  std::string pivot;
  int swing_checked = 0;
  bool holds = false;
  int max_swing = 0;  // largest swing for which the conditions hold
};

// Checks the two seesaw conditions for the requested swing: (1) the pivot
// and its inverse each drop the length by exactly 1 and no other generator
// drops it; (2) for l in [1, swing-1], in both pivot directions, the length
// keeps dropping by 1 and at each intermediate element no non-pivot
// generator drops it.
SeesawReport check_seesaw(const LampElement& e, const std::string& pivot, int swing);
std::string to_string(const SeesawReport& report);

struct ConvexityReport {
  int witness = 0;  // family index k
  std::string pair_first;
  std::string pair_second;
  std::int64_t pair_length = 0;  // both elements, 4k+1
  std::int64_t ball_radius = 0;  // 4k+1
  std::int64_t free_distance = 2;
  std::int64_t mac_bound = 0;  // 2(4k+1) - 1
  std::optional<std::int64_t> in_ball_distance;
  std::optional<bool> violates_mac;
};

// The pair (w t, w t^-1) around the seesaw word w of index k: both ends have
// length 4k+1 and free distance 2, but joining them inside the ball of
// radius 4k+1 takes a path longer than the minimal-almost-convexity bound.
// With run_search the exact constrained distance is computed by BFS.
ConvexityReport convexity_witness(const Lamplighter& group, int witness, bool run_search);
std::string to_string(const ConvexityReport& report);

struct FloorReport {
  std::int64_t bound = 0;  // 4k+2
  std::int64_t min_found = 0;
  std::uint64_t checked = 0;
  bool holds = false;
};

// Minimum length over configurations lighting both +k and -k (any further
// lamps allowed) with the cursor at the origin; exhaustive over [-k, k] for
// k <= 2, plus `trials` random configurations reaching positions beyond k.
FloorReport extreme_pair_floor(const Lamplighter& group, int k, int trials,
                               std::uint64_t seed = 1);
std::string to_string(const FloorReport& report);

}  // namespace lamplight
