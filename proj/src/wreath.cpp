#include "lamplight/wreath.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lamplight {

namespace {

constexpr std::uint64_t kVariantCap = 1'000'000;
constexpr std::size_t kEnumerateSlotLimit = 4;

Position right_extent_of(const WreathElement& e) {
  return e.slots.empty() ? 0 : std::max<Position>(0, e.slots.max_position());
}

Position left_extent_of(const WreathElement& e) {
  return e.slots.empty() ? 0 : std::max<Position>(0, -e.slots.min_position());
}

std::int64_t slot_cost_sum(const WreathElement& e) {
  std::int64_t sum = 0;
  for (const auto& [pos, idx] : e.slots.entries()) sum += e.group->length(idx);
  return sum;
}

std::vector<detail::TourService> services_of(const WreathElement& e) {
  std::vector<detail::TourService> services;
  services.reserve(e.slots.size());
  for (const auto& [pos, idx] : e.slots.entries()) {
    services.push_back(detail::TourService{pos, e.group->geodesic(idx)});
  }
  return services;
}

}  // namespace

WreathElement identity(const FiniteGroupTable& group) { return WreathElement{&group, {}, 0}; }

std::vector<std::string> wreath_alphabet(const FiniteGroupTable& group) {
  std::vector<std::string> alphabet = group.alphabet();
  alphabet.push_back("t");
  return alphabet;
}

WreathElement apply_gen(const WreathElement& e, const Letter& letter) {
  WreathElement out = e;
  if (letter.gen == "t") {
    out.cursor += letter.sign;
    return out;
  }
  auto idx = e.group->gen_index(letter);
  if (!idx) throw std::invalid_argument("unknown generator '" + letter.gen + "'");
  out.slots.set(out.cursor, e.group->mul(out.slots.at(out.cursor), *idx));
  return out;
}

WreathElement eval_word(const FiniteGroupTable& group, const Word& word) {
  WreathElement e = identity(group);
  for (const Letter& letter : word) e = apply_gen(e, letter);
  return e;
}

std::int64_t word_length(const WreathElement& e) {
  Position right = right_extent_of(e);
  Position left = left_extent_of(e);
  return slot_cost_sum(e) + std::min(detail::tour_cost(Side::RightFirst, right, left, e.cursor),
                                     detail::tour_cost(Side::LeftFirst, right, left, e.cursor));
}

std::int64_t side_cost(const WreathElement& e, Side side) {
  return slot_cost_sum(e) +
         detail::tour_cost(side, right_extent_of(e), left_extent_of(e), e.cursor);
}

Word emit_geodesic(const WreathElement& e) {
  Position right = right_extent_of(e);
  Position left = left_extent_of(e);
  Side side = detail::cheaper_side(right, left, e.cursor);
  return detail::first_visit_word(detail::tour_positions(side, right, left, e.cursor),
                                  services_of(e));
}

std::vector<Word> enumerate_geodesics(const WreathElement& e) {
  if (e.slots.size() > kEnumerateSlotLimit) {
    throw std::invalid_argument("geodesic enumeration supports at most " +
                                std::to_string(kEnumerateSlotLimit) + " occupied slots");
  }
  Position right = right_extent_of(e);
  Position left = left_extent_of(e);
  std::vector<detail::TourService> services = services_of(e);
  std::set<Word> distinct;
  for (Side side : detail::minimal_sides(right, left, e.cursor)) {
    auto schedules = detail::all_schedules(detail::tour_positions(side, right, left, e.cursor),
                                           services, kVariantCap);
    for (detail::Schedule& schedule : schedules) distinct.insert(std::move(schedule.word));
  }
  std::vector<Word> out(distinct.begin(), distinct.end());
  std::sort(out.begin(), out.end(),
            [](const Word& a, const Word& b) { return to_string(a) < to_string(b); });
  return out;
}

WreathElement lift_dead_end_family(const FiniteGroupTable& group, int dead_end, int radius_m) {
  if (radius_m < 1) throw std::invalid_argument("family radius must be >= 1");
  if (dead_end <= 0 || dead_end >= group.order() || !group.is_dead_end(dead_end)) {
    throw std::invalid_argument("element " + std::to_string(dead_end) + " is not a dead end in " +
                                group.name());
  }
  WreathElement e = identity(group);
  for (Position p = -radius_m; p <= radius_m; ++p) e.slots.set(p, dead_end);
  return e;
}

std::string to_string(const WreathElement& e) {
  return "slots={" + detail::support_body(e.slots) + "} cursor=" + std::to_string(e.cursor);
}

std::string encode(const WreathElement& e) {
  return detail::support_body(e.slots) + "@" + std::to_string(e.cursor);
}

std::size_t WreathElementHash::operator()(const WreathElement& e) const {
  return detail::hash_support(e.slots, e.cursor, 0x5eed);
}

}  // namespace lamplight
