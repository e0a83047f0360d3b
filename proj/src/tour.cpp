#include "lamplight/tour.hpp"

#include <map>
#include <stdexcept>

namespace lamplight::detail {

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

const Letter kShiftRightLetter{"t", 1};
const Letter kShiftLeftLetter{"t", -1};

}  // namespace

std::int64_t tour_cost(Side side, Position right, Position left, Position cursor) {
  if (side == Side::RightFirst) return 2 * right + left + abs64(cursor + left);
  return 2 * left + right + abs64(cursor - right);
}

Side cheaper_side(Position right, Position left, Position cursor) {
  return tour_cost(Side::RightFirst, right, left, cursor) <=
                 tour_cost(Side::LeftFirst, right, left, cursor)
             ? Side::RightFirst
             : Side::LeftFirst;
}

std::vector<Side> minimal_sides(Position right, Position left, Position cursor) {
  std::int64_t rf = tour_cost(Side::RightFirst, right, left, cursor);
  std::int64_t lf = tour_cost(Side::LeftFirst, right, left, cursor);
  if (rf < lf) return {Side::RightFirst};
  if (lf < rf) return {Side::LeftFirst};
  return {Side::RightFirst, Side::LeftFirst};
}

std::vector<Position> tour_positions(Side side, Position right, Position left, Position cursor) {
  // realizing a tour is linear in its travel, unlike measuring it
  if (tour_cost(side, right, left, cursor) > 32'000'000) {
    throw std::runtime_error("geodesic too long to materialize");
  }
  std::vector<Position> seq{0};
  auto walk_to = [&seq](Position target) {
    Position at = seq.back();
    while (at != target) {
      at += target > at ? 1 : -1;
      seq.push_back(at);
    }
  };
  if (side == Side::RightFirst) {
    walk_to(right);
    walk_to(-left);
  } else {
    walk_to(-left);
    walk_to(right);
  }
  walk_to(cursor);
  return seq;
}

namespace {

struct ServiceState {
  const TourService* service;
  std::vector<std::size_t> visit_indices;  // indices into the tour
  std::vector<int> chunk_lens;             // current split, one per visit
};

Word assemble(const std::vector<Position>& tour, std::vector<ServiceState>& states) {
  std::map<Position, ServiceState*> by_position;
  std::map<Position, std::size_t> visit_seen;
  std::map<Position, int> offset;
  for (ServiceState& s : states) by_position[s.service->position] = &s;

  Word word;
  for (std::size_t i = 0; i < tour.size(); ++i) {
    if (i > 0) word.push_back(tour[i] > tour[i - 1] ? kShiftRightLetter : kShiftLeftLetter);
    auto it = by_position.find(tour[i]);
    if (it == by_position.end()) continue;
    ServiceState& s = *it->second;
    std::size_t visit = visit_seen[tour[i]]++;
    int len = s.chunk_lens[visit];
    int off = offset[tour[i]];
    for (int k = 0; k < len; ++k) word.push_back(s.service->service[static_cast<std::size_t>(off + k)]);
    offset[tour[i]] = off + len;
  }
  return word;
}

void enumerate_splits(const std::vector<Position>& tour, std::vector<ServiceState>& states,
                      std::size_t index, std::vector<Schedule>& out, std::uint64_t cap) {
  if (index == states.size()) {
    if (out.size() >= cap) throw std::runtime_error("too many geodesic variants");
    Schedule schedule{assemble(tour, states), {}};
    schedule.choices.reserve(states.size());
    for (const ServiceState& s : states) {
      schedule.choices.push_back(ScheduleChoice{s.service->position, s.chunk_lens});
    }
    out.push_back(std::move(schedule));
    return;
  }
  ServiceState& s = states[index];
  int total = static_cast<int>(s.service->service.size());
  int visits = static_cast<int>(s.visit_indices.size());
  // compositions of `total` into `visits` ordered nonnegative parts
  std::vector<int>& parts = s.chunk_lens;
  parts.assign(static_cast<std::size_t>(visits), 0);
  auto recurse = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == visits - 1) {
      parts[static_cast<std::size_t>(pos)] = remaining;
      enumerate_splits(tour, states, index + 1, out, cap);
      return;
    }
    for (int take = 0; take <= remaining; ++take) {
      parts[static_cast<std::size_t>(pos)] = take;
      self(self, pos + 1, remaining - take);
    }
  };
  recurse(recurse, 0, total);
}

std::vector<ServiceState> make_states(const std::vector<Position>& tour,
                                      const std::vector<TourService>& services) {
  std::vector<ServiceState> states;
  states.reserve(services.size());
  for (const TourService& service : services) {
    ServiceState s{&service, {}, {}};
    for (std::size_t i = 0; i < tour.size(); ++i) {
      if (tour[i] == service.position) s.visit_indices.push_back(i);
    }
    if (s.visit_indices.empty()) throw std::logic_error("service position not on tour");
    states.push_back(std::move(s));
  }
  return states;
}

}  // namespace

Word first_visit_word(const std::vector<Position>& tour,
                      const std::vector<TourService>& services) {
  std::vector<ServiceState> states = make_states(tour, services);
  for (ServiceState& s : states) {
    s.chunk_lens.assign(s.visit_indices.size(), 0);
    s.chunk_lens.front() = static_cast<int>(s.service->service.size());
  }
  return assemble(tour, states);
}

std::vector<Schedule> all_schedules(const std::vector<Position>& tour,
                                    const std::vector<TourService>& services,
                                    std::uint64_t cap) {
  std::vector<ServiceState> states = make_states(tour, services);
  std::vector<Schedule> out;
  enumerate_splits(tour, states, 0, out, cap);
  return out;
}

}  // namespace lamplight::detail
