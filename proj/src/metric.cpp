#include "lamplight/metric.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lamplight {

namespace {

constexpr std::uint64_t kVariantCap = 1'000'000;

Position right_extent_of(const LampElement& e) {
  return e.lamps.empty() ? 0 : std::max<Position>(0, e.lamps.max_position());
}

Position left_extent_of(const LampElement& e) {
  return e.lamps.empty() ? 0 : std::max<Position>(0, -e.lamps.min_position());
}

std::int64_t lamp_cost_sum(const LampElement& e) {
  std::int64_t sum = 0;
  for (const auto& [pos, state] : e.lamps.entries()) sum += lamp_cost(e.group, state);
  return sum;
}

// Full service word for one lamp: |exponent| copies of a or a^-1.
detail::TourService service_for(const Lamplighter& group, Position pos, int state) {
  int exponent = lamp_exponent(group, state);
  Word service(static_cast<std::size_t>(exponent < 0 ? -exponent : exponent),
               Letter{"a", exponent < 0 ? -1 : 1});
  return detail::TourService{pos, std::move(service)};
}

std::vector<detail::TourService> services_of(const LampElement& e) {
  std::vector<detail::TourService> services;
  services.reserve(e.lamps.size());
  for (const auto& [pos, state] : e.lamps.entries()) services.push_back(service_for(e.group, pos, state));
  return services;
}

}  // namespace

int lamp_cost(const Lamplighter& group, int state) {
  if (state < 1 || state >= group.states()) {
    throw std::invalid_argument("lamp state " + std::to_string(state) + " out of range [1, " +
                                std::to_string(group.states() - 1) + "]");
  }
  return std::min(state, group.states() - state);
}

int lamp_exponent(const Lamplighter& group, int state) {
  int cost = lamp_cost(group, state);
  return state <= group.half() ? cost : -cost;
}

std::int64_t word_length(const LampElement& e) {
  Position right = right_extent_of(e);
  Position left = left_extent_of(e);
  return lamp_cost_sum(e) + std::min(detail::tour_cost(Side::RightFirst, right, left, e.cursor),
                                     detail::tour_cost(Side::LeftFirst, right, left, e.cursor));
}

NormalForm normal_form(const LampElement& e, Side side) {
  NormalForm nf;
  nf.side = side;
  nf.cursor = e.cursor;
  for (const auto& [pos, state] : e.lamps.entries()) {
    NormalFormTerm term{pos, lamp_exponent(e.group, state)};
    if (pos >= 0) {
      nf.nonneg_terms.push_back(term);  // entries are already ascending
    } else {
      nf.neg_terms.push_back(term);
    }
  }
  // negative terms run from the origin outward
  std::reverse(nf.neg_terms.begin(), nf.neg_terms.end());
  nf.right_extent = right_extent_of(e);
  nf.left_extent = left_extent_of(e);
  nf.cost = lamp_cost_sum(e) + detail::tour_cost(side, nf.right_extent, nf.left_extent, e.cursor);
  return nf;
}

std::string to_string(const NormalForm& nf) {
  std::string out = "side=";
  out += nf.side == Side::RightFirst ? "rf" : "lf";
  out += " terms=[";
  bool first = true;
  auto append_terms = [&](const std::vector<NormalFormTerm>& terms) {
    for (const NormalFormTerm& term : terms) {
      if (!first) out += ',';
      first = false;
      out += '(' + std::to_string(term.position) + ',' + std::to_string(term.exponent) + ')';
    }
  };
  if (nf.side == Side::RightFirst) {
    append_terms(nf.nonneg_terms);
    append_terms(nf.neg_terms);
  } else {
    append_terms(nf.neg_terms);
    append_terms(nf.nonneg_terms);
  }
  out += "] R=" + std::to_string(nf.right_extent) + " L=" + std::to_string(nf.left_extent) +
         " m=" + std::to_string(nf.cursor) + " cost=" + std::to_string(nf.cost);
  return out;
}

Word emit_geodesic(const LampElement& e) {
  Position right = right_extent_of(e);
  Position left = left_extent_of(e);
  Side side = detail::cheaper_side(right, left, e.cursor);
  return detail::first_visit_word(detail::tour_positions(side, right, left, e.cursor),
                                  services_of(e));
}

std::vector<GeodesicSchedule> enumerate_geodesic_schedules(const LampElement& e) {
  Position right = right_extent_of(e);
  Position left = left_extent_of(e);
  std::vector<detail::TourService> services = services_of(e);
  std::vector<GeodesicSchedule> out;
  for (Side side : detail::minimal_sides(right, left, e.cursor)) {
    auto schedules = detail::all_schedules(detail::tour_positions(side, right, left, e.cursor),
                                           services, kVariantCap);
    for (detail::Schedule& schedule : schedules) {
      GeodesicSchedule gs{side, std::move(schedule.word), {}};
      gs.choices.reserve(schedule.choices.size());
      for (const detail::ScheduleChoice& choice : schedule.choices) {
        int sign = lamp_exponent(e.group, e.lamps.at(choice.position)) < 0 ? -1 : 1;
        GeodesicVisitChoice visit{choice.position, choice.per_visit};
        for (int& increment : visit.increments) increment *= sign;
        gs.choices.push_back(std::move(visit));
      }
      out.push_back(std::move(gs));
    }
  }
  return out;
}

std::vector<Word> enumerate_geodesics(const LampElement& e) {
  std::set<Word> distinct;
  for (GeodesicSchedule& schedule : enumerate_geodesic_schedules(e)) {
    distinct.insert(std::move(schedule.letters));
  }
  std::vector<Word> out(distinct.begin(), distinct.end());
  std::sort(out.begin(), out.end(),
            [](const Word& a, const Word& b) { return to_string(a) < to_string(b); });
  return out;
}

}  // namespace lamplight
