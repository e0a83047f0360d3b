#include "lamplight/phenomena.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace lamplight {

namespace {

std::string bool_text(bool value) { return value ? "true" : "false"; }

std::string letter_label(const Letter& letter) { return to_string(Word{letter}); }

template <class Model, class Metric>
DeadEndReport check_dead_end_impl(const Model& model, Metric metric,
                                  const typename Model::Element& e, int max_depth_steps) {
  DeadEndReport report;
  report.element = to_string(e);
  report.length = metric(e);
  report.is_dead_end = true;
  for (const auto& g : model.gens) {
    std::int64_t len = metric(model.apply(e, g));
    report.neighbor_lengths.emplace_back(letter_label(g.letter), len);
    if (len > report.length) report.is_dead_end = false;
  }
  if (report.is_dead_end && max_depth_steps > 0) {
    report.depth = escape_depth(model, metric, e, max_depth_steps);
  }
  return report;
}

int canonical_state(const Lamplighter& group, int state) {
  int n = group.states();
  int s = (state % n + n) % n;
  if (s == 0) throw std::invalid_argument("lamp state must be nontrivial");
  return s;
}

}  // namespace

LampElement dead_end_family(const Lamplighter& group, int m) {
  if (m < 1) throw std::invalid_argument("family index must be >= 1");
  LampElement e = identity(group);
  for (Position p = -m; p <= m; ++p) e.lamps.set(p, group.half());
  return e;
}

LampElement seesaw_family(const Lamplighter& group, int k, int right_state, int left_state) {
  if (k < 1) throw std::invalid_argument("family index must be >= 1");
  LampElement e = identity(group);
  e.lamps.set(k, canonical_state(group, right_state));
  e.lamps.set(-k, canonical_state(group, left_state));
  return e;
}

DeadEndReport check_dead_end(const LampElement& e, int max_depth_steps) {
  return check_dead_end_impl(LnModel(e.group),
                             [](const LampElement& x) { return word_length(x); }, e,
                             max_depth_steps);
}

DeadEndReport check_dead_end(const WreathElement& e, int max_depth_steps) {
  return check_dead_end_impl(WreathModel(*e.group),
                             [](const WreathElement& x) { return word_length(x); }, e,
                             max_depth_steps);
}

std::string to_string(const DeadEndReport& report) {
  std::string out = "element: " + report.element + "\n";
  out += "neighbors:";
  for (const auto& [label, len] : report.neighbor_lengths) {
    out += ' ' + label + '=' + std::to_string(len);
  }
  out += '\n';
  out += "length=" + std::to_string(report.length) + " dead_end=" + bool_text(report.is_dead_end);
  if (report.depth) {
    out += report.depth->exact ? " depth=" + std::to_string(report.depth->value)
                               : " depth>=" + std::to_string(report.depth->value);
  }
  out += '\n';
  return out;
}

SeesawReport check_seesaw(const LampElement& e, const std::string& pivot, int swing) {
  if (swing < 1) throw std::invalid_argument("swing must be >= 1");
  const auto& alphabet = lamplighter_alphabet();
  if (std::find(alphabet.begin(), alphabet.end(), pivot) == alphabet.end()) {
    throw std::invalid_argument("pivot '" + pivot + "' is not a generator");
  }

  SeesawReport report;
  report.element = to_string(e);
  report.length = word_length(e);
  report.pivot = pivot;
  report.swing_checked = swing;

  auto length_after = [](const LampElement& x, const Letter& letter) {
    return word_length(apply_gen(x, to_gen_letter(letter)));
  };
  // no generator other than the pivot shortens x
  auto pivot_unique_at = [&](const LampElement& x, std::int64_t len) {
    for (const std::string& name : alphabet) {
      if (name == pivot) continue;
      for (int sign : {1, -1}) {
        if (length_after(x, Letter{name, sign}) < len) return false;
      }
    }
    return true;
  };

  bool condition1 = length_after(e, Letter{pivot, 1}) == report.length - 1 &&
                    length_after(e, Letter{pivot, -1}) == report.length - 1 &&
                    pivot_unique_at(e, report.length);

  int max_swing = 0;
  if (condition1) {
    max_swing = -1;
    for (int sign : {1, -1}) {
      // decrements holds for steps 1..chain, uniqueness at elements 0..unique
      int chain = 0;
      int unique = -1;
      LampElement x = e;
      std::int64_t len = report.length;
      bool unique_unbroken = true;
      while (true) {
        if (unique_unbroken && pivot_unique_at(x, len)) {
          unique = chain;
        } else {
          unique_unbroken = false;
        }
        LampElement next = apply_gen(x, to_gen_letter(Letter{pivot, sign}));
        std::int64_t next_len = word_length(next);
        if (next_len != len - 1) break;
        ++chain;
        x = std::move(next);
        len = next_len;
      }
      int direction_swing = std::min(chain + 1, unique + 2);
      max_swing = max_swing < 0 ? direction_swing : std::min(max_swing, direction_swing);
    }
  }

  report.max_swing = std::max(max_swing, 0);
  report.holds = condition1 && swing <= report.max_swing;
  return report;
}

std::string to_string(const SeesawReport& report) {
  return "element: " + report.element + "\n" +
         "length=" + std::to_string(report.length) + " pivot=" + report.pivot +
         " swing_checked=" + std::to_string(report.swing_checked) +
         " holds=" + bool_text(report.holds) +
         " max_swing=" + std::to_string(report.max_swing) + "\n";
}

ConvexityReport convexity_witness(const Lamplighter& group, int witness, bool run_search) {
  LampElement seesaw = seesaw_family(group, witness);
  LampElement first = apply_gen(seesaw, kShiftRight);
  LampElement second = apply_gen(seesaw, kShiftLeft);

  ConvexityReport report;
  report.witness = witness;
  report.pair_first = to_string(first);
  report.pair_second = to_string(second);
  report.pair_length = word_length(first);
  report.ball_radius = report.pair_length;
  report.mac_bound = 2 * report.pair_length - 1;

  if (run_search) {
    LnModel model(group);
    auto metric = [](const LampElement& x) { return word_length(x); };
    auto free_dist =
        in_ball_shortest_path(model, metric, 2 * report.pair_length + 2, first, second);
    if (free_dist) report.free_distance = *free_dist;
    report.in_ball_distance =
        in_ball_shortest_path(model, metric, report.ball_radius, first, second);
    report.violates_mac =
        !report.in_ball_distance || *report.in_ball_distance > report.mac_bound;
  }
  return report;
}

std::string to_string(const ConvexityReport& report) {
  std::string out = "pair_a: " + report.pair_first + "\n";
  out += "pair_b: " + report.pair_second + "\n";
  out += "witness=" + std::to_string(report.witness) +
         " pair_length=" + std::to_string(report.pair_length) +
         " ball_radius=" + std::to_string(report.ball_radius) +
         " free_distance=" + std::to_string(report.free_distance) +
         " mac_bound=" + std::to_string(report.mac_bound);
  if (report.in_ball_distance) {
    out += " in_ball_distance=" + std::to_string(*report.in_ball_distance);
  } else if (report.violates_mac) {
    out += " in_ball_distance=disconnected";
  }
  if (report.violates_mac) out += " violates_mac=" + bool_text(*report.violates_mac);
  out += '\n';
  return out;
}

FloorReport extreme_pair_floor(const Lamplighter& group, int k, int trials, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("extreme position must be >= 1");
  FloorReport report;
  report.bound = 4 * static_cast<std::int64_t>(k) + 2;
  report.min_found = -1;

  auto record = [&](const LampElement& e) {
    std::int64_t len = word_length(e);
    ++report.checked;
    if (report.min_found < 0 || len < report.min_found) report.min_found = len;
  };

  int n = group.states();
  if (k <= 2) {
    // all states over [-k, k], both extremes lit
    std::vector<int> states(static_cast<std::size_t>(2 * k + 1), 0);
    auto advance = [&]() {
      for (std::size_t i = 0; i < states.size(); ++i) {
        Position p = static_cast<Position>(i) - k;
        int limit = (p == k || p == -k) ? n - 1 : n;  // extremes range over 1..n-1
        if (++states[i] < limit) return true;
        states[i] = 0;
      }
      return false;
    };
    do {
      LampElement e = identity(group);
      for (std::size_t i = 0; i < states.size(); ++i) {
        Position p = static_cast<Position>(i) - k;
        int s = (p == k || p == -k) ? states[i] + 1 : states[i];
        if (s != 0) e.lamps.set(p, s);
      }
      record(e);
    } while (advance());
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> state_dist(1, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < trials; ++trial) {
    LampElement e = identity(group);
    for (Position p = -k - 2; p <= k + 2; ++p) {
      if (coin(rng) == 1) e.lamps.set(p, state_dist(rng));
    }
    e.lamps.set(k, state_dist(rng));
    e.lamps.set(-k, state_dist(rng));
    record(e);
  }

  report.holds = report.min_found >= report.bound;
  return report;
}

std::string to_string(const FloorReport& report) {
  return "bound=" + std::to_string(report.bound) +
         " min_found=" + std::to_string(report.min_found) +
         " checked=" + std::to_string(report.checked) + " holds=" + bool_text(report.holds) +
         "\n";
}

}  // namespace lamplight
