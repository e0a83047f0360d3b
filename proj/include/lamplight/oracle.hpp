#pragma once

// Brute-force ground truth: exact Cayley-ball enumeration by breadth-first
// search, metric-vs-BFS verification, constrained in-ball shortest paths and
// dead-end escape depths.
//
// Ball enumeration is level-synchronous. With several workers each level's
// frontier is split into contiguous chunks, neighbors are generated per
// chunk, and chunks are merged sequentially in order, so the result (and the
// next frontier's order) is identical for every worker count.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lamplight/finite_group.hpp"
#include "lamplight/lamplighter.hpp"
#include "lamplight/wreath.hpp"

namespace lamplight {

// Neighbor models: the closed generating set of a group, applied to hashable
// elements. Generator order is fixed, so BFS parents and dumps are stable.

struct LnModel {
  using Element = LampElement;
  using Hash = LampElementHash;
  struct Gen {
    GenLetter gen;
    Letter letter;
  };

  explicit LnModel(Lamplighter g) : group(g) {
    gens.push_back({kLampUp, Letter{"a", 1}});
    if (group.states() > 2) gens.push_back({kLampDown, Letter{"a", -1}});
    gens.push_back({kShiftRight, Letter{"t", 1}});
    gens.push_back({kShiftLeft, Letter{"t", -1}});
  }

  Lamplighter group;
  std::vector<Gen> gens;

  Element identity_element() const { return identity(group); }
  Element apply(const Element& e, const Gen& g) const { return apply_gen(e, g.gen); }
  std::string label() const { return "lamplighter:" + std::to_string(group.states()); }
};

struct WreathModel {
  using Element = WreathElement;
  using Hash = WreathElementHash;
  struct Gen {
    Letter letter;
  };

  explicit WreathModel(const FiniteGroupTable& g) : group(&g) {
    for (const FiniteGroupTable::GenStep& step : g.gen_steps()) gens.push_back({step.letter});
    gens.push_back({Letter{"t", 1}});
    gens.push_back({Letter{"t", -1}});
  }

  const FiniteGroupTable* group;
  std::vector<Gen> gens;

  Element identity_element() const { return identity(*group); }
  Element apply(const Element& e, const Gen& g) const { return apply_gen(e, g.letter); }
  std::string label() const { return "wreath:" + group->name(); }
};

inline constexpr std::uint64_t kDefaultBallCap = 50'000'000;

template <class Model>
struct BallIndex {
  using Element = typename Model::Element;

  int radius = 0;
  std::unordered_map<Element, int, typename Model::Hash> distances;
  std::vector<std::uint64_t> sphere_sizes;  // indexed by distance
};

template <class Model>
BallIndex<Model> enumerate_ball(const Model& model, int radius, int workers = 1,
                                std::uint64_t cap = kDefaultBallCap) {
  if (radius < 0) throw std::invalid_argument("ball radius must be >= 0");
  if (workers < 1) workers = 1;
  using Element = typename Model::Element;

  BallIndex<Model> ball;
  ball.radius = radius;
  ball.distances.emplace(model.identity_element(), 0);
  ball.sphere_sizes.assign(static_cast<std::size_t>(radius) + 1, 0);
  ball.sphere_sizes[0] = 1;

  std::vector<Element> frontier{model.identity_element()};
  for (int d = 0; d < radius && !frontier.empty(); ++d) {
    std::vector<std::vector<Element>> produced;
    auto expand_chunk = [&](std::size_t lo, std::size_t hi, std::vector<Element>& out) {
      out.reserve((hi - lo) * model.gens.size());
      for (std::size_t i = lo; i < hi; ++i) {
        for (const auto& g : model.gens) out.push_back(model.apply(frontier[i], g));
      }
    };
    if (workers == 1 || frontier.size() < 2 * static_cast<std::size_t>(workers)) {
      produced.resize(1);
      expand_chunk(0, frontier.size(), produced[0]);
    } else {
      produced.resize(static_cast<std::size_t>(workers));
      std::vector<std::thread> threads;
      std::size_t chunk = (frontier.size() + workers - 1) / workers;
      for (int w = 0; w < workers; ++w) {
        std::size_t lo = std::min(frontier.size(), static_cast<std::size_t>(w) * chunk);
        std::size_t hi = std::min(frontier.size(), lo + chunk);
        threads.emplace_back(expand_chunk, lo, hi, std::ref(produced[static_cast<std::size_t>(w)]));
      }
      for (std::thread& t : threads) t.join();
    }

    std::vector<Element> next;
    for (const auto& chunk : produced) {
      for (const Element& candidate : chunk) {
        auto [it, inserted] = ball.distances.emplace(candidate, d + 1);
        if (!inserted) continue;
        if (ball.distances.size() > cap) {
          throw std::runtime_error("ball enumeration cap of " + std::to_string(cap) +
                                   " elements exceeded");
        }
        next.push_back(candidate);
      }
    }
    ball.sphere_sizes[static_cast<std::size_t>(d) + 1] = next.size();
    frontier = std::move(next);
  }
  return ball;
}

template <class Model>
std::optional<int> ball_distance(const BallIndex<Model>& ball,
                                 const typename Model::Element& e) {
  auto it = ball.distances.find(e);
  if (it == ball.distances.end()) return std::nullopt;
  return it->second;
}

struct VerifyReport {
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  std::string first_mismatch;  // smallest (distance, encoding) mismatch
};

std::string to_string(const VerifyReport& report);

// Compares the metric against every BFS distance of an already-built ball.
template <class Model, class Metric>
VerifyReport verify_ball(const BallIndex<Model>& ball, Metric&& metric) {
  VerifyReport report;
  report.checked = ball.distances.size();
  std::pair<int, std::string> best;
  for (const auto& [element, dist] : ball.distances) {
    std::int64_t computed = metric(element);
    if (computed == dist) continue;
    ++report.mismatches;
    std::pair<int, std::string> key{dist, encode(element)};
    if (report.mismatches == 1 || key < best) {
      best = key;
      report.first_mismatch = encode(element) + " bfs=" + std::to_string(dist) +
                              " formula=" + std::to_string(computed);
    }
  }
  return report;
}

template <class Model, class Metric>
VerifyReport verify_metric(const Model& model, Metric&& metric, int radius, int workers = 1,
                           std::uint64_t cap = kDefaultBallCap) {
  return verify_ball(enumerate_ball(model, radius, workers, cap), metric);
}

// Exact shortest path from source to target through elements of metric value
// <= radius (membership decided by the metric, not by pre-enumeration).
// nullopt when the two are disconnected inside the ball.
template <class Model, class Metric>
std::optional<std::int64_t> in_ball_shortest_path(const Model& model, Metric&& metric,
                                                  std::int64_t radius,
                                                  const typename Model::Element& source,
                                                  const typename Model::Element& target,
                                                  std::uint64_t cap = kDefaultBallCap) {
  if (metric(source) > radius || metric(target) > radius) {
    throw std::invalid_argument("in-ball search endpoints must lie inside the ball");
  }
  if (source == target) return 0;
  using Element = typename Model::Element;
  std::unordered_map<Element, std::int64_t, typename Model::Hash> seen{{source, 0}};
  std::vector<Element> frontier{source};
  std::int64_t depth = 0;
  while (!frontier.empty()) {
    ++depth;
    std::vector<Element> next;
    for (const Element& e : frontier) {
      for (const auto& g : model.gens) {
        Element f = model.apply(e, g);
        if (metric(f) > radius || seen.contains(f)) continue;
        if (f == target) return depth;
        if (seen.size() >= cap) {
          throw std::runtime_error("in-ball search cap of " + std::to_string(cap) +
                                   " elements exceeded");
        }
        seen.emplace(f, depth);
        next.push_back(f);
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

struct DepthResult {
  bool exact = false;
  int value = 0;  // depth == value when exact, depth >= value otherwise
};

std::string to_string(const DepthResult& depth);

// Depth of a dead end: shortest escape length minus one, where an escape is
// a product of generators strictly increasing the metric. AtLeast(max_steps)
// when no escape exists within max_steps letters.
template <class Model, class Metric>
DepthResult escape_depth(const Model& model, Metric&& metric,
                         const typename Model::Element& e, int max_steps,
                         std::uint64_t cap = kDefaultBallCap) {
  std::int64_t base = metric(e);
  for (const auto& g : model.gens) {
    if (metric(model.apply(e, g)) > base) {
      throw std::invalid_argument("escape_depth requires a dead end element");
    }
  }
  using Element = typename Model::Element;
  std::unordered_map<Element, int, typename Model::Hash> seen{{e, 0}};
  std::vector<Element> frontier{e};
  for (int step = 1; step <= max_steps; ++step) {
    std::vector<Element> next;
    for (const Element& x : frontier) {
      for (const auto& g : model.gens) {
        Element f = model.apply(x, g);
        if (seen.contains(f)) continue;
        if (metric(f) > base) return DepthResult{true, step - 1};
        if (seen.size() >= cap) {
          throw std::runtime_error("escape search cap of " + std::to_string(cap) +
                                   " elements exceeded");
        }
        seen.emplace(f, step);
        next.push_back(f);
      }
    }
    frontier = std::move(next);
  }
  return DepthResult{false, max_steps};
}

// `r<TAB>count` per radius.
template <class Model>
std::string spheres_tsv(const BallIndex<Model>& ball) {
  std::string out;
  for (std::size_t r = 0; r < ball.sphere_sizes.size(); ++r) {
    out += std::to_string(r);
    out += '\t';
    out += std::to_string(ball.sphere_sizes[r]);
    out += '\n';
  }
  return out;
}

// Versioned text dump, one `<encoded element> <distance>` line per element,
// sorted by (distance, encoding).
template <class Model>
std::string dump_ball(const Model& model, const BallIndex<Model>& ball) {
  std::vector<std::pair<int, std::string>> lines;
  lines.reserve(ball.distances.size());
  for (const auto& [element, dist] : ball.distances) lines.emplace_back(dist, encode(element));
  std::sort(lines.begin(), lines.end());
  std::string out = "ball-index v1 group=" + model.label() +
                    " radius=" + std::to_string(ball.radius) + "\n";
  for (const auto& [dist, enc] : lines) {
    out += enc;
    out += ' ';
    out += std::to_string(dist);
    out += '\n';
  }
  return out;
}

}  // namespace lamplight
