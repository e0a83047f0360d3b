// Acceptance suite: one line per criterion, PASS/FAIL, exit 0 only when every
// selected criterion passes. Run a single criterion with --criterion N.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lamplight/cli.hpp"
#include "lamplight/metric.hpp"
#include "lamplight/oracle.hpp"
#include "lamplight/phenomena.hpp"
#include "lamplight/wreath.hpp"

using namespace lamplight;

namespace {

const auto lamp_metric = [](const LampElement& e) { return word_length(e); };
const auto wreath_metric = [](const WreathElement& e) { return word_length(e); };

struct Check {
  bool ok = true;
  std::string detail;

  void fail(const std::string& message) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += message;
  }
  void note(const std::string& message) {
    if (!detail.empty()) detail += "; ";
    detail += message;
  }
  void expect(bool condition, const std::string& message) {
    if (!condition) fail(message);
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --- criterion 1: the length formula matches BFS on L_2 B(10) -------------

Check criterion_metric_l2() {
  Check check;
  auto start = std::chrono::steady_clock::now();
  VerifyReport report = verify_metric(LnModel{Lamplighter(2)}, lamp_metric, 10);
  double elapsed = seconds_since(start);
  check.expect(report.mismatches == 0, "mismatch: " + report.first_mismatch);
  check.expect(elapsed < 10.0, "took " + std::to_string(elapsed) + "s, budget 10s");
  check.note("checked=" + std::to_string(report.checked));
  return check;
}

// --- criterion 2: the same for L_3 and L_4 on B(8) ------------------------

Check criterion_metric_ln() {
  Check check;
  for (int n : {3, 4}) {
    VerifyReport report = verify_metric(LnModel{Lamplighter(n)}, lamp_metric, 8);
    check.expect(report.mismatches == 0,
                 "n=" + std::to_string(n) + " mismatch: " + report.first_mismatch);
    check.note("n=" + std::to_string(n) + " checked=" + std::to_string(report.checked));
  }
  return check;
}

// --- criterion 3: the wreath metric over cyclic groups --------------------

Check criterion_wreath_metric() {
  Check check;

  Lamplighter l2(2);
  FiniteGroupTable z2 = cyclic_group(2);
  auto lamp_ball = enumerate_ball(LnModel{l2}, 8);
  auto wreath_ball = enumerate_ball(WreathModel{z2}, 8);
  check.expect(lamp_ball.distances.size() == wreath_ball.distances.size(),
               "cyclic:2 ball size differs from L_2");
  std::uint64_t mapped = 0;
  for (const auto& [e, dist] : lamp_ball.distances) {
    WreathElement w = identity(z2);
    for (const auto& [pos, state] : e.lamps.entries()) w.slots.set(pos, state);
    w.cursor = e.cursor;
    auto wreath_dist = ball_distance(wreath_ball, w);
    if (!wreath_dist || *wreath_dist != dist || word_length(w) != dist) {
      check.fail("bijection mismatch at " + encode(e));
      break;
    }
    ++mapped;
  }
  check.note("bijection checked=" + std::to_string(mapped));

  FiniteGroupTable z6 = cyclic_group(6);
  VerifyReport report = verify_metric(WreathModel{z6}, wreath_metric, 7);
  check.expect(report.mismatches == 0, "cyclic:6 mismatch: " + report.first_mismatch);
  check.note("cyclic:6 checked=" + std::to_string(report.checked));
  return check;
}

// --- criterion 4: the deep dead-end family --------------------------------

Check criterion_dead_end_family() {
  Check check;
  for (int n = 2; n <= 5; ++n) {
    Lamplighter group(n);
    int h = group.half();
    for (int m = 1; m <= 5; ++m) {
      LampElement d = dead_end_family(group, m);
      std::int64_t expected = 4 * m + static_cast<std::int64_t>(h) * (2 * m + 1);
      if (word_length(d) != expected) {
        check.fail("n=" + std::to_string(n) + " m=" + std::to_string(m) + " length " +
                   std::to_string(word_length(d)) + " != " + std::to_string(expected));
        continue;
      }
      DeadEndReport report = check_dead_end(d, 0);
      check.expect(report.is_dead_end,
                   "n=" + std::to_string(n) + " m=" + std::to_string(m) + " not a dead end");
      int kept = 0;
      int reduced_by_one = 0;
      for (const auto& [label, len] : report.neighbor_lengths) {
        if (len == report.length) ++kept;
        if (len == report.length - 1) ++reduced_by_one;
      }
      int gens = static_cast<int>(report.neighbor_lengths.size());
      if (n % 2 == 1) {
        check.expect(kept == 1 && reduced_by_one == gens - 1,
                     "odd n=" + std::to_string(n) + " m=" + std::to_string(m) +
                         ": expected exactly one length-keeping lamp generator");
      } else {
        check.expect(kept == 0 && reduced_by_one == gens,
                     "even n=" + std::to_string(n) + " m=" + std::to_string(m) +
                         ": expected every generator to reduce by 1");
      }
    }
  }
  check.note("families checked=20");
  return check;
}

// --- criterion 5: escape depths of d_1 and d_2 in L_2 ----------------------

Check criterion_escape_depth() {
  Check check;
  Lamplighter l2(2);
  LnModel model{l2};

  LampElement d1 = dead_end_family(l2, 1);
  DepthResult depth1 = escape_depth(model, lamp_metric, d1, 10);
  check.expect(depth1.exact && depth1.value == 2,
               "d_1 depth " + to_string(depth1) + " != 2");

  // independent exhaustive search over all words of length <= 3 from d_1
  std::int64_t base = word_length(d1);
  int shortest_escape = -1;
  std::vector<LampElement> layer{d1};
  for (int len = 1; len <= 3 && shortest_escape < 0; ++len) {
    std::vector<LampElement> next;
    for (const LampElement& x : layer) {
      for (const auto& g : model.gens) {
        LampElement y = model.apply(x, g);
        if (word_length(y) > base) shortest_escape = len;
        next.push_back(y);
      }
    }
    layer = std::move(next);
  }
  check.expect(shortest_escape == 3,
               "exhaustive shortest escape " + std::to_string(shortest_escape) + " != 3");

  LampElement d2 = dead_end_family(l2, 2);
  DepthResult depth2 = escape_depth(model, lamp_metric, d2, 12);
  check.expect(depth2.exact, "d_2 depth not resolved within 12 steps");
  check.expect(depth2.value >= 2, "d_2 depth " + to_string(depth2) + " < 2");
  check.note("d_1 depth=2, d_2 depth=" + to_string(depth2));
  return check;
}

// --- criterion 6: the seesaw family ----------------------------------------

Check criterion_seesaw() {
  Check check;
  Lamplighter l2(2);
  for (int n = 1; n <= 5; ++n) {
    LampElement w = seesaw_family(l2, n);
    check.expect(word_length(w) == 4 * n + 2,
                 "n=" + std::to_string(n) + " length != " + std::to_string(4 * n + 2));
    for (int k = 1; k <= n; ++k) {
      SeesawReport report = check_seesaw(w, "t", k);
      check.expect(report.holds,
                   "n=" + std::to_string(n) + " swing " + std::to_string(k) + " fails");
    }
    // along the descent only t keeps shortening
    LampElement x = w;
    for (int l = 1; l <= n - 1; ++l) {
      x = apply_gen(x, kShiftRight);
      std::int64_t len = word_length(x);
      check.expect(len == 4 * n + 2 - l, "descent length wrong at l=" + std::to_string(l));
      check.expect(word_length(apply_gen(x, kShiftRight)) == len - 1,
                   "t does not reduce at l=" + std::to_string(l));
      check.expect(word_length(apply_gen(x, kShiftLeft)) == len + 1,
                   "t^-1 unexpectedly reduces at l=" + std::to_string(l));
      check.expect(word_length(apply_gen(x, kLampUp)) >= len,
                   "a reduces at l=" + std::to_string(l));
      check.expect(word_length(apply_gen(x, kLampDown)) >= len,
                   "a^-1 reduces at l=" + std::to_string(l));
    }
  }
  check.note("n=1..5 checked");
  return check;
}

// --- criterion 7: convexity witnesses and the two-extreme floor ------------

Check criterion_convexity() {
  Check check;
  auto start = std::chrono::steady_clock::now();
  Lamplighter l2(2);

  ConvexityReport first = convexity_witness(l2, 1, true);
  check.expect(first.in_ball_distance && *first.in_ball_distance == 10,
               "witness 1 in-ball distance != 10");
  check.expect(first.mac_bound == 9 && first.violates_mac && *first.violates_mac,
               "witness 1 does not violate the MAC bound");

  ConvexityReport second = convexity_witness(l2, 2, true);
  check.expect(second.in_ball_distance && *second.in_ball_distance >= 18,
               "witness 2 in-ball distance < 18");
  check.expect(second.violates_mac && *second.violates_mac,
               "witness 2 does not violate the MAC bound");
  check.note("witness 2 in_ball_distance=" +
             (second.in_ball_distance ? std::to_string(*second.in_ball_distance)
                                      : std::string("disconnected")));

  for (int k : {1, 2}) {
    FloorReport floor = extreme_pair_floor(l2, k, 500);
    check.expect(floor.holds && floor.min_found == 4 * k + 2,
                 "floor at k=" + std::to_string(k) + " min " + std::to_string(floor.min_found));
  }

  double elapsed = seconds_since(start);
  check.expect(elapsed < 60.0, "took " + std::to_string(elapsed) + "s, budget 60s");
  return check;
}

// --- criterion 8: geodesic enumeration against brute force -----------------

// Lit positions occupied at least twice along the canonical tour, recomputed
// here from scratch.
int independent_twice_visited(const LampElement& e) {
  Position right = 0;
  Position left = 0;
  for (const auto& [pos, state] : e.lamps.entries()) {
    right = std::max(right, pos);
    left = std::max<Position>(left, -pos);
  }
  std::int64_t rf = 2 * right + left + std::abs(e.cursor + left);
  std::int64_t lf = 2 * left + right + std::abs(e.cursor - right);
  std::vector<Position> stops = rf <= lf ? std::vector<Position>{0, right, -left, e.cursor}
                                         : std::vector<Position>{0, -left, right, e.cursor};
  std::vector<Position> path{stops[0]};
  for (std::size_t i = 1; i < stops.size(); ++i) {
    Position at = path.back();
    while (at != stops[i]) {
      at += stops[i] > at ? 1 : -1;
      path.push_back(at);
    }
  }
  int count = 0;
  for (const auto& [pos, state] : e.lamps.entries()) {
    if (std::count(path.begin(), path.end(), pos) >= 2) ++count;
  }
  return count;
}

void collect_geodesic_words(const LnModel& model, const LampElement& target,
                            const LampElement& current, Word& prefix, std::size_t budget,
                            std::set<Word>& out) {
  if (prefix.size() == budget) {
    if (current == target) out.insert(prefix);
    return;
  }
  for (const auto& g : model.gens) {
    prefix.push_back(g.letter);
    collect_geodesic_words(model, target, model.apply(current, g), prefix, budget, out);
    prefix.pop_back();
  }
}

Check criterion_enumeration() {
  Check check;
  Lamplighter l2(2);
  LnModel model{l2};
  std::mt19937_64 rng(0xFEEDFACE);
  std::uniform_int_distribution<int> len_dist(0, 8);
  std::uniform_int_distribution<int> gen_dist(0, 2);

  std::set<LampElement, bool (*)(const LampElement&, const LampElement&)> seen(
      [](const LampElement& a, const LampElement& b) { return encode(a) < encode(b); });
  int unique_side_cases = 0;
  while (seen.size() < 100) {
    LampElement e = identity(l2);
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) {
      int pick = gen_dist(rng);
      e = apply_gen(e, pick == 0 ? kLampUp : pick == 1 ? kShiftRight : kShiftLeft);
    }
    if (!seen.insert(e).second) continue;

    std::int64_t d = word_length(e);
    std::vector<Word> variants = enumerate_geodesics(e);
    for (const Word& w : variants) {
      if (eval_word(l2, w) != e || static_cast<std::int64_t>(w.size()) != d) {
        check.fail("bad variant for " + encode(e));
        break;
      }
    }

    std::set<Word> bfs_words;
    Word prefix;
    collect_geodesic_words(model, e, identity(l2), prefix, static_cast<std::size_t>(d),
                           bfs_words);
    for (const Word& w : variants) {
      if (!bfs_words.contains(w)) {
        check.fail("variant not found by brute force for " + encode(e));
        break;
      }
    }

    Position right = 0;
    Position left = 0;
    for (const auto& [pos, state] : e.lamps.entries()) {
      right = std::max(right, pos);
      left = std::max<Position>(left, -pos);
    }
    std::int64_t rf = 2 * right + left + std::abs(e.cursor + left);
    std::int64_t lf = 2 * left + right + std::abs(e.cursor - right);
    if (rf != lf) {
      ++unique_side_cases;
      auto expected = static_cast<std::size_t>(1) << independent_twice_visited(e);
      if (variants.size() != expected) {
        check.fail("count " + std::to_string(variants.size()) + " != 2^p = " +
                   std::to_string(expected) + " for " + encode(e));
      }
    }
    if (!check.ok) break;
  }
  check.note("elements=100 unique_side=" + std::to_string(unique_side_cases));
  return check;
}

// --- criterion 9: lifted dead ends in wreath products ----------------------

Check criterion_lifted_dead_ends() {
  Check check;
  struct Case {
    int order;
    int dead_end;
  };
  for (const Case& c : {Case{5, 2}, Case{6, 3}}) {
    FiniteGroupTable group = cyclic_group(c.order);
    WreathModel model{group};
    for (int m : {1, 2}) {
      WreathElement e = lift_dead_end_family(group, c.dead_end, m);
      std::int64_t base = word_length(e);
      for (const auto& g : model.gens) {
        if (word_length(model.apply(e, g)) > base) {
          check.fail("cyclic:" + std::to_string(c.order) + " m=" + std::to_string(m) +
                     " generator increases length");
        }
      }
      DepthResult depth = escape_depth(model, wreath_metric, e, 10);
      check.note("cyclic:" + std::to_string(c.order) + " m=" + std::to_string(m) +
                 " length=" + std::to_string(base) + " depth=" + to_string(depth));
    }
  }
  return check;
}

// --- criterion 10: determinism across worker counts ------------------------

Check criterion_determinism() {
  Check check;
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "lamplight-acceptance";
  fs::create_directories(dir);
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  };

  auto run = [](std::vector<std::string> args, std::string& out_text) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    out_text = out.str();
    return code;
  };

  struct Invocation {
    std::vector<std::string> args;
    std::string dump_name;
  };
  std::vector<Invocation> invocations{
      {{"ball", "--n", "2", "--radius", "8", "--spheres", "--verify"}, "l2.ball"},
      {{"wreath", "--group", "cyclic:6", "ball", "--radius", "5", "--spheres", "--verify"},
       "z6.ball"},
  };
  for (const Invocation& invocation : invocations) {
    std::string base_out;
    std::string base_dump;
    for (int workers : {1, 4}) {
      fs::path dump = dir / (std::to_string(workers) + invocation.dump_name);
      std::vector<std::string> args = invocation.args;
      args.insert(args.end(), {"--workers", std::to_string(workers), "--dump", dump.string()});
      std::string out_text;
      int code = run(args, out_text);
      check.expect(code == 0, "CLI exited " + std::to_string(code));
      if (workers == 1) {
        base_out = out_text;
        base_dump = slurp(dump);
        check.expect(!base_dump.empty(), "empty dump");
      } else {
        check.expect(out_text == base_out, "stdout differs between 1 and 4 workers");
        check.expect(slurp(dump) == base_dump, "dump differs between 1 and 4 workers");
      }
    }
  }
  fs::remove_all(dir);

  LnModel model{Lamplighter(3)};
  auto one = enumerate_ball(model, 7, 1);
  auto four = enumerate_ball(model, 7, 4);
  check.expect(dump_ball(model, one) == dump_ball(model, four),
               "library ball dump differs across workers");
  check.note("reports byte-identical");
  return check;
}

struct Criterion {
  int id;
  std::string title;
  std::function<Check()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }

  std::vector<Criterion> criteria{
      {1, "length formula equals BFS distance on L_2 B(10)", criterion_metric_l2},
      {2, "length formula equals BFS distance on L_3/L_4 B(8)", criterion_metric_ln},
      {3, "wreath metric matches L_2 bijection and cyclic:6 oracle", criterion_wreath_metric},
      {4, "dead-end family: lengths and neighbor behavior", criterion_dead_end_family},
      {5, "escape depths of d_1/d_2 computed exactly", criterion_escape_depth},
      {6, "seesaw family: lengths, swings, forced descent", criterion_seesaw},
      {7, "convexity witnesses and two-extreme floor", criterion_convexity},
      {8, "geodesic enumeration matches brute force", criterion_enumeration},
      {9, "lifted dead ends in cyclic wreath products", criterion_lifted_dead_ends},
      {10, "ball enumeration deterministic across workers", criterion_determinism},
  };

  bool all_ok = true;
  for (const Criterion& criterion : criteria) {
    if (only != 0 && criterion.id != only) continue;
    Check check;
    try {
      check = criterion.run();
    } catch (const std::exception& e) {
      check.ok = false;
      check.detail = std::string("exception: ") + e.what();
    }
    all_ok = all_ok && check.ok;
    std::cout << "[" << (criterion.id < 10 ? " " : "") << criterion.id << "] "
              << (check.ok ? "PASS" : "FAIL") << " " << criterion.title;
    if (!check.detail.empty()) std::cout << " (" << check.detail << ")";
    std::cout << "\n";
  }
  return all_ok ? 0 : 1;
}
