#include "lamplight/cli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"

#include "lamplight/finite_group.hpp"
#include "lamplight/lamplighter.hpp"
#include "lamplight/metric.hpp"
#include "lamplight/oracle.hpp"
#include "lamplight/phenomena.hpp"
#include "lamplight/wreath.hpp"
#include "lamplight/word.hpp"

namespace lamplight {

namespace {

struct BallOptions {
  int radius = 0;
  bool spheres = false;
  bool verify = false;
  std::string dump_path;
  int workers = 1;
  std::uint64_t cap = kDefaultBallCap;
};

void add_ball_options(CLI::App* cmd, BallOptions& opts) {
  cmd->add_option("--radius", opts.radius, "ball radius")->required();
  cmd->add_flag("--spheres", opts.spheres, "print sphere sizes as TSV");
  cmd->add_flag("--verify", opts.verify, "compare the length formula against BFS distances");
  cmd->add_option("--dump", opts.dump_path, "write the sorted ball index to a file");
  cmd->add_option("--workers", opts.workers, "worker threads for ball enumeration")
      ->default_val(1);
  cmd->add_option("--cap", opts.cap, "element cap for ball enumeration")
      ->default_val(kDefaultBallCap);
}

// Enumerates, prints and optionally verifies one ball; returns the exit code.
template <class Model, class Metric>
int run_ball(const Model& model, Metric&& metric, const BallOptions& opts, std::ostream& out) {
  BallIndex<Model> ball = enumerate_ball(model, opts.radius, opts.workers, opts.cap);
  if (opts.spheres) out << spheres_tsv(ball);
  int exit_code = 0;
  if (opts.verify) {
    VerifyReport report = verify_ball(ball, metric);
    out << to_string(report) << "\n";
    if (report.mismatches > 0) exit_code = 1;
  }
  if (!opts.spheres && !opts.verify) {
    out << "radius=" << ball.radius << " elements=" << ball.distances.size() << "\n";
  }
  if (!opts.dump_path.empty()) {
    std::ofstream file(opts.dump_path);
    if (!file) throw std::invalid_argument("cannot open dump file '" + opts.dump_path + "'");
    file << dump_ball(model, ball);
  }
  return exit_code;
}

int print_dead_end_report(const DeadEndReport& report, bool expect_dead_end, std::ostream& out) {
  out << to_string(report);
  return expect_dead_end && !report.is_dead_end ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"word metrics, geodesics and Cayley-ball phenomena in lamplighter groups "
               "and wreath products over Z"};
  app.require_subcommand(1);
  int exit_code = 0;

  int n = 2;
  std::string word_text;

  // length
  auto* length_cmd = app.add_subcommand("length", "exact word length and both normal forms");
  length_cmd->add_option("--n", n, "number of lamp states")->required();
  length_cmd->add_option("--word", word_text, "word over {a, t}")->required();
  length_cmd->callback([&] {
    Lamplighter group(n);
    LampElement e = eval_word(group, parse_word(word_text, lamplighter_alphabet()));
    out << "length=" << word_length(e) << "\n";
    out << to_string(normal_form(e, Side::RightFirst)) << "\n";
    out << to_string(normal_form(e, Side::LeftFirst)) << "\n";
  });

  // geodesic
  bool enumerate_flag = false;
  auto* geodesic_cmd = app.add_subcommand("geodesic", "a geodesic word for the given element");
  geodesic_cmd->add_option("--n", n, "number of lamp states")->required();
  geodesic_cmd->add_option("--word", word_text, "word over {a, t}")->required();
  geodesic_cmd->add_flag("--enumerate", enumerate_flag, "print every geodesic variant");
  geodesic_cmd->callback([&] {
    Lamplighter group(n);
    LampElement e = eval_word(group, parse_word(word_text, lamplighter_alphabet()));
    if (enumerate_flag) {
      for (const Word& variant : enumerate_geodesics(e)) out << to_string(variant) << "\n";
    } else {
      out << to_string(emit_geodesic(e)) << "\n";
    }
  });

  // ball
  BallOptions ball_opts;
  auto* ball_cmd = app.add_subcommand("ball", "enumerate a Cayley ball by BFS");
  ball_cmd->add_option("--n", n, "number of lamp states")->required();
  add_ball_options(ball_cmd, ball_opts);
  ball_cmd->callback([&] {
    Lamplighter group(n);
    exit_code = run_ball(LnModel(group), [](const LampElement& e) { return word_length(e); },
                         ball_opts, out);
  });

  // deadend
  std::optional<int> family_m;
  std::optional<std::string> element_word;
  int max_depth = 12;
  auto* deadend_cmd = app.add_subcommand("deadend", "dead-end verdict for a family member or word");
  deadend_cmd->add_option("--n", n, "number of lamp states")->required();
  deadend_cmd->add_option("--m", family_m, "family index: lamps on [-m, m] at the farthest state");
  deadend_cmd->add_option("--word", element_word, "word over {a, t}");
  deadend_cmd->add_option("--max-depth", max_depth, "escape search step limit")->default_val(12);
  deadend_cmd->callback([&] {
    if (family_m.has_value() == element_word.has_value()) {
      throw std::invalid_argument("give exactly one of --m and --word");
    }
    Lamplighter group(n);
    LampElement e;
    if (family_m) {
      e = dead_end_family(group, *family_m);
      out << "family=deadend n=" << n << " m=" << *family_m << "\n";
    } else {
      e = eval_word(group, parse_word(*element_word, lamplighter_alphabet()));
    }
    exit_code = print_dead_end_report(check_dead_end(e, max_depth), family_m.has_value(), out);
  });

  // seesaw
  int seesaw_m = 1;
  std::optional<int> swing;
  auto* seesaw_cmd = app.add_subcommand("seesaw", "seesaw verdict for the two-lamp family");
  seesaw_cmd->add_option("--n", n, "number of lamp states")->required();
  seesaw_cmd->add_option("--m", seesaw_m, "family index: lamps at +m and -m")->required();
  seesaw_cmd->add_option("--swing", swing, "swing to check (default: the family index)");
  seesaw_cmd->callback([&] {
    Lamplighter group(n);
    LampElement e = seesaw_family(group, seesaw_m);
    out << "family=seesaw n=" << n << " k=" << seesaw_m << "\n";
    SeesawReport report = check_seesaw(e, "t", swing.value_or(seesaw_m));
    out << to_string(report);
    exit_code = report.holds ? 0 : 1;
  });

  // convexity
  int witness = 1;
  bool run_search = false;
  auto* convexity_cmd =
      app.add_subcommand("convexity", "convexity-failure witness pair around a seesaw word");
  convexity_cmd->add_option("--n", n, "number of lamp states")->required();
  convexity_cmd->add_option("--witness", witness, "witness index k (pair around the seesaw word)")
      ->required();
  convexity_cmd->add_flag("--search", run_search, "run the constrained in-ball search");
  convexity_cmd->callback([&] {
    Lamplighter group(n);
    ConvexityReport report = convexity_witness(group, witness, run_search);
    out << to_string(report);
    if (run_search && !(report.violates_mac && *report.violates_mac)) exit_code = 1;
  });

  // wreath
  std::string group_spec;
  auto* wreath_cmd = app.add_subcommand("wreath", "the same computations in G wr Z");
  wreath_cmd->add_option("--group", group_spec, "cyclic:<k> or a group table file")->required();
  wreath_cmd->require_subcommand(1);

  auto* wlength_cmd = wreath_cmd->add_subcommand("length", "exact word length and side costs");
  wlength_cmd->add_option("--word", word_text, "word over the group's generators and t")
      ->required();
  wlength_cmd->callback([&] {
    FiniteGroupTable group = make_group(group_spec);
    WreathElement e = eval_word(group, parse_word(word_text, wreath_alphabet(group)));
    out << "element: " << to_string(e) << "\n";
    out << "length=" << word_length(e) << " cost_rf=" << side_cost(e, Side::RightFirst)
        << " cost_lf=" << side_cost(e, Side::LeftFirst) << "\n";
  });

  bool wreath_enumerate = false;
  auto* wgeodesic_cmd = wreath_cmd->add_subcommand("geodesic", "a geodesic word for the element");
  wgeodesic_cmd->add_option("--word", word_text, "word over the group's generators and t")
      ->required();
  wgeodesic_cmd->add_flag("--enumerate", wreath_enumerate, "print every geodesic variant");
  wgeodesic_cmd->callback([&] {
    FiniteGroupTable group = make_group(group_spec);
    WreathElement e = eval_word(group, parse_word(word_text, wreath_alphabet(group)));
    if (wreath_enumerate) {
      for (const Word& variant : enumerate_geodesics(e)) out << to_string(variant) << "\n";
    } else {
      out << to_string(emit_geodesic(e)) << "\n";
    }
  });

  BallOptions wreath_ball_opts;
  auto* wball_cmd = wreath_cmd->add_subcommand("ball", "enumerate a Cayley ball by BFS");
  add_ball_options(wball_cmd, wreath_ball_opts);
  wball_cmd->callback([&] {
    FiniteGroupTable group = make_group(group_spec);
    exit_code = run_ball(WreathModel(group),
                         [](const WreathElement& e) { return word_length(e); },
                         wreath_ball_opts, out);
  });

  std::optional<int> lift_element;
  std::optional<int> lift_m;
  std::optional<std::string> wreath_word;
  int wreath_max_depth = 12;
  auto* wdeadend_cmd =
      wreath_cmd->add_subcommand("deadend", "dead-end verdict for a lifted family member or word");
  wdeadend_cmd->add_option("--element", lift_element, "dead-end element index in the group");
  wdeadend_cmd->add_option("--m", lift_m, "family radius: slots on [-m, m]");
  wdeadend_cmd->add_option("--word", wreath_word, "word over the group's generators and t");
  wdeadend_cmd->add_option("--max-depth", wreath_max_depth, "escape search step limit")
      ->default_val(12);
  wdeadend_cmd->callback([&] {
    bool family_mode = lift_element.has_value() || lift_m.has_value();
    if (family_mode == wreath_word.has_value() ||
        (family_mode && !(lift_element && lift_m))) {
      throw std::invalid_argument("give either --element with --m, or --word");
    }
    FiniteGroupTable group = make_group(group_spec);
    WreathElement e;
    if (family_mode) {
      e = lift_dead_end_family(group, *lift_element, *lift_m);
      out << "family=lifted-deadend group=" << group.name() << " element=" << *lift_element
          << " m=" << *lift_m << "\n";
    } else {
      e = eval_word(group, parse_word(*wreath_word, wreath_alphabet(group)));
    }
    exit_code = print_dead_end_report(check_dead_end(e, wreath_max_depth), family_mode, out);
  });

  std::vector<std::string> argv{"lamplight"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const std::string& a : argv) raw.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace lamplight
