#include "psl/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "psl/analysis.hpp"
#include "psl/canonical.hpp"
#include "psl/enumeration.hpp"
#include "psl/lines.hpp"
#include "psl/necklace.hpp"
#include "psl/realizer.hpp"
#include "psl/svg.hpp"
#include "psl/sweep.hpp"

namespace psl {

namespace {

/// Input problems the user has to fix; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

WiringDiagram load_diagram(const std::string& path) {
  try {
    return parse_wiring(read_file(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int cmd_analyze(const std::string& path, std::ostream& out) {
  const CellComplex c(load_diagram(path));
  nlohmann::ordered_json report = analysis_report(c);
  out << report.dump(2) << "\n";
  return report["pass"] == false ? kExitCheckFailed : kExitOk;
}

int cmd_enumerate(int n, const std::string& filter, bool dedup, bool count_only, int jobs, std::ostream& out) {
  EnumerationOptions o;
  o.n = n;
  o.filter = filter.empty() ? Filter::None : parse_filter(filter);
  o.dedup = dedup;
  o.jobs = jobs;
  if (count_only) {
    out << count_simple(o) << "\n";
    return kExitOk;
  }
  for (const WiringDiagram& d : enumerate_simple(o)) out << format_swaps(d) << "\n";
  return kExitOk;
}

int cmd_necklace(int m, bool count, bool list, const std::string& build, std::ostream& out) {
  if (count + list + !build.empty() != 1) throw UsageError("necklace needs exactly one of --count, --list, --build");
  if (!build.empty()) {
    SelfDualNecklace c = parse_necklace(build);
    if (m > 0 && c.m != m) throw UsageError("--build bitstring has " + std::to_string(2 * c.m) + " beads, --m says " +
                                            std::to_string(2 * m));
    NecklaceArrangement a = build_arrangement(c);
    nlohmann::ordered_json j;
    j["necklace"] = c.to_string();
    j["lines"] = lines_to_json(a.lines);
    j["diagram"] = format_wiring(a.diagram);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  if (m < 1) throw UsageError("--m must be at least 1");
  if (count) {
    out << q_formula(m).get_str() << "\n";
    return kExitOk;
  }
  for (const SelfDualNecklace& c : enumerate_selfdual(m)) out << c.to_string() << "\n";
  return kExitOk;
}

int cmd_realize(const std::string& path, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  const WiringDiagram d = load_diagram(path);
  RealizerOptions options;
  options.seed = seed;
  Realization r;
  try {
    r = realize_im(d, options);
  } catch (const RealizerError& e) {
    err << "realize: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  out << lines_to_json(r.lines).dump(2) << "\n";
  if (!realizes(r.lines, d)) {
    err << "realize: round trip failed\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_render(const std::string& path, const std::string& lines_path, std::ostream& out, std::ostream& err) {
  const WiringDiagram d = load_diagram(path);
  if (lines_path.empty()) {
    out << render_grid_svg(CellComplex(d));
    return kExitOk;
  }
  LineArrangement la;
  try {
    la = lines_from_json(nlohmann::ordered_json::parse(read_file(lines_path)));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(lines_path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(lines_path + ": " + e.what());
  }
  LinesDiagram ld = lines_to_diagram(la);
  const CellComplex lc(ld.diagram);
  out << render_lines_svg(lc, la, ld.line_of_wire);
  if (!isomorphic(CellComplex(d), lc)) {
    err << "render: the lines do not realize " << path << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

std::string swaps_text(const std::vector<int>& swaps) {
  std::string s;
  for (int t : swaps) s += (s.empty() ? "" : " ") + std::to_string(t);
  return s;
}

int cmd_verify(int max_n, int jobs, std::ostream& out, std::ostream& err) {
  if (max_n < 1 || max_n > kMaxEnumerationWires) throw NTooLargeError(max_n);
  out << std::left << std::setw(30) << "suite" << std::setw(4) << "n" << std::right << std::setw(12) << "checked"
      << std::setw(10) << "failed" << "  status\n";
  std::optional<std::string> first;
  for (int n = 1; n <= max_n; ++n) {
    SweepResult r = sweep_parallel(n, jobs);
    out << std::left << std::setw(30) << "words" << std::setw(4) << n << std::right << std::setw(12) << r.words
        << std::setw(10) << 0 << "  -\n";
    for (int i = 0; i < kNumSuites; ++i) {
      const SuiteTally& t = r.suites[i];
      out << std::left << std::setw(30) << suite_name(static_cast<Suite>(i)) << std::setw(4) << n << std::right
          << std::setw(12) << t.checked << std::setw(10) << t.failed << "  " << (t.failed ? "FAIL" : "ok") << "\n";
      if (t.first_failure && !first) {
        first = std::string(suite_name(static_cast<Suite>(i))) + " n=" + std::to_string(n) + " swaps=[" +
                swaps_text(t.first_failure->swaps) + "]: " + t.first_failure->message;
      }
    }
  }
  if (first) {
    err << "counterexample: " << *first << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudoline arrangements: analysis, enumeration, necklaces, stretching"};
  app.name(args.empty() ? "pslarr" : args[0]);
  app.require_subcommand(1);

  std::string file, lines_path, filter, build;
  int n = 0, m = 0, jobs = 0;
  bool dedup = false, count_only = false, count = false, list = false;
  std::uint64_t seed = 1;

  auto* analyze = app.add_subcommand("analyze", "Face census, criticality and Im membership as JSON");
  analyze->add_option("file", file, "Wiring diagram file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "All wiring diagrams with n wires, one swap list per line");
  enumerate->add_option("--n", n, "Number of wires (1..7)")->required();
  enumerate->add_option("--filter", filter, "one-ge5 | im")->check(CLI::IsMember({"one-ge5", "im"}));
  enumerate->add_flag("--dedup", dedup, "One diagram per isomorphism class");
  enumerate->add_flag("--count-only", count_only, "Print only the number of diagrams");
  enumerate->add_option("--jobs", jobs, "Worker threads (0 = default)")->check(CLI::NonNegativeNumber);

  auto* necklace = app.add_subcommand("necklace", "Self-dual necklaces and their arrangements");
  necklace->add_option("--m", m, "Half the number of beads");
  necklace->add_flag("--count", count, "Print the number of necklaces");
  necklace->add_flag("--list", list, "List canonical necklaces");
  necklace->add_option("--build", build, "Build the arrangement of a bitstring");

  auto* realize = app.add_subcommand("realize", "Straight-line realization of an Im arrangement");
  realize->add_option("file", file, "Wiring diagram file")->required();
  realize->add_option("--seed", seed, "Seed of the base-case search");

  auto* render = app.add_subcommand("render", "SVG drawing");
  render->add_option("file", file, "Wiring diagram file")->required();
  render->add_option("--lines", lines_path, "Line arrangement JSON to draw instead of the wiring diagram");

  auto* verify = app.add_subcommand("verify", "Run every property suite over all diagrams with up to N wires");
  verify->add_option("--n", n, "Largest number of wires")->required();
  verify->add_option("--jobs", jobs, "Worker threads (0 = default)")->check(CLI::NonNegativeNumber);

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(file, out);
    if (*enumerate) return cmd_enumerate(n, filter, dedup, count_only, jobs, out);
    if (*necklace) return cmd_necklace(m, count, list, build, out);
    if (*realize) return cmd_realize(file, seed, out, err);
    if (*render) return cmd_render(file, lines_path, out, err);
    if (*verify) return cmd_verify(n, jobs, out, err);
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const NTooLargeError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const LineError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace psl
