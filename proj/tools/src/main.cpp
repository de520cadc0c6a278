#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <bracealg/errors.hpp>
#include <bracealg/multimap.hpp>

#include "bracealg_cli/checks.hpp"
#include "bracealg_cli/fuzz.hpp"
#include "bracealg_cli/workspace.hpp"

namespace {

using namespace bracealg;
using namespace bracealg::cli;

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw InputError("--degree-range expects lo..hi");
  try {
    std::size_t used = 0;
    const std::string lo_text = text.substr(0, dots);
    const std::string hi_text = text.substr(dots + 2);
    const int lo = std::stoi(lo_text, &used);
    if (used != lo_text.size()) throw std::invalid_argument(lo_text);
    const int hi = std::stoi(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument(hi_text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw InputError("--degree-range expects integers lo..hi, got '" + text + "'");
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("failed writing '" + path + "'");
}

InsertionSignConvention convention_from(const std::string& name) {
  return name == "from-first-block" ? InsertionSignConvention::kFromFirstBlock
                                    : InsertionSignConvention::kFromSlotZero;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for brace and symmetric brace identities on graded multilinear maps"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "Run one named check");
  std::string check_name;
  std::string workspace_path;
  CheckArgs args;
  std::string insertion_sign = "from-slot-zero";
  bool timing = false;
  std::vector<int> blocks;
  int cases = 0, max_n = 0, max_r = 0;
  check->add_option("name", check_name, "Check name")->required()->check(CLI::IsMember(check_names()));
  check->add_option("--workspace", workspace_path, "Workspace JSON file");
  check->add_option("--x", args.x, "Outer map of the brace axiom");
  check->add_option("--f", args.f, "Outer map");
  check->add_option("--xs", args.xs, "Comma-separated map names")->delimiter(',');
  check->add_option("--ys", args.ys, "Comma-separated map names")->delimiter(',');
  check->add_option("--gs", args.gs, "Comma-separated map names")->delimiter(',');
  check->add_option("--maps", args.maps, "Structure components")->delimiter(',');
  check->add_option("--max-arity", args.max_arity, "Highest output arity for structure checks");
  auto* blocks_opt = check->add_option("--blocks", blocks, "Block sizes for lemma42")->delimiter(',');
  check->add_option("--seed", args.seed, "Seed for sampled sweeps");
  auto* cases_opt = check->add_option("--cases", cases, "Samples per sweep point");
  auto* max_n_opt = check->add_option("--max-n", max_n, "Size bound for permutation sweeps");
  auto* max_r_opt = check->add_option("--max-r", max_r, "Sequence length bound for lemma43");
  check->add_option("--insertion-sign", insertion_sign, "Insertion sign convention")
      ->check(CLI::IsMember({"from-slot-zero", "from-first-block"}));
  check->add_flag("--timing", timing, "Append elapsed time");

  // fuzz
  auto* fuzz = app.add_subcommand("fuzz", "Seeded random instances");
  FuzzOptions fuzz_options;
  std::string checks_text = "all";
  std::string degree_range = "-2..2";
  std::string fuzz_sign = "from-slot-zero";
  bool fuzz_timing = false;
  int only_case = -1;
  fuzz->add_option("--seed", fuzz_options.seed, "Generator seed");
  fuzz->add_option("--cases", fuzz_options.cases, "Number of cases");
  auto* case_opt = fuzz->add_option("--case", only_case, "Replay one case index");
  fuzz->add_option("--checks", checks_text, "'all' or comma-separated check names");
  fuzz->add_option("--min-dim", fuzz_options.caps.min_dim, "Smallest space dimension");
  fuzz->add_option("--max-dim", fuzz_options.caps.max_dim, "Largest space dimension");
  fuzz->add_option("--max-arity", fuzz_options.caps.max_arity, "Largest generated arity");
  fuzz->add_option("--max-n", fuzz_options.caps.max_n, "Maps in the first brace");
  fuzz->add_option("--max-r", fuzz_options.caps.max_r, "Maps in the second brace");
  fuzz->add_option("--degree-range", degree_range, "Basis degrees lo..hi");
  fuzz->add_option("--max-arity-out", fuzz_options.caps.max_arity_out, "Largest result arity");
  fuzz->add_option("--insertion-sign", fuzz_sign, "Insertion sign convention")
      ->check(CLI::IsMember({"from-slot-zero", "from-first-block"}));
  fuzz->add_flag("--timing", fuzz_timing, "Append elapsed time");

  // antisymmetrize
  auto* as = app.add_subcommand("antisymmetrize", "Add as_<map> to a workspace");
  std::string as_workspace, as_map, as_out;
  as->add_option("--workspace", as_workspace, "Workspace JSON file")->required();
  as->add_option("--map", as_map, "Map to antisymmetrize")->required();
  as->add_option("--out", as_out, "Output workspace file")->required();

  // fmt
  auto* fmt = app.add_subcommand("fmt", "Rewrite a workspace in canonical form");
  std::string fmt_workspace, fmt_out;
  fmt->add_option("--workspace", fmt_workspace, "Workspace JSON file")->required();
  fmt->add_option("--out", fmt_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (check->parsed()) {
      args.brace.convention = convention_from(insertion_sign);
      if (*blocks_opt) args.blocks = blocks;
      if (*cases_opt) args.cases = cases;
      if (*max_n_opt) args.max_n = max_n;
      if (*max_r_opt) args.max_r = max_r;
      std::optional<Workspace> ws;
      if (!workspace_path.empty()) ws.emplace(parse_workspace(workspace_path));
      const auto report = run_check(check_name, ws ? &*ws : nullptr, args);
      std::cout << format_report(report, timing);
      return report.passed ? 0 : kExitFail;
    }
    if (fuzz->parsed()) {
      const auto [lo, hi] = parse_range(degree_range);
      fuzz_options.caps.degree_lo = lo;
      fuzz_options.caps.degree_hi = hi;
      fuzz_options.brace.convention = convention_from(fuzz_sign);
      if (*case_opt) fuzz_options.only_case = only_case;
      if (checks_text == "all") {
        fuzz_options.checks = check_names();
      } else {
        std::size_t start = 0;
        while (start <= checks_text.size()) {
          const auto comma = checks_text.find(',', start);
          const auto end = comma == std::string::npos ? checks_text.size() : comma;
          fuzz_options.checks.push_back(checks_text.substr(start, end - start));
          start = end + 1;
        }
      }
      validate(fuzz_options);
      const bool ok = run_fuzz(fuzz_options, [&](const CheckReport& report) {
        std::cout << format_report(report, fuzz_timing) << std::flush;
      });
      return ok ? 0 : kExitFail;
    }
    if (as->parsed()) {
      Workspace ws = parse_workspace(as_workspace);
      ws.add_map("as_" + as_map, antisymmetrize(ws.map(as_map)));
      write_text(as_out, serialize_workspace(ws));
      return 0;
    }
    if (fmt->parsed()) {
      write_text(fmt_out, serialize_workspace(parse_workspace(fmt_workspace)));
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
