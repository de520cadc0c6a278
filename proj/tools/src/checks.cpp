#include "bracealg_cli/checks.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include <bracealg/arrangement.hpp>
#include <bracealg/errors.hpp>
#include <bracealg/homotopy.hpp>
#include <bracealg/symbrace.hpp>

#include "bracealg_cli/generate.hpp"

namespace bracealg::cli {

using nlohmann::ordered_json;

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "brace-axiom", "symbrace-axiom-ex33", "thm1",    "thm2",  "lemma41",  "lemma42",
      "lemma43",     "lemma44",             "lemma51", "ainfty", "linfty", "corollary"};
  return names;
}

bool is_check_name(const std::string& name) {
  const auto& names = check_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::string format_report(const CheckReport& report, bool timing) {
  std::ostringstream out;
  out << (report.passed ? "PASS " : "FAIL ") << report.check << " seed=" << report.seed
      << " case=" << report.case_index;
  for (const auto& [key, value] : report.params) out << ' ' << key << '=' << value;
  if (timing) out << " elapsed_ms=" << static_cast<long long>(report.elapsed_ms);
  out << '\n';
  for (const auto& line : report.counterexample) out << line << '\n';
  return out.str();
}

std::string workspace_line(const Workspace& ws) { return workspace_json(ws).dump(); }

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
  return out.empty() ? "-" : out;
}

std::string join(const std::vector<int>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + std::to_string(items[i]);
  return out.empty() ? "-" : out;
}

std::vector<int> one_based(const Permutation& p) {
  std::vector<int> out;
  for (int i : p.zero_based()) out.push_back(i + 1);
  return out;
}

const Workspace& need_workspace(const Workspace* ws, const std::string& check) {
  if (ws == nullptr) throw InputError("check '" + check + "' needs --workspace");
  return *ws;
}

const std::string& need_name(const std::string& name, const char* flag, const std::string& check) {
  if (name.empty()) throw InputError("check '" + check + "' needs --" + flag);
  return name;
}

std::vector<MultiMap> resolve(const Workspace& ws, const std::vector<std::string>& names) {
  std::vector<MultiMap> out;
  for (const auto& n : names) out.push_back(ws.map(n));
  return out;
}

using Roles = std::vector<std::pair<std::string, ordered_json>>;

void record_verdict(const Workspace& ws, const Verdict& verdict, const Roles& roles,
                    CheckReport& report) {
  report.passed = verdict.passed;
  if (verdict.passed) return;
  ordered_json doc;
  doc["check"] = report.check;
  ordered_json maps = ordered_json::object();
  for (const auto& [role, value] : roles) maps[role] = value;
  doc["maps"] = maps;
  doc["detail"] = verdict.detail;
  if (verdict.counterexample) {
    const auto& space = *ws.space();
    ordered_json input = ordered_json::array();
    for (int i : verdict.counterexample->input) input.push_back(space.name(i));
    doc["input"] = input;
    doc["lhs"] = vector_json(space, verdict.counterexample->left);
    doc["rhs"] = vector_json(space, verdict.counterexample->right);
  }
  doc["workspace"] = workspace_json(ws);
  report.counterexample.push_back(doc.dump());
}

void add_convention_param(const BraceOptions& options, CheckReport& report) {
  if (options.convention == InsertionSignConvention::kFromFirstBlock)
    report.params.emplace_back("insertion-sign", "from-first-block");
}

void run_brace_axiom(const Workspace& ws, const CheckArgs& args, CheckReport& report) {
  const auto& x = need_name(args.x, "x", report.check);
  report.params = {{"x", x}, {"xs", join(args.xs)}, {"ys", join(args.ys)}};
  add_convention_param(args.brace, report);
  const auto verdict = check_brace_axiom(ws.map(x), resolve(ws, args.xs), resolve(ws, args.ys), args.brace);
  record_verdict(ws, verdict, {{"x", x}, {"xs", args.xs}, {"ys", args.ys}}, report);
}

void run_symmetric_axiom(const Workspace& ws, const CheckArgs& args, SymBraceFlavor flavor,
                         CheckReport& report) {
  const auto& f = need_name(args.f, "f", report.check);
  report.params = {{"f", f}, {"gs", join(args.gs)}, {"xs", join(args.xs)}};
  add_convention_param(args.brace, report);
  const auto verdict = check_symmetric_brace_axiom(ws.map(f), resolve(ws, args.gs),
                                                   resolve(ws, args.xs), flavor, args.brace);
  record_verdict(ws, verdict, {{"f", f}, {"gs", args.gs}, {"xs", args.xs}}, report);
}

void run_compatibility(const Workspace& ws, const CheckArgs& args, CheckReport& report) {
  const auto& f = need_name(args.f, "f", report.check);
  report.params = {{"f", f}, {"gs", join(args.gs)}};
  add_convention_param(args.brace, report);
  const auto verdict = check_antisymmetrization_compatibility(ws.map(f), resolve(ws, args.gs), args.brace);
  record_verdict(ws, verdict, {{"f", f}, {"gs", args.gs}}, report);
}

void run_decomposition(const Workspace& ws, const CheckArgs& args, CheckReport& report) {
  const auto& f = need_name(args.f, "f", report.check);
  report.params = {{"f", f}};
  const auto verdict = check_antisymmetrization_decomposition(ws.map(f), args.brace.limits);
  record_verdict(ws, verdict, {{"f", f}}, report);
}

void run_expansion(const Workspace& ws, const CheckArgs& args, CheckReport& report) {
  const auto& f = need_name(args.f, "f", report.check);
  report.params = {{"f", f}, {"xs", join(args.xs)}};
  add_convention_param(args.brace, report);
  const auto verdict = check_interleaved_brace_expansion(ws.map(f), resolve(ws, args.xs), args.brace);
  record_verdict(ws, verdict, {{"f", f}, {"xs", args.xs}}, report);
}

void run_structure(const Workspace& ws, const CheckArgs& args, CheckReport& report) {
  if (args.maps.empty()) throw InputError("check '" + report.check + "' needs --maps");
  if (args.max_arity < 1) throw InputError("--max-arity must be >= 1");
  report.params = {{"maps", join(args.maps)}, {"max-arity", std::to_string(args.max_arity)}};
  const auto flavor =
      report.check == "linfty" ? StructureFlavor::kLInfinity : StructureFlavor::kAInfinity;
  const StructureFamily family(ws.space(), resolve(ws, args.maps), flavor);
  StructureVerdict verdict;
  if (report.check == "ainfty") {
    verdict = check_a_infinity(family, args.max_arity, args.brace);
  } else if (report.check == "linfty") {
    verdict = check_l_infinity(family, args.max_arity, args.brace.limits);
  } else {
    verdict = check_antisymmetrized_structure(family, args.max_arity, args.brace);
  }
  if (verdict) {
    report.params.emplace_back("verified-up-to", std::to_string(verdict.verified_up_to));
  } else if (verdict.failing_arity) {
    report.params.emplace_back("failing-arity", std::to_string(*verdict.failing_arity));
  }
  record_verdict(ws, verdict.verdict, {{"maps", args.maps}}, report);
}

// Exhaustive: every block spec of total size <= max_n (empty blocks allowed,
// at most total + 1 blocks) and every parity vector, under both signings.
void run_factorization_sweep(const CheckArgs& args, CheckReport& report) {
  std::vector<std::vector<int>> specs;
  int max_total = args.max_n.value_or(5);
  if (args.blocks) {
    specs.push_back(*args.blocks);
    report.params = {{"blocks", join(*args.blocks)}};
  } else {
    if (max_total < 0) throw InputError("--max-n must be >= 0");
    report.params = {{"max-n", std::to_string(max_total)}};
    for (int total = 0; total <= max_total; ++total) {
      for (int parts = 1; parts <= total + 1; ++parts) {
        std::vector<int> blocks(static_cast<std::size_t>(parts), 0);
        auto rec = [&](auto&& self, int i, int rem) -> void {
          if (i == parts - 1) {
            blocks[i] = rem;
            specs.push_back(blocks);
            return;
          }
          for (int v = 0; v <= rem; ++v) {
            blocks[i] = v;
            self(self, i + 1, rem - v);
          }
        };
        rec(rec, 0, total);
      }
    }
  }
  long long instances = 0;
  for (const auto& blocks : specs) {
    int total = 0;
    for (int b : blocks) {
      if (b < 0) throw InputError("--blocks entries must be >= 0");
      total += b;
    }
    if (total > args.brace.limits.max_unshuffle_size || total > 20)
      throw ResourceError("block total " + std::to_string(total) + " exceeds the unshuffle cap");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
      std::vector<int> degrees;
      for (int i = 0; i < total; ++i) degrees.push_back(static_cast<int>((mask >> i) & 1U));
      auto single = check_factorization_instance(blocks, degrees);
      ++instances;
      if (!single.passed) {
        report.passed = false;
        report.counterexample = std::move(single.counterexample);
        report.params.emplace_back("instances", std::to_string(instances));
        return;
      }
    }
  }
  report.params.emplace_back("instances", std::to_string(instances));
}

void run_relocation_sweep(const CheckArgs& args, CheckReport& report) {
  const int max_r = args.max_r.value_or(5);
  const int max_n = args.max_n.value_or(3);
  const int cases = args.cases.value_or(20);
  if (max_r < 0 || max_n < 0 || cases < 0) throw InputError("lemma43 sizes must be >= 0");
  report.params = {{"max-r", std::to_string(max_r)},
                   {"max-n", std::to_string(max_n)},
                   {"cases", std::to_string(cases)}};
  SplitMix64 rng(case_seed(args.seed, 0, report.check));
  long long instances = 0;
  for (int r = 0; r <= max_r; ++r) {
    const auto pis = enumerate_permutations(r, args.brace.limits);
    for (int n = 0; n <= max_n; ++n) {
      const auto sigmas = enumerate_permutations(n, args.brace.limits);
      for (const auto& pi : pis) {
        for (const auto& sigma : sigmas) {
          for (int c = 0; c < cases; ++c) {
            const auto shape = random_composition(rng, r, 2 * n + 1);
            std::vector<int> blocks, slots, degrees;
            for (int i = 0; i < 2 * n + 1; ++i) (i % 2 ? blocks : slots).push_back(shape[i]);
            for (int i = 0; i < r; ++i) degrees.push_back(rng.uniform(-2, 2));
            auto single = check_relocation_instance(pi, sigma, blocks, slots, degrees);
            ++instances;
            if (!single.passed) {
              report.passed = false;
              report.counterexample = std::move(single.counterexample);
              report.params.emplace_back("instances", std::to_string(instances));
              return;
            }
          }
        }
      }
    }
  }
  report.params.emplace_back("instances", std::to_string(instances));
}

void run_congruence_sweep(const CheckArgs& args, CheckReport& report) {
  const int max_n = args.max_n.value_or(4);
  const int cases = args.cases.value_or(1000);
  if (max_n < 0 || cases < 0) throw InputError("lemma44 sizes must be >= 0");
  report.params = {{"max-n", std::to_string(max_n)}, {"cases", std::to_string(cases)}};
  SplitMix64 rng(case_seed(args.seed, 0, report.check));
  long long instances = 0;
  for (int n = 0; n <= max_n; ++n) {
    const auto sigmas = enumerate_permutations(n, args.brace.limits);
    for (int c = 0; c < cases; ++c) {
      std::vector<int> v, w;
      for (int i = 0; i < n; ++i) v.push_back(rng.uniform(-10, 10));
      for (int i = 0; i < n; ++i) w.push_back(rng.uniform(-10, 10));
      for (const auto& sigma : sigmas) {
        auto single = check_congruence_instance(sigma, v, w);
        ++instances;
        if (!single.passed) {
          report.passed = false;
          report.counterexample = std::move(single.counterexample);
          report.params.emplace_back("instances", std::to_string(instances));
          return;
        }
      }
    }
  }
  report.params.emplace_back("instances", std::to_string(instances));
}

}  // namespace

CheckReport check_factorization_instance(const std::vector<int>& blocks,
                                         const std::vector<int>& degrees) {
  CheckReport report;
  report.check = "lemma42";
  report.params = {{"blocks", join(blocks)}, {"degrees", join(degrees)}};
  const UnshuffleSpec spec{blocks};
  for (const auto rule : {SignRule::kAntisymmetricKoszul, SignRule::kKoszul}) {
    if (check_unshuffle_factorization(spec, degrees, rule)) continue;
    report.passed = false;
    ordered_json doc;
    doc["check"] = report.check;
    doc["blocks"] = blocks;
    doc["degrees"] = degrees;
    doc["sign"] = rule == SignRule::kKoszul ? "koszul" : "antisymmetric-koszul";
    report.counterexample.push_back(doc.dump());
    break;
  }
  return report;
}

CheckReport check_relocation_instance(const Permutation& pi, const Permutation& sigma,
                                      const std::vector<int>& blocks,
                                      const std::vector<int>& slots,
                                      const std::vector<int>& degrees) {
  CheckReport report;
  report.check = "lemma43";
  report.params = {{"pi", join(one_based(pi))},       {"sigma", join(one_based(sigma))},
                   {"blocks", join(blocks)},          {"slots", join(slots)},
                   {"degrees", join(degrees)}};
  const InsertionPattern pattern{slots};
  report.passed = check_block_relocation(pi, sigma, blocks, pattern, degrees);
  if (report.passed) return report;
  const auto result = relocate_blocks(pi, sigma, blocks, pattern, degrees);
  const int direct_koszul =
      koszul_sign(result.permutation, degrees) * koszul_sign(pi, degrees) < 0 ? 1 : 0;
  const int direct_antisym =
      antisym_koszul_sign(result.permutation, degrees) * antisym_koszul_sign(pi, degrees) < 0 ? 1 : 0;
  ordered_json doc;
  doc["check"] = report.check;
  doc["pi"] = one_based(pi);
  doc["sigma"] = one_based(sigma);
  doc["blocks"] = blocks;
  doc["slots"] = slots;
  doc["degrees"] = degrees;
  doc["lhs"] = ordered_json{{"permutation", one_based(result.permutation)},
                            {"koszul_parity", result.koszul_parity},
                            {"antisym_parity", result.antisym_parity}};
  doc["rhs"] = ordered_json{{"koszul_parity", direct_koszul}, {"antisym_parity", direct_antisym}};
  report.counterexample.push_back(doc.dump());
  return report;
}

CheckReport check_congruence_instance(const Permutation& sigma, const std::vector<int>& v,
                                      const std::vector<int>& w) {
  CheckReport report;
  report.check = "lemma44";
  report.params = {{"sigma", join(one_based(sigma))}, {"v", join(v)}, {"w", join(w)}};
  report.passed = parity_congruences_hold(sigma, v, w);
  if (!report.passed) {
    ordered_json doc;
    doc["check"] = report.check;
    doc["sigma"] = one_based(sigma);
    doc["v"] = v;
    doc["w"] = w;
    report.counterexample.push_back(doc.dump());
  }
  return report;
}

CheckReport run_check(const std::string& name, const Workspace* ws, const CheckArgs& args) {
  if (!is_check_name(name)) throw InputError("unknown check '" + name + "'");
  const auto start = std::chrono::steady_clock::now();
  CheckReport report;
  report.check = name;
  report.seed = args.seed;

  if (name == "brace-axiom") {
    run_brace_axiom(need_workspace(ws, name), args, report);
  } else if (name == "symbrace-axiom-ex33") {
    run_symmetric_axiom(need_workspace(ws, name), args, SymBraceFlavor::kAntisymmetricMaps, report);
  } else if (name == "thm1") {
    run_symmetric_axiom(need_workspace(ws, name), args, SymBraceFlavor::kSymmetrized, report);
  } else if (name == "thm2") {
    run_compatibility(need_workspace(ws, name), args, report);
  } else if (name == "lemma41") {
    run_decomposition(need_workspace(ws, name), args, report);
  } else if (name == "lemma42") {
    run_factorization_sweep(args, report);
  } else if (name == "lemma43") {
    run_relocation_sweep(args, report);
  } else if (name == "lemma44") {
    run_congruence_sweep(args, report);
  } else if (name == "lemma51") {
    run_expansion(need_workspace(ws, name), args, report);
  } else {
    run_structure(need_workspace(ws, name), args, report);
  }

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace bracealg::cli
