#include "bracealg_cli/fuzz.hpp"

#include <algorithm>
#include <chrono>

#include <bracealg/errors.hpp>
#include <bracealg/multimap.hpp>

#include "bracealg_cli/generate.hpp"

namespace bracealg::cli {

namespace {

struct Draw {
  SplitMix64& rng;
  const FuzzCaps& caps;
  SpacePtr space;

  int arity() { return rng.uniform(1, caps.max_arity); }
  MultiMap map(int k, bool antisymmetric) {
    auto m = random_map(rng, space, k);
    return antisymmetric ? antisymmetrize(m) : m;
  }
};

SpacePtr draw_space(SplitMix64& rng, const FuzzCaps& caps) {
  return random_space(rng, rng.uniform(caps.min_dim, caps.max_dim), caps.degree_lo, caps.degree_hi);
}

std::vector<std::string> add_named(Workspace& ws, const std::string& prefix,
                                   std::vector<MultiMap> maps) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    names.push_back(prefix + std::to_string(i + 1));
    ws.add_map(names.back(), std::move(maps[i]));
  }
  return names;
}

// Shapes for two nested braces: outer arity N, n first-brace arities, r
// second-brace arities, redrawn until the result arity fits.
struct NestedShape {
  int outer = 1;
  std::vector<int> first;
  std::vector<int> second;
};

NestedShape draw_nested_shape(SplitMix64& rng, const FuzzCaps& caps) {
  for (;;) {
    NestedShape s;
    s.outer = rng.uniform(1, caps.max_arity);
    const int n = rng.uniform(0, std::min(caps.max_n, s.outer));
    int arity = s.outer - n;
    for (int i = 0; i < n; ++i) {
      s.first.push_back(rng.uniform(1, caps.max_arity));
      arity += s.first.back();
    }
    const int r = rng.uniform(0, std::min(caps.max_r, arity));
    for (int i = 0; i < r; ++i) {
      s.second.push_back(rng.uniform(1, caps.max_arity));
      arity += s.second.back() - 1;
    }
    if (arity <= caps.max_arity_out) return s;
  }
}

CheckReport nested_case(const std::string& check, SplitMix64& rng, const FuzzCaps& caps,
                        const BraceOptions& brace) {
  const auto space = draw_space(rng, caps);
  Draw draw{rng, caps, space};
  const auto shape = draw_nested_shape(rng, caps);
  const bool antisymmetric = check == "symbrace-axiom-ex33";
  Workspace ws(space);
  ws.add_map("f", draw.map(shape.outer, antisymmetric));
  std::vector<MultiMap> first, second;
  for (int a : shape.first) first.push_back(draw.map(a, antisymmetric));
  for (int a : shape.second) second.push_back(draw.map(a, antisymmetric));
  CheckArgs args;
  args.brace = brace;
  if (check == "brace-axiom") {
    args.x = "f";
    args.xs = add_named(ws, "x", std::move(first));
    args.ys = add_named(ws, "y", std::move(second));
  } else {
    args.f = "f";
    args.gs = add_named(ws, "g", std::move(first));
    args.xs = add_named(ws, "x", std::move(second));
  }
  auto report = run_check(check, &ws, args);
  report.params.insert(report.params.begin(), {"dim", std::to_string(space->dimension())});
  return report;
}

CheckReport single_brace_case(const std::string& check, SplitMix64& rng, const FuzzCaps& caps,
                              const BraceOptions& brace) {
  const auto space = draw_space(rng, caps);
  Draw draw{rng, caps, space};
  Workspace ws(space);
  CheckArgs args;
  args.brace = brace;
  args.f = "f";
  if (check == "lemma41") {
    ws.add_map("f", draw.map(draw.arity(), false));
  } else {
    // thm2 inserts up to max_n maps; lemma51 up to max_n + max_r.
    const int cap = check == "thm2" ? caps.max_n : caps.max_n + caps.max_r;
    for (;;) {
      const int outer = draw.arity();
      const int count = rng.uniform(0, std::min(cap, outer));
      std::vector<int> arities;
      int arity = outer;
      for (int i = 0; i < count; ++i) {
        arities.push_back(draw.arity());
        arity += arities.back() - 1;
      }
      if (arity > caps.max_arity_out) continue;
      ws.add_map("f", draw.map(outer, false));
      std::vector<MultiMap> inner;
      for (int a : arities) inner.push_back(draw.map(a, false));
      (check == "thm2" ? args.gs : args.xs) = add_named(ws, check == "thm2" ? "g" : "x", std::move(inner));
      break;
    }
  }
  auto report = run_check(check, &ws, args);
  report.params.insert(report.params.begin(), {"dim", std::to_string(space->dimension())});
  return report;
}

CheckReport structure_case(const std::string& check, SplitMix64& rng, const FuzzCaps& caps,
                           const BraceOptions& brace) {
  auto mu = random_associative_product(rng, caps.max_dim, caps.degree_lo, caps.degree_hi);
  const bool perturbed = check != "corollary" && rng.coin();
  if (perturbed) {
    const int extra = rng.uniform(1, 2);
    for (int i = 0; i < extra; ++i) perturb(rng, mu);
  }
  Workspace ws(mu.space());
  CheckArgs args;
  args.brace = brace;
  args.max_arity = 3;
  bool expected = true;
  std::string oracle;
  if (check == "linfty") {
    auto bracket = antisymmetrize(mu);
    expected = satisfies_jacobi(bracket);
    oracle = expected ? "jacobi" : "not-jacobi";
    ws.add_map("l2", std::move(bracket));
    args.maps = {"l2"};
  } else {
    expected = is_associative(mu);
    oracle = expected ? "associative" : "not-associative";
    ws.add_map("mu2", std::move(mu));
    args.maps = {"mu2"};
  }
  CheckReport report;
  if (check == "corollary" && !expected) {
    // Cannot happen for an unperturbed path algebra; report it as a failure.
    report.check = check;
    report.passed = false;
    report.counterexample.push_back(workspace_line(ws));
  } else {
    report = run_check(check, &ws, args);
    const bool verdict = report.passed;
    report.params.emplace_back("structure", verdict ? "holds" : "fails");
    report.passed = verdict == expected;
    if (!report.passed && verdict) report.counterexample.push_back(workspace_line(ws));
    if (report.passed) report.counterexample.clear();
  }
  report.params.insert(report.params.begin(),
                       {{"dim", std::to_string(ws.space()->dimension())},
                        {"perturbed", perturbed ? "1" : "0"},
                        {"oracle", oracle}});
  return report;
}

CheckReport permutation_case(const std::string& check, SplitMix64& rng) {
  if (check == "lemma42") {
    const int total = rng.uniform(0, 5);
    const auto blocks = random_composition(rng, total, rng.uniform(1, 3));
    std::vector<int> degrees;
    for (int i = 0; i < total; ++i) degrees.push_back(rng.uniform(-2, 2));
    return check_factorization_instance(blocks, degrees);
  }
  if (check == "lemma43") {
    const int r = rng.uniform(0, 5);
    const int n = rng.uniform(0, 3);
    const auto pi = random_permutation(rng, r);
    const auto sigma = random_permutation(rng, n);
    const auto shape = random_composition(rng, r, 2 * n + 1);
    std::vector<int> blocks, slots, degrees;
    for (int i = 0; i < 2 * n + 1; ++i) (i % 2 ? blocks : slots).push_back(shape[i]);
    for (int i = 0; i < r; ++i) degrees.push_back(rng.uniform(-2, 2));
    return check_relocation_instance(pi, sigma, blocks, slots, degrees);
  }
  const int n = rng.uniform(0, 4);
  const auto sigma = random_permutation(rng, n);
  std::vector<int> v, w;
  for (int i = 0; i < n; ++i) v.push_back(rng.uniform(-10, 10));
  for (int i = 0; i < n; ++i) w.push_back(rng.uniform(-10, 10));
  return check_congruence_instance(sigma, v, w);
}

}  // namespace

void validate(const FuzzOptions& options) {
  const auto& c = options.caps;
  if (options.cases < 0) throw InputError("--cases must be >= 0");
  if (options.only_case && (*options.only_case < 0 || *options.only_case >= options.cases))
    throw InputError("--case must lie in [0, cases)");
  if (c.min_dim < 1 || c.max_dim < c.min_dim) throw InputError("dimension caps must satisfy 1 <= min <= max");
  if (c.max_dim > 6) throw InputError("--max-dim is capped at 6");
  if (c.max_arity < 1) throw InputError("--max-arity must be >= 1");
  if (c.max_n < 0 || c.max_r < 0) throw InputError("--max-n and --max-r must be >= 0");
  if (c.degree_lo > c.degree_hi) throw InputError("empty --degree-range");
  const int cap = std::min(options.brace.limits.max_permutation_size,
                           options.brace.limits.max_unshuffle_size);
  if (c.max_arity_out < c.max_arity) throw InputError("--max-arity-out must be >= --max-arity");
  if (c.max_arity_out > cap)
    throw InputError("--max-arity-out exceeds the enumeration cap of " + std::to_string(cap));
  if (options.checks.empty()) throw InputError("no checks selected");
  for (const auto& check : options.checks)
    if (!is_check_name(check)) throw InputError("unknown check '" + check + "'");
}

CheckReport fuzz_case(const std::string& check, std::uint64_t seed, int case_index,
                      const FuzzCaps& caps, const BraceOptions& brace) {
  const auto start = std::chrono::steady_clock::now();
  SplitMix64 rng(case_seed(seed, static_cast<std::uint64_t>(case_index), check));
  CheckReport report;
  if (check == "brace-axiom" || check == "symbrace-axiom-ex33" || check == "thm1") {
    report = nested_case(check, rng, caps, brace);
  } else if (check == "thm2" || check == "lemma41" || check == "lemma51") {
    report = single_brace_case(check, rng, caps, brace);
  } else if (check == "ainfty" || check == "linfty" || check == "corollary") {
    report = structure_case(check, rng, caps, brace);
  } else if (check == "lemma42" || check == "lemma43" || check == "lemma44") {
    report = permutation_case(check, rng);
  } else {
    throw InputError("unknown check '" + check + "'");
  }
  report.check = check;
  report.seed = seed;
  report.case_index = static_cast<std::uint64_t>(case_index);
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool run_fuzz(const FuzzOptions& options, const std::function<void(const CheckReport&)>& sink) {
  validate(options);
  bool all = true;
  const int first = options.only_case.value_or(0);
  const int last = options.only_case ? *options.only_case + 1 : options.cases;
  for (int i = first; i < last; ++i) {
    for (const auto& check : options.checks) {
      const auto report = fuzz_case(check, options.seed, i, options.caps, options.brace);
      all = all && report.passed;
      sink(report);
    }
  }
  return all;
}

}  // namespace bracealg::cli
