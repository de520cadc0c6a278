#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <bracealg/brace.hpp>
#include <bracealg/permutation.hpp>
#include <bracealg/verdict.hpp>

#include "bracealg_cli/workspace.hpp"

namespace bracealg::cli {

/// Names accepted by `check` and `fuzz --checks`, in report order.
const std::vector<std::string>& check_names();
bool is_check_name(const std::string& name);

/// One report line plus any counterexample lines.
struct CheckReport {
  std::string check;
  bool passed = true;
  std::uint64_t seed = 0;
  std::uint64_t case_index = 0;
  std::vector<std::pair<std::string, std::string>> params;
  /// Canonical single-line JSON documents, present only on failure.
  std::vector<std::string> counterexample;
  double elapsed_ms = 0;
};

/// `PASS|FAIL <check> seed=<s> case=<i> <k=v>...`, then the counterexample
/// lines. Elapsed time is appended only when `timing` is set.
std::string format_report(const CheckReport& report, bool timing);

/// Arguments of the `check` verb. Map arguments name maps in the workspace.
struct CheckArgs {
  std::string x;
  std::string f;
  std::vector<std::string> xs;
  std::vector<std::string> ys;
  std::vector<std::string> gs;
  std::vector<std::string> maps;
  int max_arity = 3;
  std::optional<std::vector<int>> blocks;
  std::uint64_t seed = 1;
  std::optional<int> cases;
  std::optional<int> max_n;
  std::optional<int> max_r;
  BraceOptions brace;
};

/// Runs one named check. Map-based checks need a workspace; the sign and
/// permutation checks ignore it. Throws InputError for unknown names,
/// missing maps or inadmissible shapes, ResourceError when a cap is hit.
CheckReport run_check(const std::string& name, const Workspace* ws, const CheckArgs& args);

/// Single-instance forms of the permutation checks, used by fuzzing.
CheckReport check_factorization_instance(const std::vector<int>& blocks,
                                         const std::vector<int>& degrees);
CheckReport check_relocation_instance(const Permutation& pi, const Permutation& sigma,
                                      const std::vector<int>& blocks,
                                      const std::vector<int>& slots,
                                      const std::vector<int>& degrees);
CheckReport check_congruence_instance(const Permutation& sigma, const std::vector<int>& v,
                                      const std::vector<int>& w);

/// Canonical single-line JSON of a workspace, for counterexamples.
std::string workspace_line(const Workspace& ws);

}  // namespace bracealg::cli
