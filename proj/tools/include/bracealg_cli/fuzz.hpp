#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <bracealg/brace.hpp>

#include "bracealg_cli/checks.hpp"

namespace bracealg::cli {

/// Size caps for generated instances.
struct FuzzCaps {
  int min_dim = 1;
  int max_dim = 3;
  int max_arity = 3;  // arity of every generated map
  int max_n = 2;      // maps inside the first brace
  int max_r = 3;      // maps inside the second brace
  int degree_lo = -2;
  int degree_hi = 2;
  int max_arity_out = 6;  // shapes with a larger result arity are redrawn
};

struct FuzzOptions {
  std::uint64_t seed = 1;
  int cases = 100;
  /// Replays only this case index when set.
  std::optional<int> only_case;
  std::vector<std::string> checks;
  FuzzCaps caps;
  BraceOptions brace;
};

/// Throws InputError on inconsistent caps, unknown check names or caps
/// beyond the enumeration limits.
void validate(const FuzzOptions& options);

/// Builds the instance of one case and runs the check on it. For ainfty and
/// linfty the case passes when the structure check agrees with a direct
/// associativity or Jacobi computation on the same product.
CheckReport fuzz_case(const std::string& check, std::uint64_t seed, int case_index,
                      const FuzzCaps& caps, const BraceOptions& brace = {});

/// Runs cases in order (each selected check per case) and hands every
/// report to `sink` as it completes. Returns true when all passed.
bool run_fuzz(const FuzzOptions& options, const std::function<void(const CheckReport&)>& sink);

}  // namespace bracealg::cli
