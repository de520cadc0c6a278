#pragma once

#include <optional>
#include <string>

#include "bracealg/multimap.hpp"

namespace bracealg {

/// Outcome of an exact identity check. On failure `counterexample` holds the
/// first basis tuple where the two sides differ (when the sides are maps)
/// and `detail` says which comparison failed.
struct Verdict {
  bool passed = true;
  std::string detail;
  std::optional<MapDifference> counterexample;

  explicit operator bool() const { return passed; }

  static Verdict pass() { return {}; }
  static Verdict fail(std::string detail, std::optional<MapDifference> diff = std::nullopt) {
    return Verdict{false, std::move(detail), std::move(diff)};
  }
};

/// Exact comparison of two maps that should agree.
Verdict compare_maps(const MultiMap& lhs, const MultiMap& rhs, const std::string& what);

}  // namespace bracealg
