#pragma once

#include <span>
#include <vector>

#include "bracealg/multimap.hpp"
#include "bracealg/permutation.hpp"
#include "bracealg/verdict.hpp"

namespace bracealg {

/// One summand of a formal signed sum of rearrangements: `order[i]` is the
/// original position of the item now sitting at position i.
struct ArrangementTerm {
  int sign = 1;
  std::vector<int> order;
  friend bool operator==(const ArrangementTerm&, const ArrangementTerm&) = default;
  friend auto operator<=>(const ArrangementTerm&, const ArrangementTerm&) = default;
};

using SignedArrangements = std::vector<ArrangementTerm>;

/// The trivial sum: the identity arrangement of `size` items with sign +1.
SignedArrangements identity_arrangement(int size);

/// Splits each arrangement as (y_1..y_n, z_1..z_m) and sums over all
/// permutations pi of the z's, each weighted by the permutation sign under
/// `rule` for the current z degrees. `degrees` are those of the original
/// items.
SignedArrangements permute_tail(const SignedArrangements& terms, int head, int tail,
                                std::span<const int> degrees, SignRule rule,
                                const EnumerationLimits& limits = {});

/// As permute_tail, for the first `head` items.
SignedArrangements permute_head(const SignedArrangements& terms, int head, int tail,
                                std::span<const int> degrees, SignRule rule,
                                const EnumerationLimits& limits = {});

/// Sums over slot sizes k_0 + ... + k_n = m the interleavings
///   (z_1..z_{k_0}, y_1, z_{k_0+1}, ..., y_n, ..., z_m)
/// with sign (-1)^eta, eta = sum_i |y_i| (|z_1| + ... + |z_{k_0+...+k_{i-1}}|).
/// Under SignRule::kAntisymmetricKoszul the transposition count
/// sum_{i=0}^{n} (n - i) k_i is added to eta.
SignedArrangements interleave(const SignedArrangements& terms, int head, int tail,
                              std::span<const int> degrees, SignRule rule);

/// Materializes each arrangement over concrete items.
template <typename T>
std::vector<std::pair<int, std::vector<T>>> materialize(const SignedArrangements& terms,
                                                        std::span<const T> items) {
  std::vector<std::pair<int, std::vector<T>>> out;
  out.reserve(terms.size());
  for (const auto& term : terms) {
    std::vector<T> seq;
    seq.reserve(term.order.size());
    for (int i : term.order) seq.push_back(items[static_cast<std::size_t>(i)]);
    out.emplace_back(term.sign, std::move(seq));
  }
  return out;
}

/// Sums f over signed rearrangements of the arguments:
///   sum_terms sign * f(args reordered).
GradedVector eval_arrangements(const MultiMap& f, const SignedArrangements& terms,
                               const ArgSequence& args);

/// For every split n + m = arity and every basis tuple, evaluates f on
/// interleave(permute_head(permute_tail(args))) with antisymmetric Koszul
/// signs and compares with as(f) on the same tuple.
Verdict check_antisymmetrization_decomposition(const MultiMap& f,
                                               const EnumerationLimits& limits = {});

}  // namespace bracealg
