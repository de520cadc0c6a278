#pragma once

#include <span>
#include <vector>

#include "bracealg/arrangement.hpp"
#include "bracealg/multimap.hpp"
#include "bracealg/permutation.hpp"
#include "bracealg/verdict.hpp"

namespace bracealg {

/// Where the first sum of the insertion sign starts. kFromSlotZero counts
/// the leading free slot k_0 (with a_0 = 0); kFromFirstBlock drops it and
/// is kept only to show the brace axiom detects the difference.
enum class InsertionSignConvention { kFromSlotZero, kFromFirstBlock };

struct BraceOptions {
  InsertionSignConvention convention = InsertionSignConvention::kFromSlotZero;
  EnumerationLimits limits;
};

/// Shape data of one insertion term of f{g_1, ..., g_n}.
struct BraceContext {
  int outer_arity = 0;           // N
  std::vector<int> arities;      // a_1..a_n
  std::vector<int> degrees;      // q_1..q_n
  InsertionPattern slots;        // k_0..k_n, summing to N - n

  static BraceContext of(const MultiMap& f, std::span<const MultiMap> gs,
                         const InsertionPattern& slots);
};

/// Parity of
///   sum_{j<i} (a_i - 1)(k_j + a_j) + sum_i (N - i) q_i + sum_{j<i} q_i a_j.
int insertion_sign_parity(const BraceContext& ctx,
                          InsertionSignConvention convention = InsertionSignConvention::kFromSlotZero);

/// f{g_1, ..., g_n}: the signed sum over every placement of the g's among the
/// N - n identity slots. Arity sum(a_i) + N - n, degree p + sum(q_i).
/// f{} = f. Throws InputError when n > N.
MultiMap brace(const MultiMap& f, std::span<const MultiMap> gs, const BraceOptions& options = {});

inline MultiMap brace(const MultiMap& f, const std::vector<MultiMap>& gs,
                      const BraceOptions& options = {}) {
  return brace(f, std::span<const MultiMap>(gs), options);
}

/// Compares x{x_1..x_n}{y_1..y_r} with the sum over nestings
///   x{y_1..y_{i_1}, x_1{y_{i_1+1}..y_{j_1}}, ..., x_n{...}, ..., y_r}
/// signed by the Koszul sign of moving each x_l past y_1..y_{i_l} (brace
/// parities). Nestings that overfill a map contribute zero. Throws
/// InputError if n exceeds x's arity or r exceeds that of x{x_1..x_n}.
Verdict check_brace_axiom(const MultiMap& x, const std::vector<MultiMap>& xs,
                          const std::vector<MultiMap>& ys, const BraceOptions& options = {});

/// Applies to each arrangement of (y_1..y_n, z_1..z_m) the expansion
///   sum_{sigma in S_n} eps(sigma) sum_{k} (-1)^eta f{z.., y_sigma(1), z.., ..., y_sigma(n), z..}
/// with Koszul signs over the items' brace parities. Composed with the
/// eps-signed permutations of the z's it reproduces the full eps-signed
/// symmetrization over S_{n+m}.
SignedArrangements interleaved_brace_terms(const SignedArrangements& terms, int head, int tail,
                                           std::span<const int> parities,
                                           const EnumerationLimits& limits = {});

/// sum_terms sign * f{items reordered}.
MultiMap brace_over_arrangements(const MultiMap& f, const SignedArrangements& terms,
                                 std::span<const MultiMap> items, const BraceOptions& options = {});

/// Brace parities of a list of maps.
std::vector<int> brace_parities(std::span<const MultiMap> maps);

}  // namespace bracealg
