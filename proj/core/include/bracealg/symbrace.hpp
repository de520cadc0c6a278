#pragma once

#include <span>
#include <vector>

#include "bracealg/brace.hpp"
#include "bracealg/multimap.hpp"
#include "bracealg/verdict.hpp"

namespace bracealg {

/// Shape data of f<g_1, ..., g_n> on antisymmetric maps.
struct SymBraceContext {
  int outer_arity = 0;       // N
  std::vector<int> arities;  // a_1..a_n
  std::vector<int> degrees;  // q_1..q_n

  static SymBraceContext of(const MultiMap& f, std::span<const MultiMap> gs);
};

/// Parity of
///   sum_i (N - i) q_i + sum_{j<i} q_i a_j + sum_{j<i} a_i a_j + sum_i (n - i) a_i.
int symmetric_brace_sign_parity(const SymBraceContext& ctx);

/// The symmetric brace on antisymmetric maps:
///   f<g_1..g_n>(x_1..x_r) = (-1)^delta sum_gamma chi(gamma)
///       f(g_1 (x) ... (x) g_n (x) 1^{N-n})(x_gamma(1), ..., x_gamma(r))
/// summed over (a_1 | ... | a_n | N - n)-unshuffles gamma, chi taken over
/// the argument degrees. Throws InputError if any input is not
/// antisymmetric or n > N.
MultiMap symmetric_brace(const MultiMap& f, std::span<const MultiMap> gs,
                         const EnumerationLimits& limits = {});

inline MultiMap symmetric_brace(const MultiMap& f, const std::vector<MultiMap>& gs,
                                const EnumerationLimits& limits = {}) {
  return symmetric_brace(f, std::span<const MultiMap>(gs), limits);
}

/// sum_{sigma in S_n} eps(sigma) f{g_sigma(1), ..., g_sigma(n)}, eps over
/// brace parities.
MultiMap symmetrize_brace(const MultiMap& f, std::span<const MultiMap> gs,
                          const BraceOptions& options = {});

inline MultiMap symmetrize_brace(const MultiMap& f, const std::vector<MultiMap>& gs,
                                 const BraceOptions& options = {}) {
  return symmetrize_brace(f, std::span<const MultiMap>(gs), options);
}

/// Which symmetric brace a check exercises.
enum class SymBraceFlavor {
  kAntisymmetricMaps,  // symmetric_brace on antisymmetric maps
  kSymmetrized,        // symmetrize_brace of the plain brace
};

/// Swapping adjacent g_i, g_{i+1} multiplies f<...> by (-1)^{|g_i||g_{i+1}|}.
Verdict check_graded_symmetry(const MultiMap& f, const std::vector<MultiMap>& gs,
                              SymBraceFlavor flavor, const BraceOptions& options = {});

/// Compares f<g_1..g_n><x_1..x_r> with the sum over (n+1)-block unshuffles
/// of eps * f<g_1<X_1>, ..., g_n<X_n>, X_{n+1}> where eps is the Koszul sign
/// of interleaving the x's after their g's (brace parities). Empty inner
/// blocks give g_i<> = g_i; overfull terms contribute zero.
Verdict check_symmetric_brace_axiom(const MultiMap& f, const std::vector<MultiMap>& gs,
                                    const std::vector<MultiMap>& xs, SymBraceFlavor flavor,
                                    const BraceOptions& options = {});

/// sum_sigma eps(sigma) as(f{g_sigma(1)..g_sigma(n)}) against
/// as(f)<as(g_1), ..., as(g_n)>.
Verdict check_antisymmetrization_compatibility(const MultiMap& f, const std::vector<MultiMap>& gs,
                                               const BraceOptions& options = {});

/// For every split n + m = xs.size(): the interleaved brace expansion
/// composed with eps-signed tail permutations equals the direct
/// eps-signed symmetrization f<x_1, ..., x_{n+m}>.
Verdict check_interleaved_brace_expansion(const MultiMap& f, const std::vector<MultiMap>& xs,
                                          const BraceOptions& options = {});

}  // namespace bracealg
