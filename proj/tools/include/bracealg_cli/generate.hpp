#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <bracealg/multimap.hpp>
#include <bracealg/permutation.hpp>

namespace bracealg::cli {

/// SplitMix64 stream. Bounded draws reduce modulo the range, so a seed maps
/// to the same instances on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

/// Seed of the stream for one fuzz case of one check.
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t case_index, std::string_view check);

/// Basis e0, e1, ... with degrees uniform in [lo, hi].
SpacePtr random_space(SplitMix64& rng, int dim, int lo, int hi);

/// Homogeneous map: the degree p is drawn from the degrees that admit at
/// least one entry, then each degree-consistent entry is kept with
/// probability 1/2 and a coefficient from {-2, -1, 1, 2}.
MultiMap random_map(SplitMix64& rng, const SpacePtr& space, int arity);

/// A degree-consistent random entry added on top of `mu`, if one exists.
void perturb(SplitMix64& rng, MultiMap& mu);

/// A finite-dimensional graded associative algebra of dimension at most
/// max_dim: paths of bounded length in a random quiver with graded arrows,
/// some vertex idempotents, and each basis element rescaled by a random
/// nonzero scalar. The product has internal degree 0.
MultiMap random_associative_product(SplitMix64& rng, int max_dim, int lo, int hi);

/// Uniformly random permutation of size n (Fisher-Yates).
Permutation random_permutation(SplitMix64& rng, int n);

/// Random composition of total into parts non-negative pieces.
std::vector<int> random_composition(SplitMix64& rng, int total, int parts);

/// (ab)c = a(bc) on every basis triple.
bool is_associative(const MultiMap& mu);

/// Graded Jacobi on every basis triple for an arity-2, degree-0 bracket:
///   (-1)^{|a||c|} [a,[b,c]] + (-1)^{|b||a|} [b,[c,a]] + (-1)^{|c||b|} [c,[a,b]] = 0.
bool satisfies_jacobi(const MultiMap& bracket);

}  // namespace bracealg::cli
