#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "bracealg/graded_space.hpp"
#include "bracealg/permutation.hpp"
#include "bracealg/rational.hpp"

namespace bracealg {

/// Homogeneous multilinear map V^{(x)k} -> V of internal degree p, stored
/// sparsely as basis-index tuples mapped to output vectors.
///
/// Every stored entry satisfies deg(out) = p + sum deg(in). As an element of
/// the brace algebra the map has degree p - k + 1; only its parity enters
/// signs.
class MultiMap {
 public:
  using Key = std::vector<int>;
  using Table = std::map<Key, SparseVector>;

  /// Zero map. Throws InputError when arity < 1.
  MultiMap(SpacePtr space, int arity, int degree);

  const SpacePtr& space() const { return space_; }
  int arity() const { return arity_; }
  int degree() const { return degree_; }
  int brace_parity() const { return ((degree_ + arity_ + 1) % 2 + 2) % 2; }
  const Table& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  /// Adds coeff * e_out to the value on the basis tuple `in`. Throws
  /// InputError if the tuple has the wrong length, an index is out of range,
  /// or the entry would break homogeneity.
  void add_entry(const Key& in, int out, const Scalar& coeff);
  void add_entry(const Key& in, const SparseVector& out);

  /// Value on a basis tuple (zero vector when absent).
  SparseVector value(const Key& in) const;

  /// True when (arity, degree) match and the spaces are equal.
  bool same_signature(const MultiMap& other) const;

 private:
  SpacePtr space_;
  int arity_;
  int degree_;
  Table entries_;
};

/// Multilinear extension of the entry table. Throws InputError on arity or
/// space mismatch.
GradedVector eval(const MultiMap& f, const ArgSequence& args);

/// Throws InputError unless signatures match.
MultiMap add(const MultiMap& f, const MultiMap& g);
MultiMap scale(const Scalar& c, const MultiMap& f);
/// Exact comparison; false (not an error) on signature mismatch.
bool equals(const MultiMap& f, const MultiMap& g);

/// First basis tuple on which two same-signature maps differ.
struct MapDifference {
  MultiMap::Key input;
  SparseVector left;
  SparseVector right;
};
std::optional<MapDifference> first_difference(const MultiMap& f, const MultiMap& g);

/// Evaluates f(1^{k_0} (x) g_1 (x) 1^{k_1} (x) ... (x) g_n (x) 1^{k_n}) on args.
/// Arguments are consumed left to right; a map g of degree q applied past
/// arguments of total degree d contributes (-1)^{q d}.
GradedVector tensor_block_eval(const MultiMap& f, std::span<const MultiMap> gs,
                               const InsertionPattern& slots, const ArgSequence& args);

/// The same composite materialized as a map of arity sum(a_i) + sum(k_j),
/// degree p + sum(q_i). Built sparsely from the entry tables.
MultiMap compose_insertion(const MultiMap& f, std::span<const MultiMap> gs,
                           const InsertionPattern& slots);

/// as(f)(v_1..v_k) = sum over sigma in S_k of chi(sigma) f(v_sigma(1), ..., v_sigma(k)).
MultiMap antisymmetrize(const MultiMap& f, const EnumerationLimits& limits = {});

/// f(tau_i . args) = chi(tau_i) f(args) for every adjacent transposition.
bool is_antisymmetric(const MultiMap& f);

/// Degree of each homogeneous argument; throws InputError on a
/// non-homogeneous or zero entry.
std::vector<int> argument_degrees(const ArgSequence& args);

}  // namespace bracealg
