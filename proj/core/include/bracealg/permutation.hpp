#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bracealg {

/// Caps on factorial-size enumerations.
struct EnumerationLimits {
  int max_permutation_size = 8;
  int max_unshuffle_size = 8;
};

/// A permutation of {1..n} in one-line notation.
///
/// Acting on a sequence, sigma sends (x_1, ..., x_n) to
/// (x_sigma(1), ..., x_sigma(n)). Composition is (sigma * tau)(i) =
/// sigma(tau(i)), so acting by sigma * tau equals acting by sigma and then
/// by tau.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n);
  /// From one-line images using the 1-based convention; throws InputError
  /// if the images do not form a bijection of {1..n}.
  static Permutation one_line(std::vector<int> images_one_based);
  static Permutation one_line(std::initializer_list<int> images_one_based) {
    return one_line(std::vector<int>(images_one_based));
  }
  /// From 0-based images.
  static Permutation from_zero_based(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  /// sigma(i) for 1-based i, returned 1-based.
  int image(int i) const { return images_[i - 1] + 1; }
  /// 0-based image of a 0-based position.
  int operator[](std::size_t i) const { return images_[i]; }
  const std::vector<int>& zero_based() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  /// Number of pairs i < j with sigma(i) > sigma(j).
  int inversions() const;
  /// sgn(sigma) as +1 / -1.
  int sign() const { return inversions() % 2 == 0 ? 1 : -1; }

  /// Returns (x_sigma(1), ..., x_sigma(n)).
  template <typename T>
  std::vector<T> apply(std::span<const T> xs) const;
  template <typename T>
  std::vector<T> apply(const std::vector<T>& xs) const {
    return apply(std::span<const T>(xs));
  }

  std::string to_string() const;

  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

template <typename T>
std::vector<T> Permutation::apply(std::span<const T> xs) const {
  std::vector<T> out;
  out.reserve(images_.size());
  for (int image : images_) out.push_back(xs[static_cast<std::size_t>(image)]);
  return out;
}

/// Block sizes (a_1 | ... | a_m) of an unshuffle. Blocks may be empty.
struct UnshuffleSpec {
  std::vector<int> blocks;
  int total() const;
};

/// Identity-slot sizes (k_0, ..., k_n) around n inserted maps.
struct InsertionPattern {
  std::vector<int> slots;
  int total() const;
};

/// Koszul sign of rearranging (x_1..x_n) into (x_sigma(1)..x_sigma(n)),
/// where degrees[i] is the degree of x_{i+1}. Computed by bubble-sorting
/// the arrangement and charging (-1)^{|x||y|} per adjacent swap.
int koszul_sign(const Permutation& sigma, std::span<const int> degrees);

/// chi(sigma) = sgn(sigma) * koszul_sign(sigma).
int antisym_koszul_sign(const Permutation& sigma, std::span<const int> degrees);

/// Which sign a signed permutation sum carries.
enum class SignRule { kKoszul, kAntisymmetricKoszul };

inline int signed_permutation_sign(SignRule rule, const Permutation& sigma,
                                   std::span<const int> degrees) {
  return rule == SignRule::kKoszul ? koszul_sign(sigma, degrees)
                                   : antisym_koszul_sign(sigma, degrees);
}

/// All n! permutations in lexicographic order of their one-line images.
std::vector<Permutation> enumerate_permutations(int n,
                                                const EnumerationLimits& limits = {});

/// All permutations increasing within each block, in lexicographic order.
std::vector<Permutation> enumerate_unshuffles(const UnshuffleSpec& spec,
                                              const EnumerationLimits& limits = {});

/// All compositions (k_0, ..., k_{parts-1}) of total into non-negative parts,
/// lexicographically.
std::vector<InsertionPattern> enumerate_insertion_patterns(int total, int parts);

/// Multinomial total! / (b_1! ... b_m!).
long long multinomial(std::span<const int> blocks);

/// Permutation that relocates the argument strings of a block insertion,
/// together with the parities relating its signs to those of the source
/// permutation.
struct BlockRelocation {
  Permutation permutation;
  int koszul_parity = 0;
  int antisym_parity = 0;
};

/// For pi in S_r, sigma in S_n, block sizes a_1..a_n and free slots k_0..k_n
/// with k_0 + a_1 + k_1 + ... + a_n + k_n = r, returns the permutation rho
/// such that x_rho(1), ..., x_rho(r) reads
///   x_pi(A+1..A+k_0), X_sigma(1), x_pi(next k_1), ..., X_sigma(n), x_pi(last k_n)
/// where A = a_1 + ... + a_n and X_i is the i-th length-a_i string of
/// x_pi(1), ..., x_pi(A).
///
/// koszul_parity is the Koszul parity of moving the strings into place
/// (eps(rho) = eps(pi) (-1)^koszul_parity); antisym_parity adds the
/// transposition count (chi(rho) = chi(pi) (-1)^antisym_parity).
BlockRelocation relocate_blocks(const Permutation& pi, const Permutation& sigma,
                                std::span<const int> blocks, const InsertionPattern& slots,
                                std::span<const int> degrees);

/// Evaluates two mod-2 congruences for integer labels v, w permuted by sigma:
///   (1) sum_{i>j} v_i w_j + sum_{i<j, s(i)>s(j)} (w_s(i) v_s(j) + v_s(i) w_s(j))
///       + sum_{i>j} v_s(i) w_s(j) == 0
///   (2) sum_{i<j, s(i)>s(j)} (v_s(i) + v_s(j))
///       == sum_i (i-1) v_i + sum_i (i-1) v_s(i)
/// Returns true iff both hold. Throws InputError on length mismatch.
bool parity_congruences_hold(const Permutation& sigma, std::span<const int> v,
                             std::span<const int> w);

/// Composes every (a_1|...|a_m)-unshuffle gamma with every tuple of
/// within-block permutations (pi_1, ..., pi_m), signing each product by
/// rule(gamma) * prod rule(pi_b), and checks the result is exactly S_N with
/// each permutation carrying its own sign under `rule`.
bool check_unshuffle_factorization(const UnshuffleSpec& spec, std::span<const int> degrees,
                                   SignRule rule, const EnumerationLimits& limits = {});

/// Rebuilds the relocated sequence string by string and compares it, and
/// both parities, with relocate_blocks.
bool check_block_relocation(const Permutation& pi, const Permutation& sigma,
                            std::span<const int> blocks, const InsertionPattern& slots,
                            std::span<const int> degrees);

}  // namespace bracealg
