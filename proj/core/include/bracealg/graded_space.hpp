#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bracealg/rational.hpp"

namespace bracealg {

struct BasisElement {
  std::string name;
  int degree = 0;
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Finite-dimensional Z-graded vector space given by an ordered basis of
/// homogeneous elements.
class GradedSpace {
 public:
  /// Throws InputError on an empty basis, an empty name or a duplicate name.
  explicit GradedSpace(std::vector<BasisElement> basis);

  int dimension() const { return static_cast<int>(basis_.size()); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  int degree(int index) const { return basis_.at(static_cast<std::size_t>(index)).degree; }
  const std::string& name(int index) const { return basis_.at(static_cast<std::size_t>(index)).name; }
  std::optional<int> find(std::string_view name) const;
  /// Like find, but throws InputError naming the missing element.
  int index_of(std::string_view name) const;

  /// Degrees of the basis elements in a tuple of indices.
  std::vector<int> degrees_of(const std::vector<int>& indices) const;

  friend bool operator==(const GradedSpace& a, const GradedSpace& b) { return a.basis_ == b.basis_; }

 private:
  std::vector<BasisElement> basis_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

SpacePtr make_space(std::vector<BasisElement> basis);

/// Sparse coefficient vector indexed by basis position; never stores zeros.
class SparseVector {
 public:
  using Storage = std::map<int, Scalar>;

  SparseVector() = default;
  static SparseVector basis(int index, const Scalar& coeff = 1);

  void add(int index, const Scalar& coeff);
  void add_scaled(const SparseVector& other, const Scalar& factor);
  SparseVector scaled(const Scalar& factor) const;

  bool is_zero() const { return coeffs_.empty(); }
  Scalar coefficient(int index) const;
  const Storage& terms() const { return coeffs_; }

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  Storage coeffs_;
};

/// An element of a graded space.
class GradedVector {
 public:
  GradedVector(SpacePtr space, SparseVector coeffs = {});
  static GradedVector basis(SpacePtr space, int index, const Scalar& coeff = 1);

  const SpacePtr& space() const { return space_; }
  const SparseVector& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.is_zero(); }
  /// Degree when all nonzero components share one degree.
  std::optional<int> homogeneous_degree() const;

  friend bool operator==(const GradedVector& a, const GradedVector& b) {
    return *a.space_ == *b.space_ && a.coeffs_ == b.coeffs_;
  }

 private:
  SpacePtr space_;
  SparseVector coeffs_;
};

/// Ordered argument list for a multilinear map.
using ArgSequence = std::vector<GradedVector>;

}  // namespace bracealg
