#include "bracealg/graded_space.hpp"

#include <set>

#include "bracealg/errors.hpp"

namespace bracealg {

GradedSpace::GradedSpace(std::vector<BasisElement> basis) : basis_(std::move(basis)) {
  if (basis_.empty()) throw InputError("graded space needs at least one basis element");
  std::set<std::string_view> names;
  for (const auto& element : basis_) {
    if (element.name.empty()) throw InputError("basis element with empty name");
    if (!names.insert(element.name).second) {
      throw InputError("duplicate basis name '" + element.name + "'");
    }
  }
}

std::optional<int> GradedSpace::find(std::string_view name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].name == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

int GradedSpace::index_of(std::string_view name) const {
  if (auto index = find(name)) return *index;
  throw InputError("unknown basis element '" + std::string(name) + "'");
}

std::vector<int> GradedSpace::degrees_of(const std::vector<int>& indices) const {
  std::vector<int> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(degree(i));
  return out;
}

SpacePtr make_space(std::vector<BasisElement> basis) {
  return std::make_shared<const GradedSpace>(std::move(basis));
}

SparseVector SparseVector::basis(int index, const Scalar& coeff) {
  SparseVector v;
  v.add(index, coeff);
  return v;
}

void SparseVector::add(int index, const Scalar& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

void SparseVector::add_scaled(const SparseVector& other, const Scalar& factor) {
  if (factor == 0) return;
  for (const auto& [index, coeff] : other.coeffs_) add(index, coeff * factor);
}

SparseVector SparseVector::scaled(const Scalar& factor) const {
  SparseVector out;
  out.add_scaled(*this, factor);
  return out;
}

Scalar SparseVector::coefficient(int index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? Scalar(0) : it->second;
}

GradedVector::GradedVector(SpacePtr space, SparseVector coeffs)
    : space_(std::move(space)), coeffs_(std::move(coeffs)) {
  if (!space_) throw InputError("graded vector without a space");
  for (const auto& [index, coeff] : coeffs_.terms()) {
    if (index < 0 || index >= space_->dimension()) throw InputError("basis index out of range");
  }
}

GradedVector GradedVector::basis(SpacePtr space, int index, const Scalar& coeff) {
  return GradedVector(std::move(space), SparseVector::basis(index, coeff));
}

std::optional<int> GradedVector::homogeneous_degree() const {
  std::optional<int> degree;
  for (const auto& [index, coeff] : coeffs_.terms()) {
    const int d = space_->degree(index);
    if (degree && *degree != d) return std::nullopt;
    degree = d;
  }
  return degree;
}

}  // namespace bracealg
