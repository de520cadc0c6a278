#include "bracealg/homotopy.hpp"

#include "bracealg/errors.hpp"
#include "bracealg/symbrace.hpp"

namespace bracealg {

StructureFamily::StructureFamily(SpacePtr space, std::vector<MultiMap> components,
                                 StructureFlavor flavor)
    : space_(std::move(space)), flavor_(flavor) {
  if (!space_) throw InputError("structure family without a space");
  for (auto& m : components) {
    if (!(*m.space() == *space_)) throw InputError("structure component on a different space");
    if (m.degree() != m.arity() - 2) {
      throw InputError("component of arity " + std::to_string(m.arity()) + " must have degree " +
                       std::to_string(m.arity() - 2) + ", has " + std::to_string(m.degree()));
    }
    if (flavor_ == StructureFlavor::kLInfinity && !is_antisymmetric(m)) {
      throw InputError("L-infinity component of arity " + std::to_string(m.arity()) +
                       " is not antisymmetric");
    }
    const int arity = m.arity();
    if (!components_.emplace(arity, std::move(m)).second) {
      throw InputError("two components of arity " + std::to_string(arity));
    }
  }
}

const MultiMap* StructureFamily::component(int arity) const {
  auto it = components_.find(arity);
  return it == components_.end() ? nullptr : &it->second;
}

namespace {

template <typename Compose>
StructureVerdict check_square_zero(const StructureFamily& family, int max_arity,
                                   const char* label, Compose compose) {
  StructureVerdict result;
  for (int r = 1; r <= max_arity; ++r) {
    MultiMap total(family.space(), r, r - 3);
    for (int i = 1; i <= r; ++i) {
      const int j = r + 1 - i;
      const MultiMap* outer = family.component(i);
      const MultiMap* inner = family.component(j);
      if (!outer || !inner) continue;
      total = add(total, compose(*outer, *inner));
    }
    MultiMap zero(family.space(), r, r - 3);
    auto verdict = compare_maps(total, zero,
                                std::string(label) + " fails in output arity " + std::to_string(r));
    if (!verdict) {
      result.verdict = std::move(verdict);
      result.failing_arity = r;
      return result;
    }
    result.verified_up_to = r;
  }
  return result;
}

}  // namespace

StructureVerdict check_a_infinity(const StructureFamily& family, int max_arity,
                                  const BraceOptions& options) {
  if (family.flavor() != StructureFlavor::kAInfinity) {
    throw InputError("A-infinity check needs an A-infinity family");
  }
  return check_square_zero(family, max_arity, "m{m} = 0",
                           [&](const MultiMap& outer, const MultiMap& inner) {
                             return brace(outer, std::vector<MultiMap>{inner}, options);
                           });
}

StructureVerdict check_l_infinity(const StructureFamily& family, int max_arity,
                                  const EnumerationLimits& limits) {
  if (family.flavor() != StructureFlavor::kLInfinity) {
    throw InputError("L-infinity check needs an L-infinity family");
  }
  return check_square_zero(family, max_arity, "l<l> = 0",
                           [&](const MultiMap& outer, const MultiMap& inner) {
                             return symmetric_brace(outer, std::vector<MultiMap>{inner}, limits);
                           });
}

StructureFamily antisymmetrize_structure(const StructureFamily& family,
                                         const EnumerationLimits& limits) {
  if (family.flavor() != StructureFlavor::kAInfinity) {
    throw InputError("antisymmetrize_structure needs an A-infinity family");
  }
  std::vector<MultiMap> out;
  for (const auto& [arity, m] : family.components()) out.push_back(antisymmetrize(m, limits));
  return StructureFamily(family.space(), std::move(out), StructureFlavor::kLInfinity);
}

StructureVerdict check_antisymmetrized_structure(const StructureFamily& family, int max_arity,
                                                 const BraceOptions& options) {
  auto pre = check_a_infinity(family, max_arity, options);
  if (!pre) {
    throw InputError("family is not A-infinity up to arity " + std::to_string(max_arity) + ": " +
                     pre.verdict.detail);
  }
  return check_l_infinity(antisymmetrize_structure(family, options.limits), max_arity,
                          options.limits);
}

}  // namespace bracealg
