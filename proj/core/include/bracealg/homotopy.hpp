#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bracealg/brace.hpp"
#include "bracealg/multimap.hpp"
#include "bracealg/verdict.hpp"

namespace bracealg {

enum class StructureFlavor { kAInfinity, kLInfinity };

/// A family of maps m_k of arity k and internal degree k - 2, read as the
/// formal sum m = m_1 + m_2 + .... Missing arities are zero.
class StructureFamily {
 public:
  /// Throws InputError on repeated arities, a component of the wrong degree,
  /// mixed spaces, or (for kLInfinity) a component that is not
  /// antisymmetric.
  StructureFamily(SpacePtr space, std::vector<MultiMap> components, StructureFlavor flavor);

  const SpacePtr& space() const { return space_; }
  StructureFlavor flavor() const { return flavor_; }
  const std::map<int, MultiMap>& components() const { return components_; }
  /// Component of the given arity, or nullptr.
  const MultiMap* component(int arity) const;

 private:
  SpacePtr space_;
  std::map<int, MultiMap> components_;
  StructureFlavor flavor_;
};

/// Outcome of a structure check; `arity` names the output arity that failed.
struct StructureVerdict {
  Verdict verdict;
  int verified_up_to = 0;
  std::optional<int> failing_arity;

  explicit operator bool() const { return verdict.passed; }
};

/// sum over i + j - 1 = r of m_i{m_j} is zero for every r <= max_arity.
StructureVerdict check_a_infinity(const StructureFamily& family, int max_arity,
                                  const BraceOptions& options = {});

/// sum over i + j - 1 = r of l_i<l_j> is zero for every r <= max_arity, using
/// the symmetric brace on antisymmetric maps.
StructureVerdict check_l_infinity(const StructureFamily& family, int max_arity,
                                  const EnumerationLimits& limits = {});

/// Componentwise antisymmetrization, producing an kLInfinity family.
StructureFamily antisymmetrize_structure(const StructureFamily& family,
                                         const EnumerationLimits& limits = {});

/// Requires check_a_infinity to pass (InputError otherwise), then checks
/// the antisymmetrized family with check_l_infinity. A failure there is a
/// verification failure, not an input error.
StructureVerdict check_antisymmetrized_structure(const StructureFamily& family, int max_arity,
                                                 const BraceOptions& options = {});

}  // namespace bracealg
