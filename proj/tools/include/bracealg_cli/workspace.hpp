#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <bracealg/multimap.hpp>
#include <json.hpp>

namespace bracealg::cli {

/// A graded space plus named maps on it, loaded from or written to JSON:
///
///   {"space": {"basis": [{"name": "e", "degree": 0}, ...]},
///    "maps": [{"name": "f", "arity": 2, "degree": 0,
///              "entries": [{"in": ["e", "e"],
///                           "out": [{"basis": "e", "coeff": "1/2"}]}]}]}
class Workspace {
 public:
  explicit Workspace(SpacePtr space) : space_(std::move(space)) {}

  const SpacePtr& space() const { return space_; }
  const std::vector<std::pair<std::string, MultiMap>>& maps() const { return maps_; }

  /// Throws InputError on a duplicate name or a map on another space.
  void add_map(std::string name, MultiMap map);
  /// Throws InputError naming the missing map.
  const MultiMap& map(std::string_view name) const;
  bool has_map(std::string_view name) const;

 private:
  SpacePtr space_;
  std::vector<std::pair<std::string, MultiMap>> maps_;
};

/// Parses and validates workspace JSON text. Throws InputError.
Workspace parse_workspace_text(std::string_view text);
/// Reads a workspace file. Throws InputError on I/O, parse or validation
/// failures.
Workspace parse_workspace(const std::filesystem::path& path);

/// Canonical form: maps in stored order, entries sorted by the input basis
/// names, outputs sorted by basis name, coefficients in lowest terms,
/// two-space indentation, trailing newline.
std::string serialize_workspace(const Workspace& ws);

/// Canonical JSON tree behind serialize_workspace.
nlohmann::ordered_json workspace_json(const Workspace& ws);

/// A vector as a canonical list of {"basis", "coeff"} terms.
nlohmann::ordered_json vector_json(const GradedSpace& space, const SparseVector& v);

}  // namespace bracealg::cli
