#include "bracealg_cli/workspace.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include <bracealg/errors.hpp>

namespace bracealg::cli {

using nlohmann::json;
using nlohmann::ordered_json;

void Workspace::add_map(std::string name, MultiMap map) {
  if (name.empty()) throw InputError("map with empty name");
  if (has_map(name)) throw InputError("duplicate map name '" + name + "'");
  if (!(*map.space() == *space_)) throw InputError("map '" + name + "' uses a different space");
  maps_.emplace_back(std::move(name), std::move(map));
}

bool Workspace::has_map(std::string_view name) const {
  return std::any_of(maps_.begin(), maps_.end(), [&](const auto& m) { return m.first == name; });
}

const MultiMap& Workspace::map(std::string_view name) const {
  for (const auto& [n, m] : maps_) {
    if (n == name) return m;
  }
  throw InputError("unknown map '" + std::string(name) + "'");
}

namespace {

const json& field(const json& object, const char* key, const std::string& where) {
  if (!object.is_object()) throw InputError(where + ": expected an object");
  auto it = object.find(key);
  if (it == object.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

int integer_field(const json& object, const char* key, const std::string& where) {
  const json& v = field(object, key, where);
  if (!v.is_number_integer()) throw InputError(where + ": '" + key + "' must be an integer");
  return v.get<int>();
}

std::string string_field(const json& object, const char* key, const std::string& where) {
  const json& v = field(object, key, where);
  if (!v.is_string()) throw InputError(where + ": '" + key + "' must be a string");
  return v.get<std::string>();
}

std::string describe_entry(const std::string& map_name, const std::vector<std::string>& in) {
  std::string out = "map '" + map_name + "' entry [";
  for (std::size_t i = 0; i < in.size(); ++i) out += (i ? "," : "") + in[i];
  return out + "]";
}

}  // namespace

Workspace parse_workspace_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("workspace parse error: ") + e.what());
  }
  const json& basis = field(field(doc, "space", "workspace"), "basis", "space");
  if (!basis.is_array()) throw InputError("space.basis must be an array");
  std::vector<BasisElement> elements;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::string where = "basis[" + std::to_string(i) + "]";
    elements.push_back({string_field(basis[i], "name", where), integer_field(basis[i], "degree", where)});
  }
  Workspace ws(make_space(std::move(elements)));
  const GradedSpace& space = *ws.space();

  auto maps_it = doc.find("maps");
  if (maps_it == doc.end()) return ws;
  if (!maps_it->is_array()) throw InputError("maps must be an array");
  for (std::size_t m = 0; m < maps_it->size(); ++m) {
    const json& jm = (*maps_it)[m];
    const std::string name = string_field(jm, "name", "maps[" + std::to_string(m) + "]");
    const std::string where = "map '" + name + "'";
    const int arity = integer_field(jm, "arity", where);
    const int degree = integer_field(jm, "degree", where);
    if (arity < 1) throw InputError(where + ": arity must be >= 1");
    MultiMap map(ws.space(), arity, degree);
    const json& entries = field(jm, "entries", where);
    if (!entries.is_array()) throw InputError(where + ": entries must be an array");
    for (const json& je : entries) {
      const json& in = field(je, "in", where);
      if (!in.is_array()) throw InputError(where + ": 'in' must be an array");
      std::vector<std::string> in_names;
      MultiMap::Key key;
      for (const json& b : in) {
        if (!b.is_string()) throw InputError(where + ": 'in' must list basis names");
        in_names.push_back(b.get<std::string>());
      }
      const std::string entry_where = describe_entry(name, in_names);
      if (static_cast<int>(in_names.size()) != arity) {
        throw InputError(entry_where + ": expected " + std::to_string(arity) + " inputs");
      }
      for (const auto& b : in_names) key.push_back(space.index_of(b));
      const json& out = field(je, "out", entry_where);
      if (!out.is_array()) throw InputError(entry_where + ": 'out' must be an array");
      SparseVector value;
      for (const json& jo : out) {
        const int basis_index = space.index_of(string_field(jo, "basis", entry_where));
        value.add(basis_index, parse_scalar(string_field(jo, "coeff", entry_where)));
      }
      try {
        map.add_entry(key, value);
      } catch (const InputError& e) {
        throw InputError(entry_where + ": " + e.what());
      }
    }
    ws.add_map(name, std::move(map));
  }
  return ws;
}

Workspace parse_workspace(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open workspace '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_workspace_text(buffer.str());
}

ordered_json vector_json(const GradedSpace& space, const SparseVector& v) {
  std::vector<std::pair<std::string, Scalar>> terms;
  for (const auto& [index, coeff] : v.terms()) terms.emplace_back(space.name(index), coeff);
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  ordered_json out = ordered_json::array();
  for (const auto& [name, coeff] : terms) {
    out.push_back(ordered_json{{"basis", name}, {"coeff", format_scalar(coeff)}});
  }
  return out;
}

ordered_json workspace_json(const Workspace& ws) {
  const GradedSpace& space = *ws.space();
  ordered_json doc;
  ordered_json basis = ordered_json::array();
  for (const auto& b : space.basis()) basis.push_back(ordered_json{{"name", b.name}, {"degree", b.degree}});
  doc["space"] = ordered_json{{"basis", basis}};
  ordered_json maps = ordered_json::array();
  for (const auto& [name, map] : ws.maps()) {
    std::vector<std::pair<std::vector<std::string>, const SparseVector*>> rows;
    for (const auto& [key, value] : map.entries()) {
      std::vector<std::string> names;
      for (int i : key) names.push_back(space.name(i));
      rows.emplace_back(std::move(names), &value);
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    ordered_json entries = ordered_json::array();
    for (const auto& [names, value] : rows) {
      entries.push_back(ordered_json{{"in", names}, {"out", vector_json(space, *value)}});
    }
    maps.push_back(ordered_json{
        {"name", name}, {"arity", map.arity()}, {"degree", map.degree()}, {"entries", entries}});
  }
  doc["maps"] = maps;
  return doc;
}

std::string serialize_workspace(const Workspace& ws) { return workspace_json(ws).dump(2) + "\n"; }

}  // namespace bracealg::cli
