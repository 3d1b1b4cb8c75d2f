#pragma once

#include <map>
#include <string>
#include <string_view>

#include "arithcs/cs_theory.hpp"
#include "json.hpp"

namespace arithcs {

inline constexpr int kFormatVersion = 1;

/// Named groups, modules, homs, cochains, places and global data, stored as
/// JSON. References between objects are by name. Element i of a group is
/// row/column i of its table; cochain values are listed lexicographically in
/// (g1, ..., gi) with g1 most significant, module coordinates innermost.
///
///   {"format_version": 1,
///    "groups":   {"G": {"order": 2, "table": [[0,1],[1,0]]}},
///    "modules":  {"M": {"group": "G", "modulus": 4, "orders": [2,4], "action": [[1,0,0,1], ...]}},
///    "homs":     {"f": {"dom": "G", "cod": "H", "map": [...]}},
///    "cochains": {"c": {"group": "G", "degree": 3, "modulus": 2, "values": [...],
///                       "module": "M" (optional), "cocycle": true (optional)}},
///    "places":   {"v": {"group": "Gv", "embedding": "i_v", "inertia": [...],
///                       "generator": "gen_v", "normalization": 1}},
///    "data":     {"D": {"modulus": 2, "global_group": "G", "gauge_group": "A",
///                       "places": ["v", ...], "cocycle": "c"}}}
///
/// Cochains without a "module" have trivial Z/modulus coefficients; with
/// "cocycle": true the cocycle condition is checked on load.
class Document {
 public:
  Document() = default;

  /// Throws ParseError (syntax or shape, with line/column when known) or a
  /// validation error for semantic problems.
  static Document parse(std::string_view text);
  static Document load(const std::string& path);
  nlohmann::json to_json() const;
  /// Canonical text: sorted keys, two-space indent, trailing newline.
  std::string serialize() const;

  /// Each add_* interns the objects it references (reusing an existing name
  /// for an equal object) and returns the name actually used.
  std::string add_group(const std::string& name, const GroupPtr& g);
  std::string add_module(const std::string& name, const ModulePtr& m);
  std::string add_hom(const std::string& name, const GroupHom& f);
  std::string add_cochain(const std::string& name, const Cochain& c, bool mark_cocycle = false);
  std::string add_place(const std::string& name, const PlaceDatum& p);
  std::string add_datum(const std::string& name, const GlobalDatum& d);

  /// Lookups; an empty name selects the only object of that kind.
  GroupPtr group(std::string_view name = {}) const;
  ModulePtr module(std::string_view name = {}) const;
  GroupHom hom(std::string_view name = {}) const;
  Cochain cochain(std::string_view name = {}) const;
  PlaceDatum place(std::string_view name = {}) const;
  GlobalDatum datum(std::string_view name = {}) const;

  const std::map<std::string, GroupPtr>& groups() const { return groups_; }
  const std::map<std::string, ModulePtr>& modules() const { return modules_; }
  const std::map<std::string, GroupHom>& homs() const { return homs_; }
  const std::map<std::string, Cochain>& cochains() const { return cochains_; }
  const std::map<std::string, PlaceDatum>& places() const { return places_; }
  const std::map<std::string, GlobalDatum>& data() const { return data_; }

  bool operator==(const Document& other) const { return serialize() == other.serialize(); }

 private:
  std::string group_name(const GroupPtr& g, const std::string& hint);
  std::string module_name(const ModulePtr& m, const std::string& hint);

  std::map<std::string, GroupPtr> groups_;
  std::map<std::string, ModulePtr> modules_;
  std::map<std::string, GroupHom> homs_;
  std::map<std::string, Cochain> cochains_;
  std::map<std::string, bool> cocycle_flags_;
  std::map<std::string, PlaceDatum> places_;
  std::map<std::string, GlobalDatum> data_;
  // "section/name" -> names of the objects it references, in field order.
  std::map<std::string, std::vector<std::string>> refs_;
};

/// Splits "FILE#NAME" into the path and the (possibly empty) object name.
std::pair<std::string, std::string> split_reference(const std::string& ref);

}  // namespace arithcs
