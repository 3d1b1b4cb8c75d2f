#include "arithcs/document.hpp"

#include <fstream>
#include <sstream>

#include "arithcs/error.hpp"

namespace arithcs {

using nlohmann::json;

namespace {

const char* const kSections[] = {"groups", "modules", "homs", "cochains", "places", "data"};

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw parse_error(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw parse_error(path + ": missing field '" + key + "'");
  return *it;
}

std::uint64_t unsigned_value(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) throw parse_error(path + ": expected a non-negative integer");
  return j.get<std::uint64_t>();
}

std::uint32_t small_value(const json& j, const std::string& path) {
  const std::uint64_t v = unsigned_value(j, path);
  if (v > 0xffffffffu) throw parse_error(path + ": integer too large");
  return static_cast<std::uint32_t>(v);
}

std::vector<std::uint32_t> unsigned_list(const json& j, const std::string& path) {
  if (!j.is_array()) throw parse_error(path + ": expected a list");
  std::vector<std::uint32_t> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(small_value(j[i], path + "/" + std::to_string(i)));
  return out;
}

std::string name_value(const json& j, const std::string& path) {
  if (!j.is_string()) throw parse_error(path + ": expected a name");
  return j.get<std::string>();
}

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, std::string_view name, const char* kind) {
  if (name.empty()) {
    if (m.size() != 1) {
      throw validation_error("UnresolvedReference", std::string("expected exactly one ") + kind + " in the document, found " +
                                                        std::to_string(m.size()));
    }
    return m.begin()->second;
  }
  auto it = m.find(std::string(name));
  if (it == m.end()) throw validation_error("UnresolvedReference", std::string("no ") + kind + " named '" + std::string(name) + "'");
  return it->second;
}

template <class Map>
std::string fresh_in(const Map& m, const std::string& hint) {
  if (!m.count(hint)) return hint;
  for (std::size_t k = 2;; ++k) {
    std::string candidate = hint + "_" + std::to_string(k);
    if (!m.count(candidate)) return candidate;
  }
}

bool is_plain_cyclic(const GModule& m) { return m.is_trivial() && m.rank() == 1 && m.module().order(0) == m.modulus(); }

std::pair<std::uint64_t, std::uint64_t> line_column(std::string_view text, std::size_t byte) {
  std::uint64_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

std::pair<std::string, std::string> split_reference(const std::string& ref) {
  const auto hash = ref.rfind('#');
  if (hash == std::string::npos) return {ref, ""};
  return {ref.substr(0, hash), ref.substr(hash + 1)};
}

std::string Document::group_name(const GroupPtr& g, const std::string& hint) {
  for (const auto& [name, h] : groups_) {
    if (same_group(g, h)) return name;
  }
  const std::string name = fresh_in(groups_, hint);
  groups_.emplace(name, g);
  return name;
}

std::string Document::module_name(const ModulePtr& m, const std::string& hint) {
  for (const auto& [name, other] : modules_) {
    if (same_module(m, other)) return name;
  }
  const std::string g = group_name(m->group(), hint + "_group");
  const std::string name = fresh_in(modules_, hint);
  modules_.emplace(name, m);
  refs_["modules/" + name] = {g};
  return name;
}

std::string Document::add_group(const std::string& name, const GroupPtr& g) {
  auto it = groups_.find(name);
  if (it != groups_.end() && same_group(it->second, g)) return name;
  for (const auto& [existing, h] : groups_) {
    if (same_group(g, h)) return existing;
  }
  const std::string used = fresh_in(groups_, name);
  groups_.emplace(used, g);
  return used;
}

std::string Document::add_module(const std::string& name, const ModulePtr& m) { return module_name(m, name); }

std::string Document::add_hom(const std::string& name, const GroupHom& f) {
  for (const auto& [existing, h] : homs_) {
    if (h == f) return existing;
  }
  std::vector<std::string> r = {group_name(f.dom(), name + "_dom"), group_name(f.cod(), name + "_cod")};
  const std::string used = fresh_in(homs_, name);
  homs_.emplace(used, f);
  refs_["homs/" + used] = std::move(r);
  return used;
}

std::string Document::add_cochain(const std::string& name, const Cochain& c, bool mark_cocycle) {
  for (const auto& [existing, x] : cochains_) {
    if (x == c && cocycle_flags_.at(existing) == mark_cocycle) return existing;
  }
  std::vector<std::string> r = {group_name(c.group(), name + "_group")};
  if (!is_plain_cyclic(*c.coeffs())) r.push_back(module_name(c.coeffs(), name + "_module"));
  const std::string used = fresh_in(cochains_, name);
  cochains_.emplace(used, c);
  cocycle_flags_[used] = mark_cocycle;
  refs_["cochains/" + used] = std::move(r);
  return used;
}

std::string Document::add_place(const std::string& name, const PlaceDatum& p) {
  const std::string used = fresh_in(places_, name);
  PlaceDatum copy = p;
  copy.name = used;
  refs_["places/" + used] = {group_name(p.local_group(), used + "_group"), add_hom(used + "_embedding", p.embedding),
                             add_cochain(used + "_generator", p.h2_generator, true)};
  places_.emplace(used, std::move(copy));
  return used;
}

std::string Document::add_datum(const std::string& name, const GlobalDatum& d) {
  const std::string used = fresh_in(data_, name);
  refs_["data/" + used] = {group_name(d.global_group, used + "_global"), group_name(d.gauge_group, used + "_gauge"),
                           add_cochain(used + "_cocycle", d.cocycle, true)};
  GlobalDatum copy = d;
  for (auto& p : copy.places) p.name = add_place(p.name, p);
  data_.emplace(used, std::move(copy));
  return used;
}

GroupPtr Document::group(std::string_view name) const { return lookup(groups_, name, "group"); }
ModulePtr Document::module(std::string_view name) const { return lookup(modules_, name, "module"); }
GroupHom Document::hom(std::string_view name) const { return lookup(homs_, name, "hom"); }
Cochain Document::cochain(std::string_view name) const { return lookup(cochains_, name, "cochain"); }
PlaceDatum Document::place(std::string_view name) const { return lookup(places_, name, "place"); }
GlobalDatum Document::datum(std::string_view name) const { return lookup(data_, name, "datum"); }

json Document::to_json() const {
  auto refs = [&](const std::string& key) -> const std::vector<std::string>& { return refs_.at(key); };
  json out = json::object();
  out["format_version"] = kFormatVersion;
  for (const char* s : kSections) out[s] = json::object();

  for (const auto& [name, g] : groups_) {
    out["groups"][name] = {{"order", g->order()}, {"table", g->table()}};
  }
  for (const auto& [name, m] : modules_) {
    out["modules"][name] = {{"group", refs("modules/" + name)[0]},
                            {"modulus", m->modulus()},
                            {"orders", m->module().orders()},
                            {"action", m->action()}};
  }
  for (const auto& [name, f] : homs_) {
    const auto& r = refs("homs/" + name);
    out["homs"][name] = {{"dom", r[0]}, {"cod", r[1]}, {"map", f.map()}};
  }
  for (const auto& [name, c] : cochains_) {
    const auto& r = refs("cochains/" + name);
    json j = {{"group", r[0]}, {"degree", c.degree()}, {"modulus", c.modulus()}, {"values", c.values()}};
    if (r.size() > 1) j["module"] = r[1];
    if (cocycle_flags_.at(name)) j["cocycle"] = true;
    out["cochains"][name] = std::move(j);
  }
  for (const auto& [name, p] : places_) {
    const auto& r = refs("places/" + name);
    out["places"][name] = {{"group", r[0]},
                           {"embedding", r[1]},
                           {"inertia", p.inertia},
                           {"generator", r[2]},
                           {"normalization", p.inv_normalization}};
  }
  for (const auto& [name, d] : data_) {
    const auto& r = refs("data/" + name);
    json places = json::array();
    for (const auto& p : d.places) places.push_back(p.name);
    out["data"][name] = {
        {"modulus", d.modulus}, {"global_group", r[0]}, {"gauge_group", r[1]}, {"places", std::move(places)},
        {"cocycle", r[2]}};
  }
  return out;
}

std::string Document::serialize() const { return to_json().dump(2) + "\n"; }

Document Document::parse(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw parse_error("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what(),
                      {line, col});
  }
  if (!root.is_object()) throw parse_error("document must be a JSON object");
  const json& version = field(root, "format_version", "");
  if (!version.is_number_integer() || version.get<std::int64_t>() != kFormatVersion) {
    throw parse_error("unsupported format_version");
  }
  for (const auto& [key, value] : root.items()) {
    bool known = key == "format_version";
    for (const char* s : kSections) known |= key == s;
    if (!known) throw parse_error("unknown section '" + key + "'");
    if (key != "format_version" && !value.is_object()) throw parse_error("/" + key + ": expected an object");
  }
  auto section = [&](const char* s) -> const json& {
    static const json empty = json::object();
    auto it = root.find(s);
    return it == root.end() ? empty : *it;
  };

  Document doc;
  auto group_ref = [&](const json& j, const std::string& path) {
    const std::string name = name_value(j, path);
    auto it = doc.groups_.find(name);
    if (it == doc.groups_.end()) throw validation_error("UnresolvedReference", path + ": no group named '" + name + "'");
    return it->second;
  };

  for (const auto& [name, j] : section("groups").items()) {
    const std::string path = "/groups/" + name;
    const std::uint64_t order = unsigned_value(field(j, "order", path), path + "/order");
    const json& rows = field(j, "table", path);
    if (!rows.is_array() || rows.size() != order) throw parse_error(path + "/table: expected " + std::to_string(order) + " rows");
    std::vector<std::vector<Element>> table;
    for (std::size_t r = 0; r < rows.size(); ++r) table.push_back(unsigned_list(rows[r], path + "/table/" + std::to_string(r)));
    doc.groups_.emplace(name, make_group(table));
  }
  for (const auto& [name, j] : section("modules").items()) {
    const std::string path = "/modules/" + name;
    GroupPtr g = group_ref(field(j, "group", path), path + "/group");
    const std::uint32_t modulus = small_value(field(j, "modulus", path), path + "/modulus");
    ModuleOverZn module(modulus, unsigned_list(field(j, "orders", path), path + "/orders"));
    const json& action = field(j, "action", path);
    if (!action.is_array()) throw parse_error(path + "/action: expected a list");
    std::vector<std::vector<Residue>> matrices;
    for (std::size_t e = 0; e < action.size(); ++e) {
      matrices.push_back(unsigned_list(action[e], path + "/action/" + std::to_string(e)));
    }
    doc.modules_.emplace(name, std::make_shared<const GModule>(std::move(g), std::move(module), std::move(matrices)));
    doc.refs_["modules/" + name] = {field(j, "group", path).get<std::string>()};
  }
  for (const auto& [name, j] : section("homs").items()) {
    const std::string path = "/homs/" + name;
    doc.homs_.emplace(name, GroupHom(group_ref(field(j, "dom", path), path + "/dom"),
                                     group_ref(field(j, "cod", path), path + "/cod"),
                                     unsigned_list(field(j, "map", path), path + "/map")));
    doc.refs_["homs/" + name] = {j["dom"].get<std::string>(), j["cod"].get<std::string>()};
  }
  for (const auto& [name, j] : section("cochains").items()) {
    const std::string path = "/cochains/" + name;
    GroupPtr g = group_ref(field(j, "group", path), path + "/group");
    const std::size_t degree = unsigned_value(field(j, "degree", path), path + "/degree");
    const std::uint32_t modulus = small_value(field(j, "modulus", path), path + "/modulus");
    ModulePtr coeffs;
    std::vector<std::string> r = {j["group"].get<std::string>()};
    if (auto it = j.find("module"); it != j.end()) {
      const std::string mname = name_value(*it, path + "/module");
      r.push_back(mname);
      auto m = doc.modules_.find(mname);
      if (m == doc.modules_.end()) throw validation_error("UnresolvedReference", path + ": no module named '" + mname + "'");
      coeffs = m->second;
      if (!same_group(coeffs->group(), g) || coeffs->modulus() != modulus) {
        throw validation_error("IncompatibleCochains", path + ": module does not match group and modulus");
      }
    } else {
      coeffs = GModule::trivial(g, modulus);
    }
    Cochain c(coeffs, degree, unsigned_list(field(j, "values", path), path + "/values"));
    bool flag = false;
    if (auto it = j.find("cocycle"); it != j.end()) {
      if (!it->is_boolean()) throw parse_error(path + "/cocycle: expected a boolean");
      flag = it->get<bool>();
    }
    if (flag) {
      if (auto w = cocycle_witness(c)) {
        throw validation_error("NotACocycle", path + ": declared cocycle fails the cocycle condition",
                               std::vector<std::uint64_t>(w->begin(), w->end()));
      }
    }
    doc.cochains_.emplace(name, std::move(c));
    doc.cocycle_flags_[name] = flag;
    doc.refs_["cochains/" + name] = std::move(r);
  }
  auto ref = [&](const auto& m, const json& j, const std::string& path, const char* kind) {
    const std::string n = name_value(j, path);
    auto it = m.find(n);
    if (it == m.end()) throw validation_error("UnresolvedReference", path + ": no " + kind + " named '" + n + "'");
    return it->second;
  };
  for (const auto& [name, j] : section("places").items()) {
    const std::string path = "/places/" + name;
    GroupPtr g = group_ref(field(j, "group", path), path + "/group");
    GroupHom emb = ref(doc.homs_, field(j, "embedding", path), path + "/embedding", "hom");
    if (!same_group(emb.dom(), g)) throw validation_error("BadEmbedding", path + ": embedding domain is not the local group");
    PlaceDatum p{name, std::move(emb), unsigned_list(field(j, "inertia", path), path + "/inertia"),
                 ref(doc.cochains_, field(j, "generator", path), path + "/generator", "cochain"),
                 small_value(field(j, "normalization", path), path + "/normalization")};
    for (Element x : p.inertia) {
      if (x >= g->order()) throw validation_error("BadInertia", path + ": inertia element out of range", {x});
    }
    doc.places_.emplace(name, std::move(p));
    doc.refs_["places/" + name] = {j["group"].get<std::string>(), j["embedding"].get<std::string>(),
                                   j["generator"].get<std::string>()};
  }
  for (const auto& [name, j] : section("data").items()) {
    const std::string path = "/data/" + name;
    GlobalDatum d{small_value(field(j, "modulus", path), path + "/modulus"),
                  group_ref(field(j, "global_group", path), path + "/global_group"),
                  {},
                  group_ref(field(j, "gauge_group", path), path + "/gauge_group"),
                  ref(doc.cochains_, field(j, "cocycle", path), path + "/cocycle", "cochain")};
    const json& places = field(j, "places", path);
    if (!places.is_array()) throw parse_error(path + "/places: expected a list");
    for (std::size_t i = 0; i < places.size(); ++i) {
      d.places.push_back(ref(doc.places_, places[i], path + "/places/" + std::to_string(i), "place"));
    }
    doc.data_.emplace(name, std::move(d));
    doc.refs_["data/" + name] = {j["global_group"].get<std::string>(), j["gauge_group"].get<std::string>(),
                                 j["cocycle"].get<std::string>()};
  }
  return doc;
}

Document Document::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace arithcs
