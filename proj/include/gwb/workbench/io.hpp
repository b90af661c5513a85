#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gwb/modrep/group.hpp"
#include "gwb/presets/catalog.hpp"

namespace gwb {

using json = nlohmann::json;

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

namespace detail {

inline const json& require(const json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw InputError(what + ": missing \"" + key + "\"");
  return j.at(key);
}

inline long as_long(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InputError(what + " must be an integer");
  return j.get<long>();
}

inline std::uint64_t as_count(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError(what + " must be a nonnegative integer");
  return j.get<std::uint64_t>();
}

inline std::string as_string(const json& j, const std::string& what) {
  if (!j.is_string()) throw InputError(what + " must be a string");
  return j.get<std::string>();
}

inline FieldSpec field_from_json(const json& j, const std::string& what) {
  const auto p = as_count(require(j, "char", what), what + " char");
  unsigned k = 1;
  if (j.contains("field_degree")) k = static_cast<unsigned>(as_count(j.at("field_degree"), what + " field_degree"));
  if (p == 0) return FieldSpec::from_char(0, k);
  std::vector<std::uint64_t> mp;
  if (j.contains("min_poly")) {
    if (!j.at("min_poly").is_array()) throw InputError(what + " min_poly must be an array");
    for (const auto& c : j.at("min_poly")) mp.push_back(as_count(c, what + " min_poly entry"));
  }
  if (k == 0) throw InputError(what + " field_degree must be at least 1");
  return FieldSpec::extension(p, k, mp);
}

}  // namespace detail

/// {"char": 0|p, "field_degree": k, "vars": [{"name": "x", "codegree": 1}],
///  "relations": ["x*y"], "strictly_commutative": false}
inline RingPayload ring_from_json(const json& j) {
  const std::string what = "ring";
  if (!j.is_object()) throw InputError("ring must be a JSON object");
  RingPayload r;
  r.field = detail::field_from_json(j, what);
  const auto& vars = detail::require(j, "vars", what);
  if (!vars.is_array() || vars.empty()) throw InputError("ring vars must be a nonempty array");
  for (const auto& v : vars) {
    Variable x;
    x.name = detail::as_string(detail::require(v, "name", "variable"), "variable name");
    x.codegree = detail::as_long(detail::require(v, "codegree", "variable " + x.name), "codegree of " + x.name);
    r.vars.push_back(std::move(x));
  }
  if (j.contains("relations")) {
    if (!j.at("relations").is_array()) throw InputError("ring relations must be an array");
    for (const auto& s : j.at("relations")) r.relations.push_back(detail::as_string(s, "relation"));
  }
  if (j.contains("strictly_commutative")) {
    if (!j.at("strictly_commutative").is_boolean()) throw InputError("strictly_commutative must be true or false");
    r.strictly_commutative = j.at("strictly_commutative").get<bool>();
  }
  return r;
}

inline json ring_to_json(const RingPayload& r) {
  json j;
  j["char"] = r.field.kind == FieldSpec::Kind::rationals ? 0 : r.field.p;
  j["field_degree"] = r.field.degree;
  if (!r.field.min_poly.empty()) j["min_poly"] = r.field.min_poly;
  j["vars"] = json::array();
  for (const auto& v : r.vars) j["vars"].push_back({{"name", v.name}, {"codegree", v.codegree}});
  j["relations"] = r.relations;
  if (r.strictly_commutative) j["strictly_commutative"] = true;
  return j;
}

struct ModuleInput {
  std::optional<RingPayload> ring;
  ModulePayload module;
};

/// {"ring": <ring object or path>, "gens": [shift], "rels": [[entry per gen]]}.
/// A relative ring path is resolved against base_dir.
inline ModuleInput module_from_json(const json& j, const std::filesystem::path& base_dir = {}) {
  if (!j.is_object()) throw InputError("module must be a JSON object");
  ModuleInput m;
  if (j.contains("ring")) {
    const auto& r = j.at("ring");
    if (r.is_string()) {
      std::filesystem::path p = r.get<std::string>();
      if (p.is_relative()) p = base_dir / p;
      m.ring = ring_from_json(load_json_file(p.string()));
    } else {
      m.ring = ring_from_json(r);
    }
  }
  const auto& gens = detail::require(j, "gens", "module");
  if (!gens.is_array() || gens.empty()) throw InputError("module gens must be a nonempty array");
  for (const auto& g : gens) m.module.gens.push_back(detail::as_long(g, "generator shift"));
  if (j.contains("rels")) {
    if (!j.at("rels").is_array()) throw InputError("module rels must be an array of columns");
    for (const auto& c : j.at("rels")) {
      if (!c.is_array()) throw InputError("each relation column must be an array");
      if (c.size() != m.module.gens.size())
        throw InputError("relation column has " + std::to_string(c.size()) + " entries for " + std::to_string(m.module.gens.size()) +
                         " generators");
      std::vector<std::string> col;
      for (const auto& e : c) col.push_back(detail::as_string(e, "relation entry"));
      m.module.rels.push_back(std::move(col));
    }
  }
  return m;
}

struct GroupInput {
  GroupTable group;
  FieldSpec field;
};

/// {"order": n, "table": [[...]], "sylow": [...], "char": p, "field_degree": k}
inline GroupInput group_from_json(const json& j) {
  if (!j.is_object()) throw InputError("group must be a JSON object");
  const auto n = detail::as_count(detail::require(j, "order", "group"), "group order");
  const auto& t = detail::require(j, "table", "group");
  if (!t.is_array() || t.size() != n) throw InputError("group table must have order rows");
  std::vector<std::vector<std::size_t>> table;
  for (const auto& row : t) {
    if (!row.is_array() || row.size() != n) throw InputError("group table must have order columns");
    std::vector<std::size_t> r;
    for (const auto& x : row) r.push_back(detail::as_count(x, "table entry"));
    table.push_back(std::move(r));
  }
  std::vector<std::size_t> sylow;
  if (j.contains("sylow")) {
    if (!j.at("sylow").is_array()) throw InputError("sylow must be an array");
    for (const auto& x : j.at("sylow")) sylow.push_back(detail::as_count(x, "sylow entry"));
  }
  const FieldSpec f = detail::field_from_json(j, "group");
  if (f.kind == FieldSpec::Kind::rationals) throw InputError("group algebras need a positive characteristic");
  return {GroupTable(std::move(table), f.p, std::move(sylow)), f};
}

inline json group_to_json(const GroupTable& G, const FieldSpec& f) {
  json j;
  j["order"] = G.order();
  j["table"] = G.table();
  j["sylow"] = G.sylow();
  j["char"] = f.p;
  j["field_degree"] = f.degree;
  return j;
}

}  // namespace gwb
