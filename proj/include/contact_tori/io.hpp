#pragma once

// JSON schemas.
//   cone:     {"ambient_rank": n+1, "facet_normals": [[...], ...]}
//   polytope: {"ambient_rank": n, "facets": [{"normal": [...], "offset": "p/q", "label": m}, ...]}
// Integers are written as JSON numbers when they fit in 64 bits and as decimal
// strings otherwise; both are accepted on input. Rationals are "p/q" or "p"
// strings (plain JSON integers are accepted too). Normals are inward.

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "contact_tori/bigint.hpp"
#include "contact_tori/census.hpp"
#include "contact_tori/cone.hpp"
#include "contact_tori/error.hpp"
#include "contact_tori/lattice.hpp"

namespace contact_tori {

using nlohmann::json;

inline Rational json_to_rational(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput(what + ": expected a rational string \"p/q\" or an integer");
}

inline json rational_to_json(const Rational& q) { return to_string(q); }

inline IntVector json_to_int_vector(const json& j, const std::string& what) {
  if (!j.is_array()) throw InvalidInput(what + ": expected an array");
  IntVector v;
  for (const auto& x : j) v.push_back(json_to_int(x, what));
  return v;
}

inline json int_vector_to_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(int_to_json(x));
  return a;
}

inline json rational_vector_to_json(const RationalVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rational_to_json(x));
  return a;
}

inline json matrix_to_json(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(int_vector_to_json(m.row(r)));
  return a;
}

inline json group_to_json(const AbelianGroupStructure& g) {
  json factors = json::array();
  for (const auto& d : g.invariant_factors) factors.push_back(int_to_json(d));
  return json{{"free_rank", g.free_rank}, {"invariant_factors", factors}, {"description", g.str()}};
}

inline std::size_t json_rank(const json& j, const std::string& key) {
  if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long long>() < 0)
    throw InvalidInput("missing or invalid '" + key + "'");
  return static_cast<std::size_t>(j.at(key).get<long long>());
}

inline GoodCone cone_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("cone JSON must be an object");
  const std::size_t rank = json_rank(j, "ambient_rank");
  if (!j.contains("facet_normals") || !j.at("facet_normals").is_array())
    throw InvalidInput("missing 'facet_normals' array");
  std::vector<IntVector> normals;
  for (const auto& v : j.at("facet_normals")) normals.push_back(json_to_int_vector(v, "facet_normals"));
  return GoodCone(rank, std::move(normals));
}

inline json cone_to_json(const GoodCone& c) {
  json normals = json::array();
  for (const auto& v : c.facet_normals()) normals.push_back(int_vector_to_json(v));
  return json{{"ambient_rank", c.ambient_rank()}, {"facet_normals", normals}};
}

inline LTPolytope polytope_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("polytope JSON must be an object");
  const std::size_t rank = json_rank(j, "ambient_rank");
  if (!j.contains("facets") || !j.at("facets").is_array()) throw InvalidInput("missing 'facets' array");
  std::vector<LabelledFacet> facets;
  for (const auto& f : j.at("facets")) {
    if (!f.is_object() || !f.contains("normal") || !f.contains("offset"))
      throw InvalidInput("each facet needs 'normal' and 'offset'");
    LabelledFacet lf;
    lf.normal = json_to_int_vector(f.at("normal"), "facet normal");
    lf.offset = json_to_rational(f.at("offset"), "facet offset");
    lf.label = f.contains("label") ? json_to_int(f.at("label"), "facet label") : Int(1);
    facets.push_back(std::move(lf));
  }
  return LTPolytope(rank, std::move(facets));
}

inline json polytope_to_json(const LTPolytope& p) {
  json facets = json::array();
  for (const auto& f : p.facets())
    facets.push_back(
        json{{"normal", int_vector_to_json(f.normal)}, {"offset", rational_to_json(f.offset)}, {"label", int_to_json(f.label)}});
  return json{{"ambient_rank", p.ambient_rank()}, {"facets", facets}};
}

inline json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(source + ": " + e.what());
  }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

/// Comma-separated integers, e.g. "1,7,15,7,1".
inline std::vector<Int> parse_int_list(const std::string& s) {
  std::vector<Int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InvalidInput("empty entry in list '" + s + "'");
    out.push_back(parse_int(item.substr(b, e - b + 1)));
  }
  if (out.empty()) throw InvalidInput("empty list");
  return out;
}

inline std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InvalidInput("empty entry in list '" + s + "'");
    out.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  if (out.empty()) throw InvalidInput("empty list");
  return out;
}

template <class T>
std::string join_list(const std::vector<T>& xs, const std::string& sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    if constexpr (std::is_same_v<T, Int> || std::is_same_v<T, Rational>) out += to_string(xs[i]);
    else out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace contact_tori
