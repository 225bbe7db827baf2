#pragma once

// Counts of conjugacy classes of maximal tori (n_R of Reeb type, n(D, r) of
// dimension r) and bouquet shapes for specific contact structures.
//
// JSON count encoding: an integer (exact), {"at_least": k}, "ALEPH0", "unknown".

#include <nlohmann/json.hpp>

#include <cstddef>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contact_tori/bigint.hpp"
#include "contact_tori/error.hpp"
#include "contact_tori/join.hpp"

namespace contact_tori {

struct Count {
  enum class Kind { Exact, LowerBound, Aleph0, Unknown };
  Kind kind = Kind::Unknown;
  Int value = 0;  // meaningful for Exact and LowerBound

  static Count exact(Int v) { return {Kind::Exact, std::move(v)}; }
  static Count at_least(Int v) { return {Kind::LowerBound, std::move(v)}; }
  static Count aleph0() { return {Kind::Aleph0, 0}; }
  static Count unknown() { return {Kind::Unknown, 0}; }

  bool is_exact() const { return kind == Kind::Exact; }
  bool is_finite_known() const { return kind == Kind::Exact || kind == Kind::LowerBound; }

  std::string str() const {
    switch (kind) {
      case Kind::Exact: return value.str();
      case Kind::LowerBound: return ">=" + value.str();
      case Kind::Aleph0: return "ALEPH0";
      case Kind::Unknown: return "unknown";
    }
    return "?";
  }

  /// Sum; ALEPH0 absorbs, unknown poisons, any bound makes the sum a bound.
  friend Count operator+(const Count& a, const Count& b) {
    if (a.kind == Kind::Aleph0 || b.kind == Kind::Aleph0) return aleph0();
    if (a.kind == Kind::Unknown || b.kind == Kind::Unknown) return unknown();
    const Kind k = (a.is_exact() && b.is_exact()) ? Kind::Exact : Kind::LowerBound;
    return {k, a.value + b.value};
  }

  bool operator==(const Count&) const = default;
};

struct WzexParams {
  WzexFamily family;
  Int a, b;
};

struct CensusRecord {
  std::string id;
  std::string manifold;
  long long dimension = 0;  // 2n + 1
  std::string structure;
  Count n_R;
  std::map<long long, Count> n_by_rank;
  std::optional<Int> bouquet_size;
  std::optional<std::vector<long long>> bouquet_cone_dims;
  std::optional<WzexParams> wzex;
  std::optional<Int> c1_invariant;
  std::string notes;
};

// ---------------------------------------------------------------------------
// JSON

inline Int json_to_int(const nlohmann::json& j, const std::string& what) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_int(j.get<std::string>());
    } catch (const InvalidInput&) {
    }
  }
  throw InvalidInput(what + ": expected an integer or decimal string");
}

inline nlohmann::json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

inline Count count_from_json(const nlohmann::json& j, const std::string& what) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "ALEPH0") return Count::aleph0();
    if (s == "unknown") return Count::unknown();
  }
  if (j.is_object() && j.contains("at_least")) {
    Int v = json_to_int(j.at("at_least"), what);
    if (v < 0) throw InvalidInput(what + ": negative count");
    return Count::at_least(std::move(v));
  }
  Int v = json_to_int(j, what);
  if (v < 0) throw InvalidInput(what + ": negative count");
  return Count::exact(std::move(v));
}

inline nlohmann::json count_to_json(const Count& c) {
  switch (c.kind) {
    case Count::Kind::Exact: return int_to_json(c.value);
    case Count::Kind::LowerBound: return nlohmann::json{{"at_least", int_to_json(c.value)}};
    case Count::Kind::Aleph0: return "ALEPH0";
    case Count::Kind::Unknown: return "unknown";
  }
  return nullptr;
}

inline CensusRecord record_from_json(const nlohmann::json& j) {
  try {
    CensusRecord r;
    r.id = j.at("id").get<std::string>();
    r.manifold = j.at("manifold").get<std::string>();
    r.dimension = j.at("dimension").get<long long>();
    r.structure = j.at("structure").get<std::string>();
    r.n_R = count_from_json(j.at("n_R"), r.id + ".n_R");
    if (j.contains("n_by_rank"))
      for (const auto& [k, v] : j.at("n_by_rank").items())
        r.n_by_rank.emplace(std::stoll(k), count_from_json(v, r.id + ".n_by_rank." + k));
    if (j.contains("bouquet_size")) r.bouquet_size = json_to_int(j.at("bouquet_size"), r.id + ".bouquet_size");
    if (j.contains("bouquet_cone_dims")) r.bouquet_cone_dims = j.at("bouquet_cone_dims").get<std::vector<long long>>();
    if (j.contains("wzex")) {
      const auto& w = j.at("wzex");
      const auto fam = w.at("family").get<std::string>();
      if (fam != "D" && fam != "TildeD") throw InvalidInput(r.id + ": unknown wzex family " + fam);
      r.wzex = WzexParams{fam == "D" ? WzexFamily::D : WzexFamily::TildeD, json_to_int(w.at("a"), "wzex.a"),
                          json_to_int(w.at("b"), "wzex.b")};
    }
    if (j.contains("c1_invariant")) r.c1_invariant = json_to_int(j.at("c1_invariant"), r.id + ".c1_invariant");
    r.notes = j.value("notes", "");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed census record: ") + e.what());
  } catch (const std::logic_error& e) {
    throw InvalidInput(std::string("malformed census record: ") + e.what());
  }
}

inline nlohmann::json record_to_json(const CensusRecord& r) {
  nlohmann::json j{{"id", r.id},
                   {"manifold", r.manifold},
                   {"dimension", r.dimension},
                   {"structure", r.structure},
                   {"n_R", count_to_json(r.n_R)}};
  nlohmann::json ranks = nlohmann::json::object();
  for (const auto& [k, v] : r.n_by_rank) ranks[std::to_string(k)] = count_to_json(v);
  j["n_by_rank"] = ranks;
  if (r.bouquet_size) j["bouquet_size"] = int_to_json(*r.bouquet_size);
  if (r.bouquet_cone_dims) j["bouquet_cone_dims"] = *r.bouquet_cone_dims;
  if (r.wzex)
    j["wzex"] = {{"family", r.wzex->family == WzexFamily::D ? "D" : "TildeD"},
                 {"a", int_to_json(r.wzex->a)},
                 {"b", int_to_json(r.wzex->b)}};
  if (r.c1_invariant) j["c1_invariant"] = int_to_json(*r.c1_invariant);
  j["notes"] = r.notes;
  return j;
}

inline std::vector<CensusRecord> parse_census(const nlohmann::json& doc) {
  const nlohmann::json& list = doc.is_object() ? doc.at("records") : doc;
  if (!list.is_array()) throw InvalidInput("census must be an array of records");
  std::vector<CensusRecord> out;
  for (const auto& j : list) out.push_back(record_from_json(j));
  return out;
}

inline std::vector<CensusRecord> load_census(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open census file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput("census file " + path + ": " + e.what());
  }
  return parse_census(doc);
}

// ---------------------------------------------------------------------------
// Consistency

struct ConsistencyReport {
  std::string id;
  bool consistent = true;
  std::vector<std::string> violations;
  std::vector<std::string> skipped;  // checks not applicable (ALEPH0, unknown, bounds)

  void fail(std::string s) {
    consistent = false;
    violations.push_back(std::move(s));
  }
};

inline ConsistencyReport check_record(const CensusRecord& r) {
  ConsistencyReport rep;
  rep.id = r.id;
  if (r.dimension < 3 || r.dimension % 2 == 0) {
    rep.fail("dimension " + std::to_string(r.dimension) + " is not 2n+1 with n >= 1");
    return rep;
  }
  const long long n = (r.dimension - 1) / 2;

  for (const auto& [rank, c] : r.n_by_rank)
    if (rank < 1 || rank > n + 1)
      rep.fail("torus rank " + std::to_string(rank) + " outside 1.." + std::to_string(n + 1));

  // n_R <= sum_r n(D, r)
  Count total = Count::exact(0);
  for (const auto& [rank, c] : r.n_by_rank) total = total + c;
  if (r.n_by_rank.empty()) total = Count::unknown();
  if (r.n_R.is_exact() && total.is_exact()) {
    if (r.n_R.value > total.value)
      rep.fail("n_R = " + r.n_R.str() + " exceeds sum of n(D, r) = " + total.str());
  } else {
    rep.skipped.push_back("n_R <= sum n(D, r): n_R = " + r.n_R.str() + ", sum = " + total.str());
  }

  if (r.bouquet_cone_dims) {
    for (auto d : *r.bouquet_cone_dims)
      if (d < 1 || d > n + 1)
        rep.fail("Sasaki cone dimension " + std::to_string(d) + " outside 1.." + std::to_string(n + 1));
    if (r.bouquet_size && Int(r.bouquet_cone_dims->size()) != *r.bouquet_size)
      rep.fail("bouquet lists " + std::to_string(r.bouquet_cone_dims->size()) + " cone dimensions but has size " +
               r.bouquet_size->str());
  }

  std::optional<Int> cones;
  if (r.bouquet_size) cones = *r.bouquet_size;
  else if (r.bouquet_cone_dims) cones = Int(r.bouquet_cone_dims->size());
  if (cones) {
    // A bouquet with N cones exhibits N conjugacy classes of Reeb type.
    switch (r.n_R.kind) {
      case Count::Kind::Exact:
        if (r.n_R.value != *cones)
          rep.fail("bouquet has " + cones->str() + " cones but n_R = " + r.n_R.str());
        break;
      case Count::Kind::LowerBound:
        if (r.n_R.value > *cones)
          rep.fail("lower bound n_R " + r.n_R.str() + " is not witnessed by the " + cones->str() + "-bouquet");
        break;
      default:
        rep.skipped.push_back("bouquet size vs n_R = " + r.n_R.str());
    }
  }
  return rep;
}

/// Recomputes bouquet size, manifold and c_1 invariant of a family record.
inline ConsistencyReport check_wzex_record(const CensusRecord& r) {
  ConsistencyReport rep;
  rep.id = r.id;
  if (!r.wzex) {
    rep.skipped.push_back("not a family record");
    return rep;
  }
  WzexRecord w;
  try {
    w = wzex_family(r.wzex->family, r.wzex->a, r.wzex->b);
  } catch (const InvalidInput& e) {
    rep.fail(e.what());
    return rep;
  }
  if (!r.bouquet_size || *r.bouquet_size != w.bouquet_size)
    rep.fail("bouquet size " + (r.bouquet_size ? r.bouquet_size->str() : std::string("missing")) +
             " != recomputed " + w.bouquet_size.str());
  if (r.manifold != to_string(w.manifold))
    rep.fail("manifold " + r.manifold + " != recomputed " + to_string(w.manifold));
  if (r.c1_invariant && *r.c1_invariant != w.c1_invariant)
    rep.fail("c1 invariant " + r.c1_invariant->str() + " != recomputed " + w.c1_invariant.str());
  if (r.dimension != 5) rep.fail("family records live in dimension 5");
  return rep;
}

}  // namespace contact_tori
