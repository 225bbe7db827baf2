#pragma once

// Command-line front end. Exit codes: 0 success / property true, 1 property
// false or identity failure, 2 invalid input or usage, 3 capacity exceeded.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "contact_tori/census.hpp"
#include "contact_tori/cone.hpp"
#include "contact_tori/cone_equiv.hpp"
#include "contact_tori/contact_checks.hpp"
#include "contact_tori/error.hpp"
#include "contact_tori/io.hpp"
#include "contact_tori/join.hpp"
#include "contact_tori/polygon_gysin.hpp"
#include "contact_tori/weighted_links.hpp"

#ifndef CONTACT_TORI_DEFAULT_CENSUS
#define CONTACT_TORI_DEFAULT_CENSUS "data/census.json"
#endif

namespace contact_tori::cli {

enum ExitCode : int { kOk = 0, kFalse = 1, kInvalid = 2, kCapacity = 3 };

struct Result {
  json value;
  int exit = kOk;
  bool table_by_default = false;
  std::optional<std::string> table;  // custom table rendering
};

namespace detail {

inline std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

inline bool is_flat(const json& j) {
  if (j.is_primitive()) return true;
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (!x.is_primitive()) return false;
  return true;
}

inline std::string inline_text(const json& j) {
  if (j.is_primitive()) return scalar_text(j);
  if (is_flat(j)) {
    std::string s;
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + scalar_text(j[i]);
    return s;
  }
  return j.dump();
}

inline std::string render_table(const json& j) {
  if (j.is_object() && j.size() == 1) return render_table(j.begin().value());
  if (j.is_object()) {
    std::string s;
    for (auto it = j.begin(); it != j.end(); ++it) s += it.key() + ": " + inline_text(it.value()) + "\n";
    return s;
  }
  if (j.is_array() && !is_flat(j)) {
    std::string s;
    for (const auto& x : j) s += inline_text(x) + "\n";
    return s;
  }
  return inline_text(j) + "\n";
}

inline std::vector<Int> ints(const std::string& s) { return parse_int_list(s); }

inline IntVector int_vec(const std::string& s) { return parse_int_list(s); }

inline std::vector<long long> small_ints(const std::string& s) {
  std::vector<long long> out;
  for (const auto& x : parse_int_list(s)) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
      throw InvalidInput("value " + x.str() + " out of range");
    out.push_back(static_cast<long long>(x));
  }
  return out;
}

inline json identity_report_json(const IdentityReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"residual", c.residual}, {"pass", c.pass}});
  return json{{"entry", r.entry},
              {"samples", r.samples},
              {"seed", r.seed},
              {"tol", r.tol},
              {"fd_tol", r.fd_tol},
              {"min_eigenvalue_contact", r.min_eigenvalue_contact},
              {"min_eigenvalue_metric", r.min_eigenvalue_metric},
              {"checks", checks},
              {"all_pass", r.all_pass()}};
}

inline json report_json(const ConsistencyReport& r) {
  return json{{"id", r.id}, {"consistent", r.consistent}, {"violations", r.violations}, {"skipped", r.skipped}};
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toolkit for toric contact structures, Sasaki cones and bouquets", "contact_tori"};
  app.require_subcommand(1);
  std::string format;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

  std::function<Result()> action;
  auto bind = [&](CLI::App* sub, std::function<Result()> f) {
    sub->fallthrough();
    sub->callback([&action, f] { action = f; });
  };

  // Shared option storage.
  std::string file, file2, xi_s, w_s, d_s, a_s, b_s, base_s, ranks_s, prefix_s, class_s, omega_s, alpha_s, exps_s,
      type_s, params_s, id_s;
  std::string k1_s = "1", k2_s = "1", u1_s = "1", u2_s = "1", n1_s, n2_s, dim_aut_s = "0";
  std::string census_file = CONTACT_TORI_DEFAULT_CENSUS;
  long long len = 0, m_val = 0, param = -1, n_param = -1;
  std::size_t samples = 100;
  std::uint64_t seed = 42;
  double tol = 1e-9, fd_tol = 1e-4;
  bool witness = false, duality = false;

  // ---- cone
  auto* cone = app.add_subcommand("cone", "Good cones: goodness, invariants, duality, slices, equivalence");
  cone->require_subcommand(1)->fallthrough();
  {
    auto* s = cone->add_subcommand("check", "Verify the goodness condition on all proper faces");
    s->add_option("file", file, "Cone JSON")->required();
    bind(s, [&] {
      const auto rep = check_good(cone_from_json(read_json_file(file)));
      return Result{{{"good", rep.good}, {"faces_checked", rep.faces_checked}, {"failing_faces", rep.failing_faces}},
                    rep.good ? kOk : kFalse};
    });
  }
  {
    auto* s = cone->add_subcommand("invariants", "pi_1 and rank pi_2 of the toric contact manifold");
    s->add_option("file", file, "Cone JSON")->required();
    bind(s, [&] {
      const auto inv = cone_invariants(cone_from_json(read_json_file(file)));
      json factors = json::array();
      for (const auto& f : inv.pi1.invariant_factors) factors.push_back(int_to_json(f));
      return Result{{{"facet_count", inv.facet_count},
                     {"pi1", inv.pi1.trivial() ? std::string("trivial") : inv.pi1.str()},
                     {"pi1_invariant_factors", factors},
                     {"pi1_order", int_to_json(inv.pi1.order())},
                     {"pi2_rank", inv.pi2_rank},
                     {"odd_betti_vanish", inv.odd_betti_vanish}}};
    });
  }
  {
    auto* s = cone->add_subcommand("dual", "Dual cone, as a cone JSON (its normals are the rays of C)");
    s->add_option("file", file, "Cone JSON")->required();
    bind(s, [&] { return Result{cone_to_json(dual_cone_as_cone(cone_from_json(read_json_file(file))))}; });
  }
  {
    auto* s = cone->add_subcommand("slice", "Polytope cut out by <y, xi> = 1");
    s->add_option("file", file, "Cone JSON")->required();
    s->add_option("--xi", xi_s, "Reeb vector, comma-separated rationals")->required();
    bind(s, [&] {
      const auto c = cone_from_json(read_json_file(file));
      const auto xi = parse_rational_list(xi_s);
      const auto sl = reeb_slice(c, xi);
      const auto pr = primitive_reeb(xi);
      json verts = json::array();
      for (const auto& v : sl.vertices) verts.push_back(rational_vector_to_json(v));
      return Result{{{"vertices", verts},
                     {"simple", sl.simple},
                     {"reeb_generator", int_vector_to_json(pr.generator)},
                     {"reeb_scale", rational_to_json(pr.scale)}}};
    });
  }
  {
    auto* s = cone->add_subcommand("equiv", "GL(n+1, Z)-equivalence of two good cones");
    s->add_option("a", file, "First cone JSON")->required();
    s->add_option("b", file2, "Second cone JSON")->required();
    s->add_flag("--witness", witness, "Print the lattice automorphism L");
    bind(s, [&] {
      const auto eq = are_equivalent(cone_from_json(read_json_file(file)), cone_from_json(read_json_file(file2)));
      json j{{"equivalent", eq.equivalent}};
      if (witness && eq.witness) j["witness"] = matrix_to_json(*eq.witness);
      return Result{j, eq.equivalent ? kOk : kFalse};
    });
  }
  {
    auto* s = cone->add_subcommand("from-polytope", "Cone over a labelled polytope");
    s->add_option("file", file, "Polytope JSON")->required();
    bind(s, [&] {
      const auto cand = cone_over_polytope(polytope_from_json(read_json_file(file)));
      json normals = json::array();
      for (const auto& v : cand.normals) normals.push_back(int_vector_to_json(v));
      return Result{{{"ambient_rank", cand.ambient_rank},
                     {"facet_normals", normals},
                     {"smooth", cand.smooth()},
                     {"non_primitive", cand.non_primitive}}};
    });
  }

  // ---- join
  auto* join = app.add_subcommand("join", "The (k1, k2)-join and bouquet counts");
  join->require_subcommand(1)->fallthrough();
  {
    auto* s = join->add_subcommand("cone", "Moment cone of S^3 *_{k1,k2} S^3");
    s->add_option("--k1", k1_s)->required();
    s->add_option("--k2", k2_s)->required();
    bind(s, [&] { return Result{cone_to_json(sphere_join_cone(parse_int(k1_s), parse_int(k2_s)))}; });
  }
  {
    auto* s = join->add_subcommand("family", "Bouquet record of D_{k1,k2} (type D) or tilde D_{l,e} (type tilde)");
    s->add_option("--type", type_s)->required()->check(CLI::IsMember({"D", "tilde"}));
    s->add_option("--params", params_s, "k1,k2 or l,e")->required();
    bind(s, [&] {
      const auto p = detail::ints(params_s);
      if (p.size() != 2) throw InvalidInput("--params needs exactly two integers");
      const auto fam = type_s == "D" ? WzexFamily::D : WzexFamily::TildeD;
      const auto r = wzex_family(fam, p[0], p[1]);
      return Result{{{"family", type_s == "D" ? "D" : "TildeD"},
                     {"params", {int_to_json(r.a), int_to_json(r.b)}},
                     {"bouquet_size", int_to_json(r.bouquet_size)},
                     {"manifold", to_string(r.manifold)},
                     {"c1_invariant", int_to_json(r.c1_invariant)}}};
    });
  }
  {
    auto* s = join->add_subcommand("smooth", "gcd(u1 k2, u2 k1) = 1");
    s->add_option("--k1", k1_s)->required();
    s->add_option("--k2", k2_s)->required();
    s->add_option("--u1", u1_s, "Order of the first base orbifold");
    s->add_option("--u2", u2_s, "Order of the second base orbifold");
    bind(s, [&] {
      const bool ok = join_smoothness({parse_int(k1_s), parse_int(k2_s), parse_int(u1_s), parse_int(u2_s)});
      return Result{{{"smooth", ok}}, ok ? kOk : kFalse, true};
    });
  }
  {
    auto* s = join->add_subcommand("reduce", "(k1, k2) = m (k1', k2') with gcd(k1', k2') = 1");
    s->add_option("--k1", k1_s)->required();
    s->add_option("--k2", k2_s)->required();
    bind(s, [&] {
      const auto r = reduce_common_factor(parse_int(k1_s), parse_int(k2_s));
      return Result{{{"m", int_to_json(r.m)}, {"k1", int_to_json(r.k1)}, {"k2", int_to_json(r.k2)}}};
    });
  }
  {
    auto* s = join->add_subcommand("bound", "Lower bound n(w1) n(w2) on n_R of the join");
    s->add_option("--n1", n1_s)->required();
    s->add_option("--n2", n2_s)->required();
    bind(s, [&] {
      return Result{{{"n_R_lower_bound", int_to_json(bouquet_lower_bound(parse_int(n1_s), parse_int(n2_s)))}}, kOk, true};
    });
  }

  // ---- link
  auto* link = app.add_subcommand("link", "Weighted homogeneous hypersurface links");
  link->require_subcommand(1)->fallthrough();
  auto weighted = [&] { return WeightedLinkData(detail::ints(w_s), parse_int(d_s)); };
  {
    auto* s = link->add_subcommand("h0", "Number of monomials of weighted degree d");
    s->add_option("--w", w_s)->required();
    s->add_option("--d", d_s)->required();
    bind(s, [&] { return Result{{{"h0", int_to_json(h0_count(weighted()))}}, kOk, true}; });
  }
  {
    auto* s = link->add_subcommand("dimj", "Dimension of the family of transverse complex structures");
    s->add_option("--w", w_s)->required();
    s->add_option("--d", d_s)->required();
    bind(s, [&] { return Result{{{"dim_j", int_to_json(dim_transverse_complex_family(weighted()))}}, kOk, true}; });
  }
  {
    auto* s = link->add_subcommand("moduli", "Dimension of the moduli of transverse complex structures");
    s->add_option("--w", w_s)->required();
    s->add_option("--d", d_s)->required();
    s->add_option("--dim-aut", dim_aut_s, "Dimension of the automorphism group");
    bind(s, [&] { return Result{{{"dim_moduli", int_to_json(dim_moduli(weighted(), parse_int(dim_aut_s)))}}, kOk, true}; });
  }
  {
    auto* s = link->add_subcommand("brieskorn", "Weights and degree of sum z_i^{a_i}");
    s->add_option("--exponents", exps_s)->required();
    bind(s, [&] {
      const auto data = brieskorn_weights(detail::ints(exps_s));
      return Result{{{"degree", int_to_json(data.degree)}, {"weights", int_vector_to_json(data.weights)}}};
    });
  }
  {
    auto* s = link->add_subcommand("sylvester", "Sylvester's sequence a_k = a_0 ... a_{k-1} + 1");
    s->add_option("--len", len)->required();
    bind(s, [&] {
      if (len < 1) throw InvalidInput("--len must be >= 1");
      return Result{{{"sequence", int_vector_to_json(sylvester_sequence(static_cast<std::size_t>(len)))}}, kOk, true};
    });
  }
  {
    auto* s = link->add_subcommand("hypothesis", "2 w_i < d for all but at most one weight");
    s->add_option("--w", w_s)->required();
    s->add_option("--d", d_s)->required();
    bind(s, [&] {
      const auto h = whscomp_hypothesis(weighted());
      return Result{{{"holds", h.holds}, {"violating", h.violating}}, h.holds ? kOk : kFalse};
    });
  }

  // ---- polygon
  auto* polygon = app.add_subcommand("polygon", "Polygon spaces Pol(alpha)");
  polygon->require_subcommand(1)->fallthrough();
  {
    auto* s = polygon->add_subcommand("check", "Genericity of the side lengths");
    s->add_option("--alpha", alpha_s)->required();
    bind(s, [&] {
      const PolygonSpaceData p(parse_rational_list(alpha_s));
      const bool g = epsilon_generic(p);
      return Result{{{"generic", g},
                     {"sides", p.sides()},
                     {"dimension", polygon_dimension(static_cast<long long>(p.sides()))}},
                    g ? kOk : kFalse};
    });
  }
  {
    auto* s = polygon->add_subcommand("dim", "Real dimension 2(m - 3)");
    s->add_option("--m", m_val)->required();
    bind(s, [&] { return Result{{{"dimension", polygon_dimension(m_val)}}, kOk, true}; });
  }
  {
    auto* s = polygon->add_subcommand("tower", "Pol(1,1,2,2,3,3,3,1/2,...,1/2^m)");
    s->add_option("--m", m_val)->required();
    bind(s, [&] {
      const auto t = hausmann_tolman_tower(m_val);
      json alpha = json::array();
      for (const auto& a : t.data.alpha) alpha.push_back(rational_to_json(a));
      return Result{{{"alpha", alpha},
                     {"dimension", t.dimension},
                     {"torus_dims", t.torus_dims},
                     {"generic", t.generic}},
                    t.generic ? kOk : kFalse};
    });
  }

  // ---- bundle
  auto* bundle = app.add_subcommand("bundle", "Circle bundles: Gysin Betti numbers and c_1");
  bundle->require_subcommand(1)->fallthrough();
  {
    auto* s = bundle->add_subcommand("gysin", "Betti numbers of a circle bundle");
    s->add_option("--base", base_s, "b_0, b_2, ..., b_2q of the base")->required();
    s->add_option("--ranks", ranks_s, "Ranks of cup with the Euler class (a prefix with --duality)")->required();
    s->add_flag("--duality", duality, "Complete the ranks by duality");
    bind(s, [&] {
      GysinInput in{detail::small_ints(base_s), detail::small_ints(ranks_s)};
      if (duality) in.cup_ranks = duality_complete_ranks(in.base_betti, in.cup_ranks);
      return Result{{{"betti", gysin_betti(in)}}, kOk, true};
    });
  }
  {
    auto* s = bundle->add_subcommand("ranks", "Duality completion of cup ranks");
    s->add_option("--base", base_s)->required();
    s->add_option("--prefix", prefix_s)->required();
    bind(s, [&] {
      return Result{{{"ranks", duality_complete_ranks(detail::small_ints(base_s), detail::small_ints(prefix_s))}}, kOk, true};
    });
  }
  {
    auto* s = bundle->add_subcommand("c1", "Reduce a class modulo a primitive class omega");
    s->add_option("--class", class_s)->required();
    s->add_option("--omega", omega_s)->required();
    bind(s, [&] {
      const auto q = quotient_class_reduce(detail::int_vec(class_s), detail::int_vec(omega_s));
      return Result{{{"representative", int_vector_to_json(q.representative)},
                     {"shift", int_to_json(q.shift)},
                     {"quotient_coordinates", int_vector_to_json(q.coordinates)},
                     {"zero", q.is_zero},
                     {"even", q.is_even}}};
    });
  }

  // ---- check
  auto* check = app.add_subcommand("check", "Numerical verification of contact metric identities");
  check->require_subcommand(1)->fallthrough();
  {
    auto* s = check->add_subcommand("structure", "Verify the identities on a catalog entry");
    s->add_option("--id", id_s, "t3, overtwisted_s3 or unit_sphere_bundle")->required();
    s->add_option("--k", param, "Parameter k");
    s->add_option("--n", n_param, "Parameter n (sphere bundle)");
    s->add_option("--samples", samples);
    s->add_option("--tol", tol);
    s->add_option("--fd-tol", fd_tol);
    s->add_option("--seed", seed);
    bind(s, [&] {
      const auto id = parse_structure_id(id_s);
      long long p = n_param >= 0 ? n_param : param;
      if (p < 0) p = id == StructureId::OvertwistedS3 ? 0 : 1;
      const auto rep = verify_identities(make_entry(id, p), samples, seed, tol, fd_tol);
      std::ostringstream table;
      table << rep.entry << "  samples " << rep.samples << "  seed " << rep.seed << "  tol " << rep.tol << "\n";
      for (const auto& c : rep.checks)
        table << std::left << std::setw(28) << c.name << (c.pass ? "pass" : "FAIL") << "  " << c.residual << "\n";
      table << (rep.all_pass() ? "all identities pass" : "identity failure") << "\n";
      return Result{detail::identity_report_json(rep), rep.all_pass() ? kOk : kFalse, false, table.str()};
    });
  }

  // ---- census
  auto* census = app.add_subcommand("census", "Recorded counts of maximal tori and bouquets");
  census->require_subcommand(1)->fallthrough();
  {
    auto* s = census->add_subcommand("list", "List census records");
    s->add_option("--file", census_file);
    bind(s, [&] {
      const auto recs = load_census(census_file);
      json arr = json::array();
      std::string table;
      for (const auto& r : recs) {
        arr.push_back(record_to_json(r));
        table += r.id + "  " + r.manifold + "  dim " + std::to_string(r.dimension) + "  n_R " + r.n_R.str();
        if (r.bouquet_size) table += "  bouquet " + r.bouquet_size->str();
        if (r.bouquet_cone_dims) table += "  cone dims " + join_list(*r.bouquet_cone_dims);
        table += "\n";
      }
      return Result{arr, kOk, false, table};
    });
  }
  {
    auto* s = census->add_subcommand("check", "Check census records for consistency");
    s->add_option("--file", census_file);
    bind(s, [&] {
      const auto recs = load_census(census_file);
      json arr = json::array();
      std::string table;
      bool all = true;
      for (const auto& r : recs) {
        auto rep = check_record(r);
        const auto w = check_wzex_record(r);
        for (const auto& v : w.violations) rep.fail(v);
        all = all && rep.consistent;
        arr.push_back(detail::report_json(rep));
        table += r.id + "  " + (rep.consistent ? "consistent" : "VIOLATION");
        for (const auto& v : rep.violations) table += "  [" + v + "]";
        table += "\n";
      }
      return Result{json{{"records", arr}, {"all_consistent", all}}, all ? kOk : kFalse, false, table};
    });
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "usage: contact_tori <cone|join|link|polygon|bundle|check|census> <command> [options] (--help for details)\n";
    return kInvalid;
  }
  if (!action) {
    err << "error: no command given\n";
    return kInvalid;
  }

  try {
    const Result r = action();
    const bool table = format.empty() ? r.table_by_default : format == "table";
    if (table) out << (r.table ? *r.table : detail::render_table(r.value));
    else out << r.value.dump(2) << "\n";
    return r.exit;
  } catch (const NonPointedCone& e) {
    err << "error: " << e.what() << "\n";
    json basis = json::array();
    for (const auto& v : e.lineality_basis()) basis.push_back(int_vector_to_json(v));
    err << "lineality basis: " << basis.dump() << "\n";
    return kInvalid;
  } catch (const CapacityExceeded& e) {
    err << "capacity exceeded: " << e.what() << "\n";
    return kCapacity;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
}

}  // namespace contact_tori::cli
