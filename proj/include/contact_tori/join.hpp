#pragma once

// The (k1, k2)-join at the level of orbifold Boothby-Wang data.
//
// The join M1 *_{k1,k2} M2 is the quotient of M1 x M2 by the circle acting
// as (x, y) -> (e^{i k2 t} x, e^{-i k1 t} y); it is never computed here.
// For toric factors the join's moment data is the product of the scaled
// polytopes (k1 P1) x (k2 P2), coned off at height one.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "contact_tori/bigint.hpp"
#include "contact_tori/cone.hpp"
#include "contact_tori/error.hpp"

namespace contact_tori {

struct JoinSpec {
  Int k1 = 1, k2 = 1;
  Int upsilon1 = 1, upsilon2 = 1;  // orders of the base orbifolds

  void validate() const {
    if (k1 < 1 || k2 < 1) throw InvalidInput("join weights k1, k2 must be >= 1");
    if (upsilon1 < 1 || upsilon2 < 1) throw InvalidInput("orbifold orders must be >= 1");
  }
};

/// The join is a smooth manifold when gcd(u1 k2, u2 k1) = 1.
inline bool join_smoothness(const JoinSpec& s) {
  s.validate();
  return gcd(s.upsilon1 * s.k2, s.upsilon2 * s.k1) == 1;
}

struct CommonFactor {
  Int m, k1, k2;  // (k1, k2) = m * (k1', k2'), gcd(k1', k2') = 1
};

/// M1 *_{k1,k2} M2 is (M1 *_{k1',k2'} M2) / Z_m.
inline CommonFactor reduce_common_factor(const Int& k1, const Int& k2) {
  if (k1 < 1 || k2 < 1) throw InvalidInput("join weights must be >= 1");
  const Int m = gcd(k1, k2);
  return {m, k1 / m, k2 / m};
}

inline LTPolytope scale_polytope(const LTPolytope& p, const Int& k) {
  if (k < 1) throw InvalidInput("scale factor must be >= 1");
  std::vector<LabelledFacet> fs = p.facets();
  for (auto& f : fs) f.offset *= Rational(k);
  return LTPolytope(p.ambient_rank(), std::move(fs));
}

inline LTPolytope product_polytope(const LTPolytope& a, const LTPolytope& b) {
  const std::size_t na = a.ambient_rank(), nb = b.ambient_rank();
  std::vector<LabelledFacet> fs;
  for (const auto& f : a.facets()) {
    LabelledFacet g = f;
    g.normal.resize(na + nb, Int(0));
    fs.push_back(std::move(g));
  }
  for (const auto& f : b.facets()) {
    LabelledFacet g = f;
    g.normal.assign(na, Int(0));
    g.normal.insert(g.normal.end(), f.normal.begin(), f.normal.end());
    fs.push_back(std::move(g));
  }
  return LTPolytope(na + nb, std::move(fs));
}

/// Moment polytope data of the join of two toric pieces: (k1 P1) x (k2 P2).
inline LTPolytope join_polytope(const LTPolytope& p1, const Int& k1, const LTPolytope& p2, const Int& k2) {
  return product_polytope(scale_polytope(p1, k1), scale_polytope(p2, k2));
}

/// The segment [0, 1] with unit labels: moment polytope of CP^1 under S^3.
inline LTPolytope unit_interval() {
  return LTPolytope(1, {LabelledFacet{{Int(1)}, Rational(0), 1}, LabelledFacet{{Int(-1)}, Rational(1), 1}});
}

/// Cone of S^3 *_{k1,k2} S^3 (Boothby-Wang over CP^1 x CP^1 with k1 w1 + k2 w2).
/// Normals in facet order: x1 >= 0, k1 - x1 >= 0, x2 >= 0, k2 - x2 >= 0.
inline GoodCone sphere_join_cone(const Int& k1, const Int& k2) {
  if (k1 < 1 || k2 < 1) throw InvalidInput("join weights must be >= 1");
  if (gcd(k1, k2) != 1)
    throw InvalidInput("gcd(k1, k2) = " + gcd(k1, k2).str() +
                       " != 1; reduce with reduce_common_factor first");
  return cone_over_polytope(join_polytope(unit_interval(), k1, unit_interval(), k2)).to_cone();
}

/// Lower bound n_R >= n(w1) n(w2) on conjugacy classes of Reeb-type maximal tori.
inline Int bouquet_lower_bound(const Int& n1, const Int& n2) {
  if (n1 < 0 || n2 < 0) throw InvalidInput("torus class counts must be non-negative");
  return n1 * n2;
}

enum class WzexFamily { D, TildeD };

enum class ManifoldId { S2xS3, XInfinity };

inline std::string to_string(ManifoldId m) { return m == ManifoldId::S2xS3 ? "S2xS3" : "X_infinity"; }

struct WzexRecord {
  WzexFamily family;
  Int a, b;                 // (k1, k2) for D, (l, e) for TildeD
  Int bouquet_size;         // N
  ManifoldId manifold;
  Int c1_invariant;         // 2(k1 - k2) for D, l - 2e for TildeD
};

/// Bouquet sizes N(k1,k2) = ceil(k1/k2) and N(l,e) = ceil(e/(l-e)) of the two
/// families of contact structures on S^3-bundles over S^2.
inline WzexRecord wzex_family(WzexFamily family, const Int& a, const Int& b) {
  if (!(a > b && b > 0))
    throw InvalidInput(family == WzexFamily::D ? "family D needs k1 > k2 > 0"
                                               : "family TildeD needs l > e > 0");
  if (family == WzexFamily::D) {
    if (gcd(a, b) != 1) throw InvalidInput("family D needs gcd(k1, k2) = 1");
    return {family, a, b, ceil_div(a, b), ManifoldId::S2xS3, 2 * (a - b)};
  }
  const ManifoldId m = (a % 2 == 0) ? ManifoldId::S2xS3 : ManifoldId::XInfinity;
  return {family, a, b, ceil_div(b, a - b), m, a - 2 * b};
}

}  // namespace contact_tori
