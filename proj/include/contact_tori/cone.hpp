#pragma once

// Good rational polyhedral cones and labelled (Lerman-Tolman) polytopes.
//
// Convention: facet normals point inward, C = { y : <y, nu_i> >= 0 }. The
// outward normals p_i used for polytopes in the literature are stored
// negated; conversion happens only at the I/O boundary.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contact_tori/bigint.hpp"
#include "contact_tori/error.hpp"
#include "contact_tori/lattice.hpp"

namespace contact_tori {

inline constexpr std::size_t kMaxFaceEnumerationFacets = 12;

/// Rational polyhedral cone in t* given by primitive inward facet normals.
class GoodCone {
 public:
  GoodCone(std::size_t ambient_rank, std::vector<IntVector> facet_normals)
      : ambient_rank_(ambient_rank), normals_(std::move(facet_normals)) {
    if (ambient_rank_ < 2) throw InvalidInput("cone ambient rank must be at least 2");
    if (normals_.empty()) throw InvalidInput("cone needs at least one facet normal");
    for (std::size_t i = 0; i < normals_.size(); ++i) {
      const auto& v = normals_[i];
      if (v.size() != ambient_rank_)
        throw InvalidInput("facet normal " + std::to_string(i) + " has length " +
                           std::to_string(v.size()) + ", expected " + std::to_string(ambient_rank_));
      if (is_zero(v)) throw InvalidInput("facet normal " + std::to_string(i) + " is zero");
      if (vector_gcd(v) != 1)
        throw InvalidInput("facet normal " + std::to_string(i) + " is not primitive");
      for (std::size_t j = 0; j < i; ++j)
        if (normals_[j] == v) throw InvalidInput("facet normals " + std::to_string(j) + " and " +
                                                 std::to_string(i) + " coincide");
    }
  }

  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  std::size_t facet_count() const noexcept { return normals_.size(); }
  const std::vector<IntVector>& facet_normals() const noexcept { return normals_; }
  const IntVector& normal(std::size_t i) const { return normals_[i]; }

  /// N x (n+1) matrix whose rows are the normals.
  IntMatrix normal_matrix() const { return IntMatrix::from_rows(normals_, ambient_rank_); }

  /// Image under a lattice automorphism acting on t: nu -> L nu.
  GoodCone transformed(const IntMatrix& l) const {
    std::vector<IntVector> out;
    out.reserve(normals_.size());
    for (const auto& v : normals_) out.push_back(l * v);
    return GoodCone(ambient_rank_, std::move(out));
  }

  friend bool operator==(const GoodCone&, const GoodCone&) = default;

 private:
  std::size_t ambient_rank_;
  std::vector<IntVector> normals_;
};

/// Raised when the normals do not span: the cone contains a line.
class NonPointedCone : public InvalidInput {
 public:
  NonPointedCone(const std::string& what, std::vector<IntVector> lineality)
      : InvalidInput(what), lineality_(std::move(lineality)) {}
  const std::vector<IntVector>& lineality_basis() const noexcept { return lineality_; }

 private:
  std::vector<IntVector> lineality_;
};

// ---------------------------------------------------------------------------
// Extreme rays by double description

namespace detail {

inline bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline void sort_unique(std::vector<IntVector>& vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

// Rays of { y : A y >= 0 }, A of full column rank.
inline std::vector<IntVector> double_description(const std::vector<IntVector>& a, std::size_t dim) {
  // Seed with a simplicial cone on `dim` independent rows.
  std::vector<std::size_t> basis_rows;
  std::vector<IntVector> chosen;
  for (std::size_t i = 0; i < a.size() && basis_rows.size() < dim; ++i) {
    chosen.push_back(a[i]);
    if (rank(chosen, dim) == chosen.size())
      basis_rows.push_back(i);
    else
      chosen.pop_back();
  }

  std::vector<IntVector> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<RationalVector> sys(dim, RationalVector(dim));
    RationalVector rhs(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) sys[r][c] = Rational(chosen[r][c]);
      rhs[r] = (r == j) ? 1 : 0;
    }
    const auto x = solve_unique(std::move(sys), std::move(rhs));
    Int den = 1;
    for (const auto& q : *x) den = lcm(den, denominator(q));
    IntVector v(dim);
    for (std::size_t c = 0; c < dim; ++c) v[c] = numerator((*x)[c] * den);
    rays.push_back(make_primitive(std::move(v)));
  }

  std::vector<std::size_t> processed = basis_rows;
  std::vector<bool> done(a.size(), false);
  for (auto i : basis_rows) done[i] = true;

  for (std::size_t k = 0; k < a.size(); ++k) {
    if (done[k]) continue;
    const IntVector& row = a[k];
    std::vector<IntVector> pos, zero, neg;
    std::vector<Int> pos_val, neg_val;
    for (auto& r : rays) {
      Int s = dot(row, r);
      if (s > 0) {
        pos.push_back(r);
        pos_val.push_back(s);
      } else if (s < 0) {
        neg.push_back(r);
        neg_val.push_back(s);
      } else {
        zero.push_back(r);
      }
    }
    std::vector<IntVector> next = pos;
    next.insert(next.end(), zero.begin(), zero.end());
    for (std::size_t p = 0; p < pos.size(); ++p)
      for (std::size_t q = 0; q < neg.size(); ++q) {
        // Adjacent iff the constraints tight at both have rank dim - 2.
        std::vector<IntVector> tight;
        for (auto i : processed)
          if (dot(a[i], pos[p]) == 0 && dot(a[i], neg[q]) == 0) tight.push_back(a[i]);
        if (tight.size() + 2 < dim || rank(tight, dim) != dim - 2) continue;
        IntVector comb(dim);
        for (std::size_t c = 0; c < dim; ++c) comb[c] = pos_val[p] * neg[q][c] - neg_val[q] * pos[p][c];
        next.push_back(make_primitive(std::move(comb)));
      }
    rays = std::move(next);
    processed.push_back(k);
    done[k] = true;
  }
  sort_unique(rays);
  return rays;
}

}  // namespace detail

/// Extreme rays of C together with their incidence against the facets.
struct ConeGeometry {
  std::vector<IntVector> rays;              // primitive, lexicographic
  std::vector<std::vector<bool>> incident;  // incident[r][f]: <ray r, nu_f> == 0
};

/// Validates a cone (pointed, full-dimensional, irredundant) and returns its rays.
inline ConeGeometry analyze_cone(const GoodCone& c) {
  const std::size_t dim = c.ambient_rank();
  const auto m = c.normal_matrix();
  if (rank(m) < dim)
    throw NonPointedCone("facet normals do not span; the cone contains a line", kernel_basis(m));

  ConeGeometry g;
  g.rays = detail::double_description(c.facet_normals(), dim);
  if (g.rays.empty() || rank(g.rays, dim) < dim)
    throw InvalidInput("degenerate cone: empty interior");
  for (const auto& r : g.rays) {
    std::vector<bool> row(c.facet_count());
    for (std::size_t f = 0; f < c.facet_count(); ++f) row[f] = dot(r, c.normal(f)) == 0;
    g.incident.push_back(std::move(row));
  }
  for (std::size_t f = 0; f < c.facet_count(); ++f) {
    std::vector<IntVector> on_facet;
    for (std::size_t r = 0; r < g.rays.size(); ++r)
      if (g.incident[r][f]) on_facet.push_back(g.rays[r]);
    if (rank(on_facet, dim) != dim - 1)
      throw InvalidInput("facet normal " + std::to_string(f) + " does not define a facet");
  }
  return g;
}

/// Generators of the dual cone description: the primitive extreme rays of C,
/// which are exactly the inward facet normals of C* (so applying this twice
/// returns the original normals). Sorted lexicographically.
inline std::vector<IntVector> dual_cone(const GoodCone& c) { return analyze_cone(c).rays; }

inline GoodCone dual_cone_as_cone(const GoodCone& c) {
  return GoodCone(c.ambient_rank(), dual_cone(c));
}

// ---------------------------------------------------------------------------
// Goodness

struct GoodnessReport {
  bool good = true;
  std::vector<std::vector<std::size_t>> failing_faces;  // facet index sets
  std::size_t faces_checked = 0;
};

inline GoodnessReport check_good(const GoodCone& c) {
  const std::size_t n_facets = c.facet_count();
  if (n_facets > kMaxFaceEnumerationFacets)
    throw CapacityExceeded("face enumeration supports at most " +
                           std::to_string(kMaxFaceEnumerationFacets) + " facets, got " +
                           std::to_string(n_facets));
  const std::size_t dim = c.ambient_rank();
  const auto geom = analyze_cone(c);

  GoodnessReport report;
  const std::size_t subsets = std::size_t{1} << n_facets;
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    std::vector<IntVector> face_rays;
    for (std::size_t r = 0; r < geom.rays.size(); ++r) {
      bool on = true;
      for (std::size_t f = 0; f < n_facets && on; ++f)
        if ((mask >> f & 1) && !geom.incident[r][f]) on = false;
      if (on) face_rays.push_back(geom.rays[r]);
    }
    if (face_rays.empty()) continue;  // apex

    // Only closed facet sets name a face uniquely.
    std::size_t closure = 0;
    for (std::size_t f = 0; f < n_facets; ++f) {
      bool all = true;
      for (const auto& r : face_rays)
        if (dot(r, c.normal(f)) != 0) {
          all = false;
          break;
        }
      if (all) closure |= std::size_t{1} << f;
    }
    if (closure != mask) continue;

    const std::size_t codim = dim - rank(face_rays, dim);
    std::vector<IntVector> normals;
    std::vector<std::size_t> idx;
    for (std::size_t f = 0; f < n_facets; ++f)
      if (mask >> f & 1) {
        normals.push_back(c.normal(f));
        idx.push_back(f);
      }
    ++report.faces_checked;
    bool ok = normals.size() == codim;
    if (ok)
      for (const auto& d : smith_diagonal(IntMatrix::from_rows(normals, dim)))
        if (d != 1) {
          ok = false;
          break;
        }
    if (!ok) {
      report.good = false;
      report.failing_faces.push_back(std::move(idx));
    }
  }
  std::sort(report.failing_faces.begin(), report.failing_faces.end());
  return report;
}

// ---------------------------------------------------------------------------
// Reeb vectors

inline bool interior_contains(const GoodCone& c, const RationalVector& xi) {
  if (xi.size() != c.ambient_rank())
    throw InvalidInput("vector length " + std::to_string(xi.size()) + " does not match ambient rank " +
                       std::to_string(c.ambient_rank()));
  for (const auto& r : analyze_cone(c).rays)
    if (dot(r, xi) <= 0) return false;
  return true;
}

struct PrimitiveReeb {
  IntVector generator;  // primitive lattice vector on the ray
  Rational scale;       // xi = scale * generator, scale > 0
};

inline PrimitiveReeb primitive_reeb(const RationalVector& xi) {
  if (xi.empty()) throw InvalidInput("empty vector");
  Int den = 1;
  for (const auto& q : xi) den = lcm(den, denominator(q));
  IntVector v(xi.size());
  for (std::size_t i = 0; i < xi.size(); ++i) v[i] = numerator(xi[i] * den);
  if (is_zero(v)) throw InvalidInput("zero vector has no primitive direction");
  const Int g = vector_gcd(v);
  for (auto& x : v) x /= g;
  return {std::move(v), Rational(g, den)};
}

// ---------------------------------------------------------------------------
// Labelled polytopes

struct LabelledFacet {
  IntVector normal;  // inward, primitive
  Rational offset;   // facet is <x, normal> + offset >= 0
  Int label = 1;     // m_i >= 1
};

/// Rational polytope { x : <x, u_i> + c_i >= 0 } with positive facet labels.
class LTPolytope {
 public:
  LTPolytope(std::size_t ambient_rank, std::vector<LabelledFacet> facets)
      : ambient_rank_(ambient_rank), facets_(std::move(facets)) {
    if (ambient_rank_ < 1) throw InvalidInput("polytope ambient rank must be at least 1");
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      const auto& f = facets_[i];
      if (f.normal.size() != ambient_rank_)
        throw InvalidInput("facet " + std::to_string(i) + " normal has wrong length");
      if (is_zero(f.normal)) throw InvalidInput("facet " + std::to_string(i) + " has zero normal");
      if (f.label < 1) throw InvalidInput("facet " + std::to_string(i) + " label must be >= 1");
    }
  }

  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  const std::vector<LabelledFacet>& facets() const noexcept { return facets_; }

 private:
  std::size_t ambient_rank_;
  std::vector<LabelledFacet> facets_;
};

namespace detail {

// Primitive integer vector on the ray of (u, c).
inline IntVector lift_facet(const LabelledFacet& f) {
  const Int den = denominator(f.offset);
  IntVector v;
  v.reserve(f.normal.size() + 1);
  for (const auto& x : f.normal) v.push_back(x * den);
  v.push_back(numerator(f.offset));
  return make_primitive(std::move(v));
}

}  // namespace detail

/// Vertices of a bounded full-dimensional polytope, lexicographic.
inline std::vector<RationalVector> polytope_vertices(const LTPolytope& p) {
  const std::size_t n = p.ambient_rank();
  std::vector<IntVector> lifted;
  for (const auto& f : p.facets()) lifted.push_back(detail::lift_facet(f));
  detail::sort_unique(lifted);
  if (rank(lifted, n + 1) < n + 1) throw InvalidInput("unbounded polytope");
  const auto rays = detail::double_description(lifted, n + 1);
  if (rays.empty() || rank(rays, n + 1) < n + 1)
    throw InvalidInput("polytope is empty or not full-dimensional");
  std::vector<RationalVector> verts;
  for (const auto& r : rays) {
    if (r[n] <= 0) throw InvalidInput("unbounded polytope");
    RationalVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Rational(r[i], r[n]);
    verts.push_back(std::move(v));
  }
  std::sort(verts.begin(), verts.end());
  return verts;
}

/// The cone { t P : t >= 0 } over a labelled polytope placed at height 1.
/// Each facet lifts to m_i * primitive(u_i, c_i); labels m_i > 1 make the
/// lifted normal non-primitive and are reported rather than rejected.
struct ConeCandidate {
  std::size_t ambient_rank = 0;
  std::vector<IntVector> normals;
  std::vector<std::size_t> non_primitive;  // facet indices with label > 1

  bool smooth() const { return non_primitive.empty(); }
  GoodCone to_cone() const {
    if (!smooth()) throw InvalidInput("lifted normals are not primitive (orbifold labels)");
    return GoodCone(ambient_rank, normals);
  }
};

inline ConeCandidate cone_over_polytope(const LTPolytope& p) {
  polytope_vertices(p);  // boundedness and full dimension
  ConeCandidate out;
  out.ambient_rank = p.ambient_rank() + 1;
  for (std::size_t i = 0; i < p.facets().size(); ++i) {
    const auto& f = p.facets()[i];
    IntVector v = detail::lift_facet(f);
    for (auto& x : v) x *= f.label;
    if (vector_gcd(v) != 1) out.non_primitive.push_back(i);
    out.normals.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reeb slices

struct ReebSlice {
  std::vector<RationalVector> vertices;  // lexicographic
  bool simple = true;
};

/// Polytope C ∩ { <y, xi> = 1 }, found from all n-subsets of facet
/// hyperplanes together with the slicing hyperplane.
inline ReebSlice reeb_slice(const GoodCone& c, const RationalVector& xi) {
  if (!interior_contains(c, xi)) throw InvalidInput("Reeb vector is not in the interior of the dual cone");
  const std::size_t dim = c.ambient_rank();
  const std::size_t n = dim - 1;
  const std::size_t n_facets = c.facet_count();
  if (n_facets > kMaxFaceEnumerationFacets)
    throw CapacityExceeded("slice enumeration supports at most " +
                           std::to_string(kMaxFaceEnumerationFacets) + " facets");

  ReebSlice slice;
  std::vector<std::size_t> pick(n);
  auto visit = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
    if (depth == n) {
      std::vector<RationalVector> sys;
      RationalVector rhs;
      for (auto f : pick) {
        RationalVector row(dim);
        for (std::size_t j = 0; j < dim; ++j) row[j] = Rational(c.normal(f)[j]);
        sys.push_back(std::move(row));
        rhs.push_back(0);
      }
      sys.push_back(xi);
      rhs.push_back(1);
      const auto y = solve_unique(std::move(sys), std::move(rhs));
      if (!y) return;
      for (const auto& nu : c.facet_normals())
        if (dot(nu, *y) < 0) return;
      slice.vertices.push_back(*y);
      return;
    }
    for (std::size_t f = start; f < n_facets; ++f) {
      pick[depth] = f;
      self(self, f + 1, depth + 1);
    }
  };
  visit(visit, 0, 0);
  std::sort(slice.vertices.begin(), slice.vertices.end());
  slice.vertices.erase(std::unique(slice.vertices.begin(), slice.vertices.end()), slice.vertices.end());
  for (const auto& v : slice.vertices) {
    std::size_t on = 0;
    for (const auto& nu : c.facet_normals())
      if (dot(nu, v) == 0) ++on;
    if (on != n) slice.simple = false;
  }
  return slice;
}

// ---------------------------------------------------------------------------
// Topology read off a good cone

struct ConeInvariants {
  std::size_t facet_count = 0;
  AbelianGroupStructure pi1;  // Z^{n+1} / span(normals)
  long long pi2_rank = 0;     // N - n - 1
  bool odd_betti_vanish = true;
};

inline ConeInvariants cone_invariants(const GoodCone& c) {
  const auto report = check_good(c);
  if (!report.good) throw InvalidInput("cone is not good");
  ConeInvariants inv;
  inv.facet_count = c.facet_count();
  inv.pi1 = quotient_group(c.normal_matrix(), c.ambient_rank());
  if (!inv.pi1.finite()) throw InvalidInput("fundamental group has positive free rank");
  inv.pi2_rank = static_cast<long long>(c.facet_count()) - static_cast<long long>(c.ambient_rank());
  return inv;
}

}  // namespace contact_tori
