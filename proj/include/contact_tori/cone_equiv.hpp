#pragma once

// GL(n+1, Z)-equivalence of good cones.
//
// A lattice automorphism L acts on normals by nu -> L nu, i.e. from the left
// on the (n+1) x N matrix X whose columns are the normals. Row-style HNF is a
// complete invariant of the left orbit of X, so minimizing HNF(X P) over all
// column permutations P gives a canonical form for the cone.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "contact_tori/cone.hpp"
#include "contact_tori/lattice.hpp"

namespace contact_tori {

inline constexpr std::size_t kMaxCanonicalFacets = 8;

struct CanonicalForm {
  IntMatrix form;                         // lexicographically minimal HNF
  std::vector<std::size_t> permutation;   // column j of `form` comes from facet permutation[j]
  IntMatrix transform;                    // unimodular U with U * X_perm = form
};

inline CanonicalForm canonicalize(const GoodCone& c) {
  if (c.facet_count() > kMaxCanonicalFacets)
    throw CapacityExceeded("canonical form supports at most " + std::to_string(kMaxCanonicalFacets) +
                           " facets, got " + std::to_string(c.facet_count()));
  if (!check_good(c).good) throw InvalidInput("cone is not good");

  const std::size_t dim = c.ambient_rank();
  const std::size_t n = c.facet_count();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  std::optional<CanonicalForm> best;
  IntMatrix x(dim, n);
  do {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < dim; ++i) x(i, j) = c.normal(perm[j])[i];
    auto hf = hermite_normal_form(x);
    if (!best || hf.h < best->form) best = CanonicalForm{std::move(hf.h), perm, std::move(hf.u)};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

inline IntMatrix canonical_form(const GoodCone& c) { return canonicalize(c).form; }

/// True iff { L nu : nu in normals(a) } == normals(b) as sets.
inline bool maps_normals_onto(const IntMatrix& l, const GoodCone& a, const GoodCone& b) {
  if (a.facet_count() != b.facet_count() || l.rows() != b.ambient_rank() || l.cols() != a.ambient_rank())
    return false;
  if (abs(determinant(l)) != 1) return false;
  std::vector<IntVector> image, target = b.facet_normals();
  for (const auto& v : a.facet_normals()) image.push_back(l * v);
  detail::sort_unique(image);
  detail::sort_unique(target);
  return image == target;
}

struct Equivalence {
  bool equivalent = false;
  std::optional<IntMatrix> witness;  // L in GL(n+1, Z) with L(normals(c1)) = normals(c2)
};

inline Equivalence are_equivalent(const GoodCone& c1, const GoodCone& c2) {
  if (c1.ambient_rank() != c2.ambient_rank())
    throw InvalidInput("cones live in different ambient ranks");
  if (c1.facet_count() != c2.facet_count()) {
    // Still validate both inputs.
    for (const auto* c : {&c1, &c2})
      if (!check_good(*c).good) throw InvalidInput("cone is not good");
    return {};
  }
  // Invariants are a cheap necessary condition.
  const auto i1 = cone_invariants(c1), i2 = cone_invariants(c2);
  if (!(i1.pi1 == i2.pi1) || i1.pi2_rank != i2.pi2_rank) return {};

  const auto k1 = canonicalize(c1), k2 = canonicalize(c2);
  if (k1.form != k2.form) return {};
  // U1 X1 P1 = H = U2 X2 P2  =>  L = U2^{-1} U1 carries columns of X1 to X2.
  IntMatrix l = unimodular_inverse(k2.transform) * k1.transform;
  if (!maps_normals_onto(l, c1, c2))
    throw std::logic_error("canonical forms agree but the reconstructed witness fails");
  return {true, std::move(l)};
}

}  // namespace contact_tori
