#pragma once

// Polygon spaces Pol(alpha), the degree-4 part of the heptagon space's
// cohomology ring, and Betti numbers of circle bundles over bases with no odd
// cohomology.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contact_tori/bigint.hpp"
#include "contact_tori/error.hpp"
#include "contact_tori/lattice.hpp"

namespace contact_tori {

inline constexpr std::size_t kMaxGenericityLength = 40;

/// Side lengths of closed m-gons in R^3 modulo SO(3).
struct PolygonSpaceData {
  std::vector<Rational> alpha;

  explicit PolygonSpaceData(std::vector<Rational> a) : alpha(std::move(a)) {
    if (alpha.size() < 3) throw InvalidInput("polygon spaces need at least 3 sides");
    for (const auto& x : alpha)
      if (x <= 0) throw InvalidInput("side lengths must be positive");
  }
  std::size_t sides() const noexcept { return alpha.size(); }
};

namespace detail {

inline std::vector<Int> subset_sums(const std::vector<Int>& xs) {
  std::vector<Int> sums{0};
  for (const auto& x : xs) {
    const std::size_t n = sums.size();
    sums.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) sums.push_back(sums[i] + x);
  }
  std::sort(sums.begin(), sums.end());
  return sums;
}

}  // namespace detail

/// True iff sum eps_i alpha_i = 0 has no solution with eps_i = ±1. A signed
/// sum vanishes iff some subset sums to half the total, which is searched by
/// meeting in the middle over the two halves of alpha.
inline bool epsilon_generic(const PolygonSpaceData& p) {
  if (p.sides() > kMaxGenericityLength)
    throw CapacityExceeded("genericity check supports at most " + std::to_string(kMaxGenericityLength) +
                           " sides");
  Int den = 1;
  for (const auto& a : p.alpha) den = lcm(den, denominator(a));
  std::vector<Int> ints;
  Int total = 0;
  for (const auto& a : p.alpha) {
    ints.push_back(numerator(a * den));
    total += ints.back();
  }
  if (total % 2 != 0) return true;
  const Int target = total / 2;
  const std::size_t half = ints.size() / 2;
  const auto left = detail::subset_sums(std::vector<Int>(ints.begin(), ints.begin() + static_cast<std::ptrdiff_t>(half)));
  const auto right = detail::subset_sums(std::vector<Int>(ints.begin() + static_cast<std::ptrdiff_t>(half), ints.end()));
  for (const auto& s : right)
    if (std::binary_search(left.begin(), left.end(), Int(target - s))) return false;
  return true;
}

/// Real dimension 2(m - 3) of Pol(alpha) for generic alpha.
inline long long polygon_dimension(long long m) {
  if (m < 3) throw InvalidInput("polygon spaces need m >= 3");
  return 2 * (m - 3);
}

struct TowerLevel {
  PolygonSpaceData data;
  std::array<long long, 3> torus_dims;  // Hamiltonian maximal tori m+2, m+3, m+4
  long long dimension = 0;              // 2(m + 4)
  bool generic = false;
};

/// Pol(1,1,2,2,3,3,3, 1/2, ..., 1/2^m).
inline TowerLevel hausmann_tolman_tower(long long m) {
  if (m < 0) throw InvalidInput("tower index must be non-negative");
  if (m > 20) throw CapacityExceeded("tower index is capped at 20");
  std::vector<Rational> alpha{1, 1, 2, 2, 3, 3, 3};
  Rational x = 1;
  for (long long i = 0; i < m; ++i) {
    x /= 2;
    alpha.push_back(x);
  }
  TowerLevel t{PolygonSpaceData(std::move(alpha)), {m + 2, m + 3, m + 4}, 0, false};
  t.dimension = polygon_dimension(static_cast<long long>(t.data.sides()));
  t.generic = epsilon_generic(t.data);
  return t;
}

// ---------------------------------------------------------------------------
// Degree-4 algebra of a ring generated in degree 2

/// Coordinates on Sym^2 of the degree-2 generators: monomial X_i X_j (i <= j)
/// sits at index i*g - i(i-1)/2 + (j - i).
inline std::size_t sym_index(std::size_t g, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return i * g - i * (i - 1) / 2 + (j - i);
}

inline std::size_t sym_dimension(std::size_t g) { return g * (g + 1) / 2; }

/// (sum a_i X_i)(sum b_j X_j) in Sym^2 coordinates.
inline IntVector sym_product(const IntVector& a, const IntVector& b) {
  const std::size_t g = a.size();
  IntVector out(sym_dimension(g));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) out[sym_index(g, i, j)] += a[i] * b[j];
  return out;
}

struct GradedRingPresentation {
  std::vector<std::string> gen_names;
  std::vector<IntVector> relations4;   // in Sym^2 coordinates
  std::optional<long long> target_betti4;
  IntVector omega;                     // class of the symplectic form, if known
  IntVector first_chern;               // c_1, if known

  std::size_t generators() const noexcept { return gen_names.size(); }

  IntVector generator(std::size_t i) const {
    IntVector e(generators());
    e[i] = 1;
    return e;
  }

  /// Appends caller-supplied relations (e.g. a completion of the ideal).
  GradedRingPresentation with_relations(const std::vector<IntVector>& extra) const {
    GradedRingPresentation p = *this;
    for (const auto& r : extra) {
      if (r.size() != sym_dimension(generators())) throw InvalidInput("relation vector has wrong length");
      p.relations4.push_back(r);
    }
    return p;
  }
};

/// H^*(Pol(1,1,2,2,3,3,3)) in degrees <= 4 as far as the listed quadratic
/// relations go; generators R, V1, ..., V6.
inline GradedRingPresentation heptagon_presentation() {
  const std::size_t g = 7;
  GradedRingPresentation p;
  p.gen_names = {"R", "V1", "V2", "V3", "V4", "V5", "V6"};
  auto e = [&](std::size_t i) { return p.generator(i); };
  auto mono = [&](std::size_t i, std::size_t j) { return sym_product(e(i), e(j)); };
  auto plus = [](IntVector a, const IntVector& b, long long s = 1) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += s * b[k];
    return a;
  };
  // V_i^2 + R V_i
  for (std::size_t i = 1; i <= 6; ++i) p.relations4.push_back(plus(mono(i, i), mono(0, i)));
  // V4^2 + V5^2 + V6^2 - R^2
  p.relations4.push_back(plus(plus(plus(mono(4, 4), mono(5, 5)), mono(6, 6)), mono(0, 0), -1));
  for (auto [i, j] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}})
    p.relations4.push_back(mono(i, j));
  (void)g;
  p.target_betti4 = 15;  // Poincaré polynomial 1 + 7t^2 + 15t^4 + 7t^6 + t^8
  p.omega = to_int_vector({9, 2, 2, 4, 4, 6, 6});
  p.first_chern = to_int_vector({5, 2, 2, 2, 2, 2, 2});
  return p;
}

/// Rank of the listed degree-4 relations inside Sym^2.
inline std::size_t relation_rank(const GradedRingPresentation& p) {
  return rank(p.relations4, sym_dimension(p.generators()));
}

struct CupCheck {
  bool injective = false;  // images independent and meeting the relations only in 0
  std::size_t rank = 0;    // rank of omega * H^2 modulo the listed relations
};

/// Necessary condition for injectivity of (cup omega): H^2 -> H^4, relative
/// to the listed relations only.
inline CupCheck cup_injectivity_check(const GradedRingPresentation& p, const IntVector& omega) {
  const std::size_t g = p.generators();
  if (omega.size() != g) throw InvalidInput("omega has wrong length");
  const std::size_t dim = sym_dimension(g);
  std::vector<IntVector> joint = p.relations4;
  const std::size_t base = rank(joint, dim);
  for (std::size_t j = 0; j < g; ++j) joint.push_back(sym_product(omega, p.generator(j)));
  CupCheck out;
  out.rank = rank(joint, dim) - base;
  out.injective = out.rank == g;
  return out;
}

// ---------------------------------------------------------------------------
// Circle bundles

/// Even Betti numbers of the base and ranks r_k of (cup e): H^{2k} -> H^{2k+2}.
struct GysinInput {
  std::vector<long long> base_betti;  // b_0, b_2, ..., b_{2q}
  std::vector<long long> cup_ranks;   // r_0, ..., r_{q-1}

  void validate() const {
    if (base_betti.empty()) throw InvalidInput("base Betti list is empty");
    const std::size_t q = base_betti.size() - 1;
    if (cup_ranks.size() != q)
      throw InvalidInput("expected " + std::to_string(q) + " cup ranks, got " + std::to_string(cup_ranks.size()));
    for (auto b : base_betti)
      if (b < 0) throw InvalidInput("negative Betti number");
    for (std::size_t k = 0; k < q; ++k) {
      const long long r = cup_ranks[k];
      if (r < 0 || r > std::min(base_betti[k], base_betti[k + 1]))
        throw InvalidInput("cup rank r_" + std::to_string(k) + " = " + std::to_string(r) +
                           " outside [0, min(b_" + std::to_string(2 * k) + ", b_" + std::to_string(2 * k + 2) + ")]");
    }
  }
};

/// Betti numbers b_0 .. b_{2q+1} of the total space:
/// b_{2k} = b_{2k}(B) - r_{k-1} (cokernel), b_{2k+1} = b_{2k}(B) - r_k (kernel).
inline std::vector<long long> gysin_betti(const GysinInput& in) {
  in.validate();
  const std::size_t q = in.base_betti.size() - 1;
  auto r = [&](long long k) -> long long {
    return (k < 0 || k >= static_cast<long long>(q)) ? 0 : in.cup_ranks[static_cast<std::size_t>(k)];
  };
  std::vector<long long> out;
  for (std::size_t k = 0; k <= q; ++k) {
    const auto kk = static_cast<long long>(k);
    out.push_back(in.base_betti[k] - r(kk - 1));
    out.push_back(in.base_betti[k] - r(kk));
  }
  return out;
}

/// Fills r_k from a prefix using the duality symmetry r_{q-1-k} = r_k.
inline std::vector<long long> duality_complete_ranks(const std::vector<long long>& base_betti,
                                                     const std::vector<long long>& prefix) {
  if (base_betti.empty()) throw InvalidInput("base Betti list is empty");
  if (!std::equal(base_betti.begin(), base_betti.end(), base_betti.rbegin()))
    throw InvalidInput("base Betti numbers are not palindromic");
  const std::size_t q = base_betti.size() - 1;
  if (prefix.size() > q) throw InvalidInput("more prescribed ranks than maps");
  std::vector<long long> ranks(q);
  for (std::size_t k = 0; k < q; ++k) {
    const std::size_t mirror = q - 1 - k;
    if (k < prefix.size()) {
      ranks[k] = prefix[k];
      if (mirror < prefix.size() && prefix[mirror] != prefix[k])
        throw InvalidInput("prescribed r_" + std::to_string(k) + " = " + std::to_string(prefix[k]) +
                           " conflicts with r_" + std::to_string(mirror) + " = " + std::to_string(prefix[mirror]));
    } else if (mirror < prefix.size()) {
      ranks[k] = prefix[mirror];
    } else {
      throw InvalidInput("prefix too short to determine r_" + std::to_string(k));
    }
  }
  return ranks;
}

// ---------------------------------------------------------------------------
// Classes modulo a primitive class

struct QuotientClass {
  IntVector representative;  // cls - t * omega
  Int shift;                 // t
  IntVector coordinates;     // image in Z^g / Z omega ~ Z^{g-1}
  bool is_zero = false;
  bool is_even = false;      // divisible by 2 in the quotient (spin test for c_1)
};

/// Image of `cls` in Z^g / Z omega. The representative puts the coordinate at
/// omega's first nonzero index p into (-|omega_p|/2, |omega_p|/2].
inline QuotientClass quotient_class_reduce(const IntVector& cls, const IntVector& omega) {
  if (cls.size() != omega.size()) throw InvalidInput("class and omega have different lengths");
  if (omega.empty() || is_zero(omega)) throw InvalidInput("omega must be nonzero");
  if (vector_gcd(omega) != 1) throw InvalidInput("omega must be primitive");
  const std::size_t g = omega.size();

  // omega * V = e_1 (up to sign), so the rows of V^{-1} are a basis with
  // omega first; coordinates of cls are cls * V.
  const auto snf = smith_normal_form(IntMatrix::from_rows({omega}, g));
  const IntMatrix row = IntMatrix::from_rows({cls}, g);
  const IntMatrix coords = row * snf.v;

  QuotientClass out;
  out.is_zero = true;
  out.is_even = true;
  for (std::size_t j = 1; j < g; ++j) {
    out.coordinates.push_back(coords(0, j));
    if (coords(0, j) != 0) out.is_zero = false;
    if (coords(0, j) % 2 != 0) out.is_even = false;
  }

  std::size_t p = 0;
  while (omega[p] == 0) ++p;
  const Int w = abs(omega[p]);
  const Int s = omega[p] > 0 ? 1 : -1;
  const Int t_abs = ceil_div(2 * cls[p] * s - w, 2 * w);
  out.shift = t_abs * s;
  out.representative = cls;
  for (std::size_t i = 0; i < g; ++i) out.representative[i] -= out.shift * omega[i];
  return out;
}

}  // namespace contact_tori
