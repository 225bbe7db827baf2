#pragma once

// Weighted homogeneous hypersurface links: monomial counts h^0(CP(w), O(d)),
// the dimension of the family of transverse complex structures, and the
// infinitesimal moduli dimension.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "contact_tori/bigint.hpp"
#include "contact_tori/error.hpp"

namespace contact_tori {

/// Weight vector w = (w_0, ..., w_n) and degree d of f(λ^w z) = λ^d f(z).
struct WeightedLinkData {
  std::vector<Int> weights;
  Int degree;

  WeightedLinkData(std::vector<Int> w, Int d) : weights(std::move(w)), degree(std::move(d)) {
    if (weights.empty()) throw InvalidInput("weight vector is empty");
    for (const auto& x : weights)
      if (x < 1) throw InvalidInput("weights must be >= 1");
    if (degree < 1) throw InvalidInput("degree must be >= 1");
  }

  std::size_t variables() const noexcept { return weights.size(); }
};

inline bool is_weighted_homogeneous(const std::vector<IntVector>& monomials, const WeightedLinkData& data) {
  for (const auto& a : monomials) {
    if (a.size() != data.variables())
      throw InvalidInput("exponent vector length " + std::to_string(a.size()) + " != " +
                         std::to_string(data.variables()));
    for (const auto& x : a)
      if (x < 0) throw InvalidInput("negative exponent");
    if (dot(a, data.weights) != data.degree) return false;
  }
  return true;
}

struct H0Options {
  // Largest degree for the O(d) table.
  std::size_t max_dp_degree = 10'000'000;
  // Largest number of leaves for exact recursive splitting beyond the table.
  std::size_t max_recursion_leaves = 10'000'000;
};

namespace detail {

// #{(x, y) >= 0 : a x + b y = m}
inline Int count_two(const Int& a, const Int& b, const Int& m) {
  if (m < 0) return 0;
  const auto eg = extended_gcd(a, b);
  if (m % eg.g != 0) return 0;
  const Int a1 = a / eg.g, b1 = b / eg.g, m1 = m / eg.g;
  // Smallest x >= 0 with a1 x ≡ m1 (mod b1).
  Int x0 = (b1 == 1) ? Int(0) : Int(((m1 % b1) * (eg.x % b1)) % b1);
  if (x0 < 0) x0 += b1;
  if (a1 * x0 > m1) return 0;
  return (m1 - a1 * x0) / (a1 * b1) + 1;
}

inline Int count_split(const std::vector<Int>& w, std::size_t from, const Int& m) {
  const std::size_t left = w.size() - from;
  if (m < 0) return 0;
  if (left == 1) return (m % w[from] == 0) ? Int(1) : Int(0);
  if (left == 2) return count_two(w[from], w[from + 1], m);
  Int total = 0;
  for (Int rest = m; rest >= 0; rest -= w[from]) total += count_split(w, from + 1, rest);
  return total;
}

}  // namespace detail

/// Number of monomials of weighted degree d, i.e. non-negative solutions of
/// sum a_i w_i = d. Exact; refuses with CapacityExceeded rather than estimate.
inline Int h0_count(const WeightedLinkData& data, const H0Options& opts = {}) {
  std::vector<Int> w = data.weights;
  std::sort(w.begin(), w.end(), std::greater<>());
  const Int& d = data.degree;

  // Leaves of the splitting recursion: the last two weights are closed form.
  Int leaves = 1;
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    leaves *= d / w[i] + 1;
    if (leaves > opts.max_recursion_leaves) break;
  }
  const bool table_ok = d <= opts.max_dp_degree;
  if (leaves <= opts.max_recursion_leaves && (!table_ok || leaves <= d))
    return detail::count_split(w, 0, d);
  if (!table_ok)
    throw CapacityExceeded("h0 count for degree " + d.str() + " exceeds the table bound " +
                           std::to_string(opts.max_dp_degree) + " and the splitting budget");

  const std::size_t deg = static_cast<std::size_t>(d);
  std::vector<Int> table(deg + 1);
  table[0] = 1;
  for (const auto& wi : w) {
    if (wi > d) continue;
    const std::size_t step = static_cast<std::size_t>(wi);
    for (std::size_t k = step; k <= deg; ++k) table[k] += table[k - step];
  }
  return table[deg];
}

/// Complex dimension of the family J_{w,d}: h^0(d) - (n + 1). May be negative.
inline Int dim_transverse_complex_family(const WeightedLinkData& data, const H0Options& opts = {}) {
  return h0_count(data, opts) - Int(data.variables());
}

/// h^0(d) - sum_i h^0(w_i) + dim Aut, with h^0 taken on CP(w) per index i.
inline Int dim_moduli(const WeightedLinkData& data, const Int& dim_aut, const H0Options& opts = {}) {
  if (dim_aut < 0) throw InvalidInput("automorphism dimension must be non-negative");
  Int dim = h0_count(data, opts) + dim_aut;
  for (const auto& wi : data.weights) dim -= h0_count(WeightedLinkData(data.weights, wi), opts);
  return dim;
}

struct HypothesisCheck {
  bool holds = true;
  std::vector<std::size_t> violating;  // indices with 2 w_i >= d
};

/// 2 w_i < d for all but at most one weight.
inline HypothesisCheck whscomp_hypothesis(const WeightedLinkData& data) {
  HypothesisCheck out;
  for (std::size_t i = 0; i < data.weights.size(); ++i)
    if (2 * data.weights[i] >= data.degree) out.violating.push_back(i);
  out.holds = out.violating.size() <= 1;
  return out;
}

/// Brieskorn-Pham polynomial sum z_i^{a_i}: d = lcm(a), w_i = d / a_i.
inline WeightedLinkData brieskorn_weights(const std::vector<Int>& exponents) {
  if (exponents.empty()) throw InvalidInput("no exponents");
  Int d = 1;
  for (const auto& a : exponents) {
    if (a < 2) throw InvalidInput("Brieskorn exponents must be >= 2");
    d = lcm(d, a);
  }
  std::vector<Int> w;
  for (const auto& a : exponents) w.push_back(d / a);
  WeightedLinkData data(std::move(w), d);
  std::vector<IntVector> monomials;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    IntVector m(exponents.size());
    m[i] = exponents[i];
    monomials.push_back(std::move(m));
  }
  if (!is_weighted_homogeneous(monomials, data))
    throw std::logic_error("Brieskorn monomials are not weighted homogeneous");
  return data;
}

// Only the standard recursion is offered: a_k = a_0 a_1 ... a_{k-1} + 1.
enum class SylvesterConvention { ProductPlusOne };

inline std::vector<Int> sylvester_sequence(std::size_t length,
                                           SylvesterConvention = SylvesterConvention::ProductPlusOne) {
  if (length < 1) throw InvalidInput("sequence length must be >= 1");
  std::vector<Int> seq{2};
  Int product = 2;
  while (seq.size() < length) {
    seq.push_back(product + 1);
    product *= seq.back();
  }
  return seq;
}

}  // namespace contact_tori
