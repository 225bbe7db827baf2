#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "contact_tori/error.hpp"

namespace contact_tori {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Int>;
using RationalVector = std::vector<Rational>;

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd(Int a, Int b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Int r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

/// Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
struct ExtendedGcd {
  Int g, x, y;
};

inline ExtendedGcd extended_gcd(const Int& a, const Int& b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

// Division rounding toward negative / positive infinity (operator/ truncates).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

inline Int vector_gcd(const IntVector& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

inline bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Int dot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(const IntVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

/// Divides out the content of a nonzero vector; the sign is preserved.
inline IntVector make_primitive(IntVector v) {
  const Int g = vector_gcd(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Int parse_int(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (body.empty()) throw InvalidInput("empty integer literal");
  for (char c : body)
    if (c < '0' || c > '9') throw InvalidInput("malformed integer literal '" + std::string(s) + "'");
  const Int v(std::string{body});
  return s.front() == '-' ? Int(-v) : v;
}

/// Accepts "p", "-p", "p/q"; the result is in lowest terms.
inline Rational parse_rational(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  const Int num = parse_int(s.substr(0, slash));
  const Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw InvalidInput("zero denominator in '" + std::string(s) + "'");
  return Rational(num, den);
}

inline std::string to_string(const Int& a) { return a.str(); }

inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline IntVector to_int_vector(std::initializer_list<long long> xs) {
  IntVector v;
  v.reserve(xs.size());
  for (long long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace contact_tori
