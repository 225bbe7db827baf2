#pragma once

// Exact integer linear algebra: normal forms, ranks, kernels and the
// structure of finitely generated abelian quotients Z^n / L.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contact_tori/bigint.hpp"
#include "contact_tori/error.hpp"

namespace contact_tori {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
      for (long long x : r) data_.emplace_back(x);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InvalidInput("row length does not match column count");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
    return from_rows(columns, rows).transpose();
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  IntVector column(std::size_t c) const {
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  std::vector<IntVector> row_vectors() const {
    std::vector<IntVector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  // row_dst += factor * row_src
  void add_row(std::size_t dst, std::size_t src, const Int& factor) {
    if (factor == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
  }
  void add_col(std::size_t dst, std::size_t src, const Int& factor) {
    if (factor == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
  }
  void negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
  }
  // (row_a, row_b) <- (x*row_a + y*row_b, z*row_a + w*row_b)
  void combine_rows(std::size_t a, std::size_t b, const Int& x, const Int& y, const Int& z,
                    const Int& w) {
    for (std::size_t c = 0; c < cols_; ++c) {
      Int ra = (*this)(a, c), rb = (*this)(b, c);
      (*this)(a, c) = x * ra + y * rb;
      (*this)(b, c) = z * ra + w * rb;
    }
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix product dimension mismatch");
    IntMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Int& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
      }
    return p;
  }

  friend IntVector operator*(const IntMatrix& a, const IntVector& v) {
    if (a.cols_ != v.size()) throw InvalidInput("matrix-vector dimension mismatch");
    IntVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  // Total order: shape first, then entries row-major.
  friend std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
      if (a.data_[i] < b.data_[i]) return std::strong_ordering::less;
      if (b.data_[i] < a.data_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
      s += r ? ",[" : "[";
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c) s += ",";
        s += (*this)(r, c).str();
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Fraction-free (Bareiss) elimination. Returns the rank; `m` is destroyed.
inline std::size_t bareiss_rank(IntMatrix m, Int* det_out = nullptr) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  Int prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      m.swap_rows(pivot, rank);
      sign = -sign;
    }
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m(i, j) = (m(rank, c) * m(i, j) - m(i, c) * m(rank, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  if (det_out) *det_out = (rows == cols && rank == rows) ? Int(sign * prev) : Int(0);
  return rank;
}

inline std::size_t rank(const IntMatrix& m) {
  if (m.empty()) return 0;
  return bareiss_rank(m);
}

inline std::size_t rank(const std::vector<IntVector>& rows, std::size_t cols) {
  if (rows.empty()) return 0;
  return rank(IntMatrix::from_rows(rows, cols));
}

inline Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  Int det;
  bareiss_rank(m, &det);
  return det;
}

/// Reduced row echelon form over Q, pivoting in the first `cols` columns
/// (any further columns are carried along); returns pivot columns.
inline std::vector<std::size_t> rref(std::vector<RationalVector>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Primitive integer basis of the rational null space {x : m x = 0}.
inline std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  const std::size_t cols = m.cols();
  std::vector<RationalVector> a(m.rows(), RationalVector(cols));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = Rational(m(i, j));
  const auto pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<IntVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(cols);
    x[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = -a[k][free];
    Int den = 1;
    for (const auto& q : x) den = lcm(den, denominator(q));
    IntVector v(cols);
    for (std::size_t j = 0; j < cols; ++j) v[j] = numerator(x[j] * den);
    basis.push_back(make_primitive(std::move(v)));
  }
  return basis;
}

/// Unique solution of the square system a x = b, or nullopt if singular.
inline std::optional<RationalVector> solve_unique(std::vector<RationalVector> a, RationalVector b) {
  const std::size_t n = b.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  const auto pivots = rref(a, n);
  if (pivots.size() != n) return std::nullopt;
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

// ---------------------------------------------------------------------------
// Smith normal form

struct SmithForm {
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix d;  // rows x cols, diagonal, d_1 | d_2 | ..., non-negative
  IntMatrix v;  // cols x cols, unimodular
};

/// Computes u, d, v with u * m * v = d.
inline SmithForm smith_normal_form(const IntMatrix& m) {
  if (m.empty()) throw InvalidInput("Smith normal form of an empty matrix");
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  auto swap_r = [&](std::size_t i, std::size_t j) { a.swap_rows(i, j); u.swap_rows(i, j); };
  auto swap_c = [&](std::size_t i, std::size_t j) { a.swap_cols(i, j); v.swap_cols(i, j); };
  auto add_r = [&](std::size_t dst, std::size_t src, const Int& f) { a.add_row(dst, src, f); u.add_row(dst, src, f); };
  auto add_c = [&](std::size_t dst, std::size_t src, const Int& f) { a.add_col(dst, src, f); v.add_col(dst, src, f); };

  const std::size_t diag = std::min(rows, cols);
  for (std::size_t t = 0; t < diag; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto move_min_to_pivot = [&]() -> bool {
      std::size_t bi = rows, bj = cols;
      Int best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (bi == rows || abs(a(i, j)) < best)) {
            best = abs(a(i, j));
            bi = i;
            bj = j;
          }
      if (bi == rows) return false;
      swap_r(t, bi);
      swap_c(t, bj);
      return true;
    };
    if (!move_min_to_pivot()) break;

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        add_r(i, t, -(a(i, t) / a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        add_c(j, t, -(a(t, j) / a(t, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        move_min_to_pivot();
        continue;
      }
      // Divisibility: fold an offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            add_r(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(a), std::move(v)};
}

inline std::vector<Int> smith_diagonal(const IntMatrix& m) {
  const auto s = smith_normal_form(m);
  std::vector<Int> diag;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) diag.push_back(s.d(i, i));
  return diag;
}

// ---------------------------------------------------------------------------
// Hermite normal form (row style)

struct HermiteForm {
  IntMatrix h;  // u * m
  IntMatrix u;  // unimodular
};

/// Row-style HNF: pivots move left to right, are positive, entries below a
/// pivot vanish and entries above it lie in [0, pivot).
inline HermiteForm hermite_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(rows);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (h(i, c) == 0) continue;
      const auto eg = extended_gcd(h(r, c), h(i, c));
      const Int a = h(r, c) / eg.g, b = h(i, c) / eg.g;
      h.combine_rows(r, i, eg.x, eg.y, -b, a);
      u.combine_rows(r, i, eg.x, eg.y, -b, a);
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Int q = floor_div(h(i, c), h(r, c));
      if (q == 0) continue;
      h.add_row(i, r, -q);
      u.add_row(i, r, -q);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

// ---------------------------------------------------------------------------

/// Inverse of a unimodular matrix (exact; throws if not unimodular).
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw InvalidInput("inverse of a non-square matrix");
  const auto hf = hermite_normal_form(m);
  if (hf.h != IntMatrix::identity(n)) throw InvalidInput("matrix is not unimodular");
  return hf.u;
}

inline bool is_primitive(const IntVector& v) {
  if (v.empty() || is_zero(v)) throw InvalidInput("zero vector has no primitive direction");
  return vector_gcd(v) == 1;
}

/// Z^free_rank (+) Z/d_1 (+) ... with d_1 | d_2 | ..., all d_i >= 2.
struct AbelianGroupStructure {
  std::size_t free_rank = 0;
  std::vector<Int> invariant_factors;

  bool trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  bool finite() const { return free_rank == 0; }
  Int order() const {
    Int o = 1;
    for (const auto& f : invariant_factors) o *= f;
    return o;
  }
  friend bool operator==(const AbelianGroupStructure&, const AbelianGroupStructure&) = default;

  std::string str() const {
    if (trivial()) return "0";
    std::string s;
    for (std::size_t i = 0; i < free_rank; ++i) s += (s.empty() ? "" : " + ") + std::string("Z");
    for (const auto& f : invariant_factors) s += (s.empty() ? "" : " + ") + ("Z/" + f.str());
    return s;
  }
};

/// Structure of Z^ambient_rank modulo the row span of `generators`.
inline AbelianGroupStructure quotient_group(const IntMatrix& generators, std::size_t ambient_rank) {
  if (generators.rows() == 0) return {ambient_rank, {}};
  if (generators.cols() != ambient_rank)
    throw InvalidInput("generator length " + std::to_string(generators.cols()) +
                       " does not match ambient rank " + std::to_string(ambient_rank));
  AbelianGroupStructure g;
  std::size_t r = 0;
  for (const auto& d : smith_diagonal(generators)) {
    if (d == 0) continue;
    ++r;
    if (d > 1) g.invariant_factors.push_back(d);
  }
  g.free_rank = ambient_rank - r;
  return g;
}

}  // namespace contact_tori
