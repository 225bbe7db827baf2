#include <gtest/gtest.h>

#include <random>

#include "contact_tori/lattice.hpp"

using namespace contact_tori;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

// Random product of elementary operations.
IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const auto i = idx(rng), j = idx(rng);
    if (i == j) {
      u.negate_row(i);
      continue;
    }
    u.add_row(i, j, coef(rng));
  }
  return u;
}

// gcd of all k x k minors, by cofactor expansion.
Int minor_det(const IntMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  if (k == 1) return m(rows[0], cols[0]);
  Int det = 0;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end()), sub_cols;
    for (std::size_t c = 0; c < k; ++c)
      if (c != j) sub_cols.push_back(cols[c]);
    const Int term = m(rows[0], cols[j]) * minor_det(m, sub_rows, sub_cols);
    det += (j % 2 == 0) ? term : Int(-term);
  }
  return det;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

Int determinantal_divisor(const IntMatrix& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> cur;
  subsets(m.rows(), k, 0, cur, rs);
  subsets(m.cols(), k, 0, cur, cs);
  Int g = 0;
  for (const auto& r : rs)
    for (const auto& c : cs) g = gcd(g, minor_det(m, r, c));
  return g;
}

void expect_smith_form(const IntMatrix& m) {
  const auto s = smith_normal_form(m);
  ASSERT_EQ(s.u * m * s.v, s.d) << m.str();
  EXPECT_EQ(abs(determinant(s.u)), 1);
  EXPECT_EQ(abs(determinant(s.v)), 1);
  Int prev = 1;
  bool zero_seen = false;
  for (std::size_t r = 0; r < s.d.rows(); ++r)
    for (std::size_t c = 0; c < s.d.cols(); ++c) {
      if (r != c) {
        EXPECT_EQ(s.d(r, c), 0);
        continue;
      }
      const Int& d = s.d(r, c);
      EXPECT_GE(d, 0);
      if (d == 0) {
        zero_seen = true;
      } else {
        EXPECT_FALSE(zero_seen) << "nonzero after zero on the diagonal";
        EXPECT_EQ(d % prev, 0) << "divisibility chain";
        prev = d;
      }
    }
}

void expect_hermite_form(const IntMatrix& h) {
  std::size_t last_pivot_col = 0;
  bool first = true;
  bool zero_rows = false;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t c = 0;
    while (c < h.cols() && h(r, c) == 0) ++c;
    if (c == h.cols()) {
      zero_rows = true;
      continue;
    }
    EXPECT_FALSE(zero_rows) << "nonzero row below a zero row";
    if (!first) EXPECT_GT(c, last_pivot_col);
    first = false;
    last_pivot_col = c;
    EXPECT_GT(h(r, c), 0);
    for (std::size_t above = 0; above < r; ++above) {
      EXPECT_GE(h(above, c), 0);
      EXPECT_LT(h(above, c), h(r, c));
    }
  }
}

}  // namespace

TEST(Smith, Examples) {
  EXPECT_EQ(smith_normal_form(IntMatrix{{1, 0}, {0, 1}}).d, (IntMatrix{{1, 0}, {0, 1}}));
  EXPECT_EQ(smith_normal_form(IntMatrix{{1, 0}, {1, 2}}).d, (IntMatrix{{1, 0}, {0, 2}}));
  EXPECT_EQ(smith_normal_form(IntMatrix{{2, 4}, {4, 8}}).d, (IntMatrix{{2, 0}, {0, 0}}));
}

TEST(Smith, EmptyMatrixRejected) { EXPECT_THROW(smith_normal_form(IntMatrix(0, 3)), InvalidInput); }

TEST(Smith, RandomMatricesSatisfyContractAndMinorOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    IntMatrix m = random_matrix(rng, rows, cols);
    if (trial % 5 == 0 && rows > 1)  // force dependent rows
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = 2 * m(0, c);
    expect_smith_form(m);
    // d_1 ... d_k = gcd of k x k minors
    const auto diag = smith_diagonal(m);
    Int prod = 1;
    for (std::size_t k = 1; k <= diag.size(); ++k) {
      prod *= diag[k - 1];
      EXPECT_EQ(prod, determinantal_divisor(m, k)) << m.str() << " k=" << k;
    }
  }
}

TEST(Hermite, Examples) {
  const auto id = IntMatrix::identity(3);
  EXPECT_EQ(hermite_normal_form(id).h, id);
  EXPECT_EQ(hermite_normal_form(IntMatrix{{0, 1}, {1, 0}}).h, (IntMatrix{{1, 0}, {0, 1}}));
  // [[2,1],[0,3]] has det 6; the HNF has the same lattice, pivot product 6.
  const auto hf = hermite_normal_form(IntMatrix{{2, 1}, {0, 3}});
  EXPECT_EQ(hf.h(0, 0) * hf.h(1, 1), 6);
  expect_hermite_form(hf.h);
}

TEST(Hermite, SmallUnimodularBruteForce) {
  // HNF of [[2,1],[0,3]] equals the unique HNF among all U m with small U.
  const IntMatrix m{{2, 1}, {0, 3}};
  const auto h = hermite_normal_form(m).h;
  std::size_t hits = 0;
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b)
      for (int c = -4; c <= 4; ++c)
        for (int d = -4; d <= 4; ++d) {
          if (std::abs(a * d - b * c) != 1) continue;
          const IntMatrix u{{a, b}, {c, d}};
          const IntMatrix cand = u * m;
          bool is_hnf = cand(1, 0) == 0 && cand(0, 0) > 0 && cand(1, 1) > 0 && cand(0, 1) >= 0 && cand(0, 1) < cand(1, 1);
          if (is_hnf) {
            ++hits;
            EXPECT_EQ(cand, h);
          }
        }
  EXPECT_GE(hits, 1u);
}

TEST(Hermite, RandomContractIdempotenceAndOrbitInvariance) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
    const IntMatrix m = random_matrix(rng, rows, cols);
    const auto hf = hermite_normal_form(m);
    ASSERT_EQ(hf.u * m, hf.h);
    EXPECT_EQ(abs(determinant(hf.u)), 1);
    expect_hermite_form(hf.h);
    EXPECT_EQ(hermite_normal_form(hf.h).h, hf.h);
    const IntMatrix w = random_unimodular(rng, rows);
    EXPECT_EQ(hermite_normal_form(w * m).h, hf.h);
  }
}

TEST(Unimodular, InverseRoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const auto u = random_unimodular(rng, n);
    EXPECT_EQ(unimodular_inverse(u) * u, IntMatrix::identity(n));
  }
  EXPECT_THROW(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), InvalidInput);
}

TEST(Primitive, Examples) {
  EXPECT_TRUE(is_primitive(to_int_vector({1, 0, 0})));
  EXPECT_FALSE(is_primitive(to_int_vector({2, 4, 6})));
  EXPECT_TRUE(is_primitive(to_int_vector({6, 10, 15})));
  EXPECT_THROW(is_primitive(to_int_vector({0, 0})), InvalidInput);
}

TEST(QuotientGroup, Examples) {
  EXPECT_TRUE(quotient_group(IntMatrix{{1, 0}, {0, 1}}, 2).trivial());
  for (int p = 2; p <= 9; ++p) {
    const auto g = quotient_group(IntMatrix{{1, 0}, {-1, p}}, 2);
    EXPECT_EQ(g.free_rank, 0u);
    ASSERT_EQ(g.invariant_factors.size(), 1u);
    EXPECT_EQ(g.invariant_factors[0], p);
  }
  for (int k1 = 1; k1 <= 5; ++k1)
    for (int k2 = 1; k2 <= 5; ++k2) {
      if (std::gcd(k1, k2) != 1) continue;
      EXPECT_TRUE(quotient_group(IntMatrix{{1, 0, 0}, {0, 1, 0}, {-1, 0, k1}, {0, -1, k2}}, 3).trivial());
    }
  const auto g = quotient_group(IntMatrix{{2, 0, 0}, {0, 6, 0}}, 3);
  EXPECT_EQ(g.free_rank, 1u);
  EXPECT_EQ(g.invariant_factors, (std::vector<Int>{2, 6}));
  EXPECT_EQ(quotient_group(IntMatrix(0, 4), 4).free_rank, 4u);
  EXPECT_THROW(quotient_group(IntMatrix{{1, 0}}, 3), InvalidInput);
}

TEST(QuotientGroup, AppendingCombinationsChangesNothing) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 4;
    const IntMatrix m = random_matrix(rng, rows, cols);
    const auto before = quotient_group(m, cols);
    std::vector<IntVector> rs = m.row_vectors();
    IntVector combo(cols);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (const auto& r : rs) {
      const int a = coef(rng);
      for (std::size_t c = 0; c < cols; ++c) combo[c] += a * r[c];
    }
    rs.push_back(combo);
    EXPECT_EQ(quotient_group(IntMatrix::from_rows(rs, cols), cols), before);
  }
}

TEST(LinearAlgebra, RankDeterminantKernel) {
  EXPECT_EQ(rank(IntMatrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(determinant(IntMatrix{{2, 1}, {1, 1}}), 1);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  const IntMatrix m{{1, 2, 3}, {2, 4, 6}};
  const auto k = kernel_basis(m);
  EXPECT_EQ(k.size(), 2u);
  for (const auto& v : k) {
    EXPECT_TRUE(is_zero(m * v));
    EXPECT_EQ(vector_gcd(v), 1);
  }
}

TEST(LinearAlgebra, BigEntriesStayExact) {
  const Int big = Int(1) << 100;
  IntMatrix m(2, 2);
  m(0, 0) = big;
  m(0, 1) = big + 1;
  m(1, 0) = 1;
  m(1, 1) = 1;
  EXPECT_EQ(determinant(m), -1);
  EXPECT_EQ(smith_diagonal(m), (std::vector<Int>{1, 1}));
}
