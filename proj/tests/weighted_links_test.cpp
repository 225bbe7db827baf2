#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "contact_tori/weighted_links.hpp"

using namespace contact_tori;

namespace {

// Enumerate all exponent vectors with sum a_i w_i <= d and count exact hits.
long long brute_h0(const std::vector<long long>& w, long long d, std::size_t i = 0, long long used = 0) {
  if (i == w.size()) return used == d ? 1 : 0;
  long long n = 0;
  for (long long a = 0; used + a * w[i] <= d; ++a) n += brute_h0(w, d, i + 1, used + a * w[i]);
  return n;
}

WeightedLinkData data(const std::vector<long long>& w, long long d) {
  std::vector<Int> ws(w.begin(), w.end());
  return WeightedLinkData(ws, d);
}

}  // namespace

TEST(WeightedLink, Validation) {
  EXPECT_THROW(data({}, 3), InvalidInput);
  EXPECT_THROW(data({0, 1}, 3), InvalidInput);
  EXPECT_THROW(data({1, 1}, 0), InvalidInput);
}

TEST(WeightedLink, Homogeneity) {
  const auto d = data({6, 10, 15, 15, 15}, 30);
  EXPECT_TRUE(is_weighted_homogeneous({to_int_vector({5, 0, 0, 0, 0}), to_int_vector({0, 3, 0, 0, 0}),
                                       to_int_vector({0, 0, 2, 0, 0}), to_int_vector({0, 0, 0, 2, 0}),
                                       to_int_vector({0, 0, 0, 0, 2})},
                                      d));
  EXPECT_TRUE(is_weighted_homogeneous({to_int_vector({1, 1})}, data({1, 1}, 2)));
  EXPECT_FALSE(is_weighted_homogeneous({to_int_vector({2, 0})}, data({1, 1}, 3)));
  EXPECT_THROW(is_weighted_homogeneous({to_int_vector({1})}, data({1, 1}, 2)), InvalidInput);
  EXPECT_THROW(is_weighted_homogeneous({to_int_vector({-1, 3})}, data({1, 1}, 2)), InvalidInput);
}

TEST(WeightedLink, H0Examples) {
  EXPECT_EQ(h0_count(data({1, 1, 1}, 2)), 6);
  EXPECT_EQ(h0_count(data({6, 10, 15, 15, 15}, 30)), 8);
  EXPECT_EQ(h0_count(data({1}, 7)), 1);
  EXPECT_EQ(h0_count(data({4}, 7)), 0);
  EXPECT_EQ(h0_count(data({5, 7}, 3)), 0);
}

TEST(WeightedLink, H0MatchesBruteForceOnGrid) {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<long long> w(n, 1);
    while (true) {
      for (long long d = 1; d <= 40; ++d)
        ASSERT_EQ(h0_count(data(w, d)), brute_h0(w, d)) << "n=" << n << " d=" << d;
      std::size_t i = 0;
      while (i < n && w[i] == 9) w[i++] = 1;
      if (i == n) break;
      ++w[i];
    }
  }
}

TEST(WeightedLink, H0PathsAgree) {
  // Force the table path and the splitting path on the same inputs.
  H0Options table_only;
  table_only.max_recursion_leaves = 0;
  H0Options split_only;
  split_only.max_dp_degree = 0;
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long long> wd(1, 40), dd(1, 600);
  for (int t = 0; t < 200; ++t) {
    std::vector<long long> w(2 + t % 4);
    for (auto& x : w) x = wd(rng);
    const auto in = data(w, dd(rng));
    EXPECT_EQ(h0_count(in, table_only), h0_count(in, split_only));
  }
}

TEST(WeightedLink, H0PermutationInvariant) {
  std::mt19937_64 rng(9);
  std::vector<long long> w{2, 3, 5, 7, 11};
  const Int base = h0_count(data(w, 97));
  for (int t = 0; t < 10; ++t) {
    std::shuffle(w.begin(), w.end(), rng);
    EXPECT_EQ(h0_count(data(w, 97)), base);
  }
}

TEST(WeightedLink, H0Capacity) {
  H0Options tight;
  tight.max_dp_degree = 100;
  tight.max_recursion_leaves = 10;
  EXPECT_THROW(h0_count(data({1, 1, 1, 1, 1}, 1000), tight), CapacityExceeded);
}

TEST(WeightedLink, BigDegreeBySplitting) {
  // Two weights: closed form floor(d / 2) + 1 for w = (1, 2).
  const Int d = Int(1) << 80;
  EXPECT_EQ(h0_count(WeightedLinkData({Int(1), Int(2)}, d)), d / 2 + 1);
}

TEST(WeightedLink, Dimensions) {
  EXPECT_EQ(dim_transverse_complex_family(data({6, 10, 15, 15, 15}, 30)), 3);
  EXPECT_EQ(dim_transverse_complex_family(data({1, 1}, 1)), 0);
  EXPECT_EQ(dim_transverse_complex_family(data({1, 1, 1, 1}, 4)), 31);
  EXPECT_EQ(dim_moduli(data({6, 10, 15, 15, 15}, 30), 3), 0);
  EXPECT_EQ(dim_moduli(data({1, 1, 1}, 3), 8), 10 - 9 + 8);
  EXPECT_EQ(dim_moduli(data({4, 5}, 3), 0), -2);
  EXPECT_THROW(dim_moduli(data({1, 1}, 2), -1), InvalidInput);
}

TEST(WeightedLink, Hypothesis) {
  EXPECT_TRUE(whscomp_hypothesis(data({1, 1, 1, 1, 1}, 5)).holds);
  const auto h = whscomp_hypothesis(data({6, 10, 15, 15, 15}, 30));
  EXPECT_FALSE(h.holds);
  EXPECT_EQ(h.violating, (std::vector<std::size_t>{2, 3, 4}));
  const auto one = whscomp_hypothesis(data({3, 7}, 8));
  EXPECT_TRUE(one.holds);
  EXPECT_EQ(one.violating, std::vector<std::size_t>{1});
}

TEST(WeightedLink, Brieskorn) {
  auto b = brieskorn_weights({5, 3, 2, 2, 2});
  EXPECT_EQ(b.degree, 30);
  EXPECT_EQ(b.weights, (std::vector<Int>{6, 10, 15, 15, 15}));
  b = brieskorn_weights({11, 3, 2, 2, 2});
  EXPECT_EQ(b.degree, 66);
  EXPECT_EQ(b.weights, (std::vector<Int>{6, 22, 33, 33, 33}));
  b = brieskorn_weights({2, 2});
  EXPECT_EQ(b.degree, 2);
  EXPECT_EQ(b.weights, (std::vector<Int>{1, 1}));
  EXPECT_THROW(brieskorn_weights({1, 2}), InvalidInput);
  EXPECT_THROW(brieskorn_weights({}), InvalidInput);
  for (long long k = 1; k <= 3; ++k) {
    const auto f = brieskorn_weights({6 * k - 1, 3, 2, 2, 2});
    EXPECT_EQ(f.degree, 6 * (6 * k - 1));
    EXPECT_EQ(dim_transverse_complex_family(f), 3) << "k=" << k;
  }
}

TEST(WeightedLink, Sylvester) {
  EXPECT_EQ(sylvester_sequence(1), std::vector<Int>{2});
  EXPECT_EQ(sylvester_sequence(3), (std::vector<Int>{2, 3, 7}));
  const auto s = sylvester_sequence(9);
  EXPECT_EQ(s[6], Int("10650056950807"));
  EXPECT_NE(std::find(s.begin(), s.end(), Int("10650056950807")), s.end());
  // Independent check: a_{k+1} = a_k^2 - a_k + 1.
  for (std::size_t k = 0; k + 1 < s.size(); ++k) EXPECT_EQ(s[k + 1], s[k] * s[k] - s[k] + 1);
  EXPECT_THROW(sylvester_sequence(0), InvalidInput);
}
