#include <gtest/gtest.h>

#include <numeric>

#include "contact_tori/cone_equiv.hpp"
#include "contact_tori/join.hpp"

using namespace contact_tori;

namespace {

// Number of integers j >= 0 with j < a/b, counted one by one.
long long count_up_to_ratio(long long a, long long b) {
  long long n = 0;
  for (long long j = 0; j * b < a; ++j) ++n;
  return n;
}

}  // namespace

TEST(Join, Smoothness) {
  EXPECT_TRUE(join_smoothness({2, 3, 1, 1}));
  EXPECT_FALSE(join_smoothness({2, 2, 1, 1}));
  EXPECT_TRUE(join_smoothness({3, 2, 2, 3}));
  EXPECT_FALSE(join_smoothness({3, 2, 3, 2}));
  EXPECT_THROW(join_smoothness({0, 1, 1, 1}), InvalidInput);
  EXPECT_THROW(join_smoothness({1, 1, 0, 1}), InvalidInput);
}

TEST(Join, ReduceCommonFactor) {
  auto r = reduce_common_factor(4, 6);
  EXPECT_EQ(r.m, 2);
  EXPECT_EQ(r.k1, 2);
  EXPECT_EQ(r.k2, 3);
  r = reduce_common_factor(1, 1);
  EXPECT_EQ(r.m, 1);
  r = reduce_common_factor(9, 12);
  EXPECT_EQ(r.m, 3);
  EXPECT_EQ(r.k1, 3);
  EXPECT_EQ(r.k2, 4);
  EXPECT_THROW(reduce_common_factor(0, 3), InvalidInput);
  for (long long a = 1; a <= 30; ++a)
    for (long long b = 1; b <= 30; ++b) {
      const auto c = reduce_common_factor(a, b);
      EXPECT_EQ(c.m * c.k1, a);
      EXPECT_EQ(c.m * c.k2, b);
      EXPECT_TRUE(join_smoothness({c.k1, c.k2, 1, 1}));
    }
}

TEST(Join, SphereJoinCone) {
  const auto c = sphere_join_cone(1, 1);
  const std::vector<IntVector> expected{to_int_vector({1, 0, 0}), to_int_vector({-1, 0, 1}), to_int_vector({0, 1, 0}),
                                        to_int_vector({0, -1, 1})};
  EXPECT_EQ(c.facet_normals(), expected);
  EXPECT_THROW(sphere_join_cone(2, 4), InvalidInput);
  EXPECT_THROW(sphere_join_cone(0, 1), InvalidInput);
  for (long long k1 = 1; k1 <= 5; ++k1)
    for (long long k2 = 1; k2 <= 5; ++k2) {
      if (std::gcd(k1, k2) != 1) continue;
      const auto j = sphere_join_cone(k1, k2);
      EXPECT_TRUE(check_good(j).good);
      const auto inv = cone_invariants(j);
      EXPECT_TRUE(inv.pi1.trivial());
      EXPECT_EQ(inv.pi2_rank, 1u);
      EXPECT_TRUE(are_equivalent(j, sphere_join_cone(k2, k1)).equivalent);
    }
}

TEST(Join, ProductPolytope) {
  const auto p = join_polytope(unit_interval(), 2, unit_interval(), 3);
  EXPECT_EQ(p.ambient_rank(), 2u);
  EXPECT_EQ(polytope_vertices(p).size(), 4u);
  const auto cand = cone_over_polytope(p);
  EXPECT_TRUE(cand.smooth());
  EXPECT_THROW(scale_polytope(unit_interval(), 0), InvalidInput);
}

TEST(Join, BouquetLowerBound) {
  EXPECT_EQ(bouquet_lower_bound(2, 3), 6);
  EXPECT_EQ(bouquet_lower_bound(1, 1), 1);
  EXPECT_EQ(bouquet_lower_bound(0, 5), 0);
  EXPECT_THROW(bouquet_lower_bound(-1, 5), InvalidInput);
}

TEST(Wzex, FamilyD) {
  const auto r = wzex_family(WzexFamily::D, 7, 2);
  EXPECT_EQ(r.bouquet_size, 4);
  EXPECT_EQ(r.manifold, ManifoldId::S2xS3);
  EXPECT_EQ(r.c1_invariant, 10);
  EXPECT_EQ(wzex_family(WzexFamily::D, 2, 1).bouquet_size, 2);
  EXPECT_THROW(wzex_family(WzexFamily::D, 2, 2), InvalidInput);
  EXPECT_THROW(wzex_family(WzexFamily::D, 6, 4), InvalidInput);
  EXPECT_THROW(wzex_family(WzexFamily::D, 2, 3), InvalidInput);
  for (long long a = 2; a <= 25; ++a)
    for (long long b = 1; b < a; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto w = wzex_family(WzexFamily::D, a, b);
      EXPECT_EQ(w.bouquet_size, count_up_to_ratio(a, b));
      EXPECT_GE(w.bouquet_size, 2);
    }
}

TEST(Wzex, FamilyTildeD) {
  const auto r = wzex_family(WzexFamily::TildeD, 5, 3);
  EXPECT_EQ(r.bouquet_size, 2);
  EXPECT_EQ(r.manifold, ManifoldId::XInfinity);
  EXPECT_EQ(r.c1_invariant, -1);
  EXPECT_THROW(wzex_family(WzexFamily::TildeD, 3, 3), InvalidInput);
  EXPECT_THROW(wzex_family(WzexFamily::TildeD, 3, 0), InvalidInput);
  for (long long l = 2; l <= 20; ++l)
    for (long long e = 1; e < l; ++e) {
      const auto w = wzex_family(WzexFamily::TildeD, l, e);
      EXPECT_EQ(w.bouquet_size, count_up_to_ratio(e, l - e));
      EXPECT_EQ(w.manifold, l % 2 == 0 ? ManifoldId::S2xS3 : ManifoldId::XInfinity);
      EXPECT_EQ(w.c1_invariant, l - 2 * e);
    }
}
