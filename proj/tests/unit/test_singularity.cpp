#include <gtest/gtest.h>

#include "hilbasket/error.hpp"
#include "hilbasket/singularity.hpp"
#include "oracles.hpp"

using namespace hilbasket;

TEST(Singularity, ParseAndRender) {
  EXPECT_EQ(parse_singularity("1/5(1,1)"), (Singularity{5, 1}));
  EXPECT_EQ(parse_singularity(" 1/20( 1 , 11 ) "), (Singularity{20, 11}));
  EXPECT_EQ(parse_singularity("smooth"), Singularity::smooth());
  EXPECT_EQ(to_string(Singularity{15, 2}), "1/15(1,2)");
  EXPECT_THROW(parse_singularity("1/4(1,2)"), Error);
  EXPECT_THROW(parse_singularity("1/5(2,1)"), Error);
  EXPECT_THROW(make_singularity(5, 5), Error);
}

TEST(Singularity, NormalizeCone) {
  EXPECT_EQ(normalize_cone({{0, 1}, {5, -1}}), (Singularity{5, 1}));
  EXPECT_EQ(normalize_cone({{0, 1}, {1, 0}}), Singularity::smooth());
  EXPECT_EQ(normalize_cone({{6, -1}, {3, -1}}), oracle::normalize_bruteforce({6, -1}, {3, -1}, 8));
  EXPECT_THROW(normalize_cone({{1, 0}, {2, 0}}), Error);
  EXPECT_THROW(normalize_cone({{1, 0}, {0, 1}}), Error);
}

TEST(Singularity, NormalizeAgreesWithSearch) {
  const std::vector<Vec2> rays{{0, 1}, {1, 0}, {1, 1}, {2, -1}, {3, -1}, {-1, 2}, {5, -2}, {4, 3}, {-3, -2}, {1, -4}};
  int checked = 0;
  for (const auto& u : rays) {
    for (const auto& v : rays) {
      if (u.y * v.x - u.x * v.y <= 0) continue;
      EXPECT_EQ(normalize_cone({u, v}), oracle::normalize_bruteforce(u, v, 12)) << u.x << "," << u.y << " " << v.x << "," << v.y;
      ++checked;
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(Singularity, Invariants) {
  auto check = [](Singularity s, std::int64_t ell, std::int64_t k, std::int64_t c) {
    const Invariants i = invariants(s);
    EXPECT_EQ(i.ell, ell);
    EXPECT_EQ(i.k, k);
    EXPECT_EQ(i.c, c);
  };
  check({9, 2}, 3, 3, 1);
  check({20, 11}, 5, 4, 3);
  check({5, 1}, 5, 1, 2);
}

TEST(Singularity, Classify) {
  const Classification t = classify({9, 2});
  EXPECT_EQ(t.kind, Kind::TSingularity);
  EXPECT_EQ(*t.t, (TData{1, 3, 1}));
  EXPECT_EQ(classify({10, 1}).kind, Kind::ResidualIndecomposable);
  EXPECT_EQ(classify({15, 2}).kind, Kind::Residual);
  EXPECT_EQ(classify({12, 7}).kind, Kind::Composite);
  EXPECT_EQ(classify(Singularity::smooth()).kind, Kind::Smooth);
}

TEST(Singularity, Residue) {
  const Residue r = residue({12, 7});
  EXPECT_EQ(r.residue, (Singularity{3, 1}));
  ASSERT_EQ(r.t_parts.size(), 1u);
  EXPECT_EQ(r.t_parts[0].d * r.t_parts[0].n, 3);
  EXPECT_TRUE(residue({9, 2}).residue.is_smooth());
  EXPECT_EQ(residue({5, 1}).residue, (Singularity{5, 1}));
  EXPECT_TRUE(residue({5, 1}).t_parts.empty());
}

TEST(Singularity, DualAndInverse) {
  EXPECT_EQ(dual({5, 2}), (Singularity{5, 3}));
  EXPECT_EQ(dual({5, 1}), (Singularity{5, 1}));
  EXPECT_EQ(dual({10, 1}), (Singularity{10, 1}));
  EXPECT_TRUE(isomorphic({5, 2}, {5, 3}));
  EXPECT_FALSE(isomorphic({5, 1}, {5, 2}));
  EXPECT_TRUE(isomorphic(hyperplane_inverse({5, 1}), {20, 11}));
  EXPECT_TRUE(isomorphic(hyperplane_inverse({10, 1}), {15, 11}));
  EXPECT_TRUE(isomorphic(hyperplane_inverse({10, 3}), {15, 2}));
  EXPECT_THROW(hyperplane_inverse({9, 2}), Error);
}

TEST(Singularity, HyperplaneSum) {
  EXPECT_EQ(hyperplane_sum(Singularity{6, 1}, Singularity{3, 1}), (Singularity{9, 2}));
  EXPECT_EQ(hyperplane_sum(Singularity{3, 1}, Singularity{6, 1}), (Singularity{9, 5}));
  EXPECT_FALSE(hyperplane_sum(Singularity{5, 1}, Singularity{3, 1}));
}

TEST(Singularity, ShatteringPointsArePrimitive) {
  EXPECT_EQ(shattering_points({9, 2}), (std::vector<std::int64_t>{2}));
  for (std::int64_t r = 2; r <= 60; ++r) {
    for (std::int64_t a = 1; a < r; ++a) {
      if (gcd64(r, a) != 1) continue;
      EXPECT_EQ(shattering_points({r, a}), oracle::primitive_edge_points({r, a})) << r << "," << a;
    }
  }
}

TEST(Singularity, Shatterings) {
  const auto s9 = shatterings({9, 2});
  ASSERT_EQ(s9.size(), 2u);
  EXPECT_EQ(s9[0], (std::vector<Singularity>{{9, 2}}));
  EXPECT_EQ(s9[1], (std::vector<Singularity>{{6, 1}, {3, 1}}));
  EXPECT_EQ(shatterings({5, 1}).size(), 1u);
  const auto s15 = shatterings({15, 2});
  ASSERT_EQ(s15.size(), 2u);
  ASSERT_EQ(s15[1].size(), 2u);
  EXPECT_TRUE(isomorphic(s15[1][0], {10, 1}));
  EXPECT_TRUE(isomorphic(s15[1][1], {5, 3}));
}

TEST(Singularity, MaximalShardsGlueBack) {
  for (std::int64_t r = 2; r <= 80; ++r) {
    for (std::int64_t a = 1; a < r; ++a) {
      if (gcd64(r, a) != 1) continue;
      const auto pieces = maximal_shards({r, a});
      for (const auto& p : pieces) EXPECT_TRUE(shattering_points(p).empty());
      EXPECT_EQ(hyperplane_sum(pieces), (Singularity{r, a}));
    }
  }
}

TEST(Singularity, GluingCone) {
  EXPECT_EQ(gluing_cone({3, 1}, {3, 1}), (Singularity{6, 1}));
  EXPECT_FALSE(gluing_cone({5, 1}, {5, 2}));
  EXPECT_THROW(gluing_cone({5, 1}, {3, 1}), Error);
}
