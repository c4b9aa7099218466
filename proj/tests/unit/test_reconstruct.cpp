#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "hilbasket/error.hpp"
#include "hilbasket/reconstruct.hpp"
#include "oracles.hpp"

using namespace hilbasket;
using testing_helpers::delta;
using testing_helpers::ints;
using Coords = std::vector<std::int64_t>;

namespace {

std::vector<Coords> q_plus(std::int64_t ell) {
  std::vector<Coords> out;
  for (const auto& m : res_plus(ell).members) out.push_back(ints(orbifold_contribution(m).entries));
  return out;
}

std::set<Coords> coordinate_set(const ReducedBody& b) { return {b.coordinates.begin(), b.coordinates.end()}; }

}  // namespace

TEST(ResPlus, LocalIndexFive) {
  const ResPlus& rp = res_plus(5);
  EXPECT_EQ(rp.members, (std::vector<Singularity>{{5, 1}, {20, 3}, {10, 1}, {15, 2}}));
  EXPECT_EQ(rp.inverses, (std::vector<Singularity>{{20, 11}, {5, 2}, {15, 11}, {10, 3}}));
  EXPECT_EQ(q_plus(5), (std::vector<Coords>{{1, -2, 1}, {2, 1, 2}, {3, 4, 3}, {1, 3, 1}}));
}

TEST(ResPlus, Relations) {
  const auto q = q_plus(5);
  for (std::size_t d = 0; d < 3; ++d) {
    EXPECT_EQ(q[0][d] + q[3][d], q[1][d]);
    EXPECT_EQ(q[0][d] + 2 * q[3][d], q[2][d]);
  }
}

TEST(ResPlus, InterpretRoundTrip) {
  const ResPlus& rp = res_plus(5);
  const Coords x{1, -1, 1, 0};
  EXPECT_EQ(interpret(rp, x), sorted_basket({{5, 1}, {5, 2}, {10, 1}}));
  EXPECT_EQ(signed_coordinates(rp, interpret(rp, x)), x);
  EXPECT_THROW(signed_coordinates(rp, {{5, 1}, {20, 11}}), Error);
  EXPECT_THROW(interpret(rp, {1, 2}), Error);
}

TEST(Enumerate, ExampleTwoOneTwo) {
  const ReducedBody b = enumerate_reduced_baskets(5, delta(5, {2, 1, 2}));
  ASSERT_TRUE(b.realizable);
  EXPECT_EQ(coordinate_set(b), (std::set<Coords>{{1, 0, 0, 1}, {1, -1, 1, 0}, {0, 0, 1, -1}, {0, 1, 0, 0}}));
  for (const auto& rk : b.rk_squared) EXPECT_EQ(rk, Rational(-8, 5));
}

TEST(Enumerate, ZeroDeltaGivesEmptyBasket) {
  const ReducedBody b = enumerate_reduced_baskets(5, DeltaVector::zero(5));
  ASSERT_EQ(b.baskets.size(), 1u);
  EXPECT_TRUE(b.baskets[0].empty());
  EXPECT_EQ(b.rk_squared[0], 0);
}

TEST(Enumerate, Rejects) {
  EXPECT_THROW(enumerate_reduced_baskets(5, delta(5, {1, 2, 3})), Error);
  EXPECT_THROW(enumerate_reduced_baskets(5, delta(7, {0, 0, 0, 0, 0})), Error);
  EXPECT_THROW(enumerate_reduced_baskets(5, delta(5, {2, 1, 2}), {.max_mu = 1}), Error);
  EXPECT_FALSE(enumerate_reduced_baskets(5, delta(5, {1, 0, 1})).realizable);
}

TEST(Enumerate, MatchesCoordinateBox) {
  for (const Coords& d : std::vector<Coords>{{2, 1, 2}, {1, -2, 1}, {1, 3, 1}, {8, -1, 8}, {0, 5, 0}}) {
    const ReducedBody b = enumerate_reduced_baskets(5, delta(5, d));
    const auto box = oracle::box_reduced(q_plus(5), d, 8);
    EXPECT_EQ(coordinate_set(b), (std::set<Coords>{box.begin(), box.end()})) << d[0] << "," << d[1] << "," << d[2];
  }
}

TEST(Enumerate, MatchesCoordinateBoxAtHigherIndex) {
  struct Case {
    std::int64_t ell;
    std::vector<std::size_t> classes;
    std::int64_t bound;
  };
  for (const Case& c : std::vector<Case>{{8, {0, 1}, 4}, {8, {2}, 4}, {8, {3, 3}, 4}, {7, {2}, 2}, {7, {0, 0}, 2}}) {
    const auto& classes = residual_classes(c.ell);
    DeltaVector d = classes[c.classes[0]].delta;
    for (std::size_t i = 1; i < c.classes.size(); ++i) d = d + classes[c.classes[i]].delta;
    const ReducedBody b = enumerate_reduced_baskets(c.ell, d);
    std::set<Coords> inside;
    for (const auto& x : b.coordinates) {
      if (std::all_of(x.begin(), x.end(), [&](std::int64_t v) { return v <= c.bound && -v <= c.bound; })) inside.insert(x);
    }
    const auto box = oracle::box_reduced(q_plus(c.ell), ints(d.entries), c.bound);
    EXPECT_EQ(inside, (std::set<Coords>{box.begin(), box.end()})) << c.ell << " " << to_string(d);
  }
}

TEST(Enumerate, EightMinusOneEight) {
  const ReducedBody b = enumerate_reduced_baskets(5, delta(5, {8, -1, 8}));
  EXPECT_EQ(b.baskets.size(), 25u);
  EXPECT_TRUE(coordinate_set(b).count({5, 0, 0, 3}));
}

TEST(Enumerate, SoundnessAndFibre) {
  for (std::int64_t ell : {5, 7, 8}) {
    const auto& classes = residual_classes(ell);
    const DeltaVector d = classes[0].delta + classes[1 % classes.size()].delta;
    const ReducedBody b = enumerate_reduced_baskets(ell, d);
    ASSERT_FALSE(b.baskets.empty());
    const ResPlus& rp = res_plus(ell);
    const IntMatrix& phi = rp.phi;
    for (std::size_t i = 0; i < b.baskets.size(); ++i) {
      EXPECT_FALSE(contains_cancelling_tuple(b.baskets[i])) << to_string(b.baskets[i]);
      const auto parts = basket_contributions(b.baskets[i]).parts;
      EXPECT_EQ(parts.at(ell), d);
      EXPECT_TRUE(is_integral(b.rk_squared[i] - b.rk_squared[0]));
      IntVector diff;
      for (std::size_t c = 0; c < b.coordinates[i].size(); ++c) diff.emplace_back(b.coordinates[i][c] - b.coordinates[0][c]);
      EXPECT_EQ(phi.apply(diff), IntVector(static_cast<std::size_t>(ell - 2), Integer(0)));
    }
  }
}

TEST(Enumerate, ThreadCountDoesNotChangeOutput) {
  const ReducedBody one = enumerate_reduced_baskets(7, residual_classes(7)[2].delta, {.jobs = 1});
  const ReducedBody four = enumerate_reduced_baskets(7, residual_classes(7)[2].delta, {.jobs = 4});
  EXPECT_EQ(one.baskets, four.baskets);
  EXPECT_EQ(one.rk_squared, four.rk_squared);
}

TEST(FeaturesIn, Examples) {
  EXPECT_TRUE(features_in({1, 2}, {1, 0}));
  EXPECT_FALSE(features_in({0, 0}, {1, 0}));
  EXPECT_TRUE(features_in({-2, 3}, {-2, 3}));
  EXPECT_THROW(features_in({1}, {1, 2}), Error);
}

TEST(FeaturesIn, ExhaustiveAgainstDefinition) {
  for (std::size_t dim = 1; dim <= 3; ++dim) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) total *= 5;
    for (std::size_t iu = 0; iu < total; ++iu) {
      for (std::size_t iv = 0; iv < total; ++iv) {
        Coords u(dim), v(dim);
        std::size_t a = iu, b = iv;
        for (std::size_t i = 0; i < dim; ++i, a /= 5, b /= 5) {
          u[i] = static_cast<std::int64_t>(a % 5) - 2;
          v[i] = static_cast<std::int64_t>(b % 5) - 2;
        }
        EXPECT_EQ(features_in(u, v), oracle::features_in_direct(u, v));
      }
    }
  }
}

TEST(Analyze, Trichotomy) {
  for (int m = 11; m <= 15; ++m) {
    const auto h = parse_rational_function("(1+" + std::to_string(m) + "*t+t^2)/(1-t)^3");
    EXPECT_EQ(analyze_series(h).verdict, Verdict::NoSurface) << m;
  }
  const auto r10 = analyze_series(parse_rational_function("(1+10*t+t^2)/(1-t)^3"));
  EXPECT_EQ(r10.verdict, Verdict::Feasible);
  EXPECT_TRUE(r10.forced_empty);
  EXPECT_TRUE(r10.toric_impossible);
  const auto r7 = analyze_series(parse_rational_function("(1+7*t+t^2)/(1-t)^3"));
  EXPECT_EQ(r7.verdict, Verdict::Feasible);
  ASSERT_EQ(r7.choices.size(), 1u);
  EXPECT_EQ(r7.choices[0].ik_squared, 3);
  EXPECT_FALSE(r7.forced_empty);
}

TEST(Analyze, AssembledSeriesIsFeasible) {
  const Basket b = parse_basket("1/5(1,1), 1/15(1,2)");
  const auto report = analyze_series(assemble_series(b, Rational(13, 5)).series);
  EXPECT_EQ(report.verdict, Verdict::Feasible);
  EXPECT_EQ(report.k2, Rational(13, 5));
  bool seen = false;
  for (const auto& c : report.choices) seen = seen || (c.basket == sorted_basket(b) && c.feasible);
  EXPECT_TRUE(seen);
}

TEST(DegreeBounds, Examples) {
  const DegreeBounds e = degree_bounds({});
  EXPECT_EQ(e.m, 1);
  EXPECT_EQ(e.M, 12);
  const DegreeBounds b = degree_bounds(parse_basket("1/5(1,1), 1/15(1,2)"));
  EXPECT_EQ(b.m, Rational(3, 5));
  EXPECT_EQ(b.M, Rational(68, 5));
  const DegreeBounds c = degree_bounds(parse_basket("1/20(1,3)"));
  EXPECT_EQ(c.m, b.m);
  EXPECT_EQ(c.M, b.M);
  EXPECT_EQ(degree_bounds({}, {3}).M, 9);
  EXPECT_THROW(degree_bounds({}, {12}), Error);
}

TEST(CountBound, RecipeAndMonotone) {
  const DeltaParts q{{5, delta(5, {2, 1, 2})}};
  const CountBound cb = count_bound_detail(q, 5);
  EXPECT_EQ(cb.max_size, 3);
  EXPECT_EQ(cb.min_rk_squared, Rational(-8, 5));
  EXPECT_EQ(cb.budget, 13);
  EXPECT_EQ(cb.bound, 3 + 13 * 6);
  Integer prev = 0;
  for (std::int64_t l : {1, 5, 10, 15, 25}) {
    const Integer n = count_bound(q, l);
    EXPECT_GE(n, prev);
    prev = n;
  }
  EXPECT_THROW(count_bound({{5, delta(5, {1, 0, 1})}}, 5), Error);
}

TEST(Psi, StripsTParts) {
  const PsiInvariants p = psi_invariants({{12, 7}}, 3);
  EXPECT_EQ(p.psi.counts, (std::vector<std::int64_t>{1, 0}));
  EXPECT_EQ(p.psi_tilde.counts, (std::vector<std::int64_t>{2, 1}));
  const PsiInvariants t = psi_invariants({{9, 2}, {9, 5}}, 3);
  EXPECT_EQ(t.psi.counts, (std::vector<std::int64_t>{0, 0}));
  EXPECT_EQ(t.psi_tilde.counts, (std::vector<std::int64_t>{2, 2}));
}
