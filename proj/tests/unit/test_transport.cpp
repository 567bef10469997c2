#include <gtest/gtest.h>

#include <cmath>

#include "lipext/errors.hpp"
#include "lipext/random.hpp"
#include "lipext/transport.hpp"
#include "lipext_tools/instances.hpp"
#include "oracles.hpp"

using namespace lipext;

namespace {
const TargetSpace R1 = TargetSpace::normed(1);
const TargetSpace R2 = TargetSpace::normed(2);
}  // namespace

TEST(W1, Diracs) {
  auto a = DiscreteMeasure::dirac(R2, {0, 0}), b = DiscreteMeasure::dirac(R2, {3, 4});
  EXPECT_DOUBLE_EQ(w1_distance(a, b).value, 5.0);
  EXPECT_EQ(w1_distance(a, a).value, 0.0);
}

TEST(W1, HalfMasses) {
  DiscreteMeasure mu(R1, {{0}, {2}}, {0.5, 0.5});
  auto nu = DiscreteMeasure::dirac(R1, {1});
  auto r = w1_distance(mu, nu);
  EXPECT_NEAR(r.value, 1.0, 1e-15);
  ASSERT_EQ(r.plan.flow.size(), 2u);
  EXPECT_NEAR(r.plan.flow[0][0] + r.plan.flow[1][0], 1.0, 1e-15);
}

TEST(W1, MixedTargets) {
  auto a = DiscreteMeasure::dirac(R1, {0});
  auto b = DiscreteMeasure::dirac(TargetSpace::normed(1, Norm::L1), {0});
  EXPECT_THROW(w1_distance(a, b), Error);
}

TEST(W1, MeasureCanonicalization) {
  DiscreteMeasure mu(R1, {{0}, {0}, {1}}, {0.25, 0.25, 0.5});
  EXPECT_EQ(mu.size(), 2u);
  EXPECT_THROW(DiscreteMeasure(R1, {{0}}, {0.5}), Error);
  EXPECT_THROW(DiscreteMeasure(R1, {{0}, {1}}, {1.5, -0.5}), Error);
}

TEST(W1Permutation, SmallCases) {
  EXPECT_DOUBLE_EQ(w1_permutation(R2, {{0, 0}}, {{3, 4}}), 5.0);
  EXPECT_EQ(w1_permutation(R2, {{0, 0}, {1, 1}}, {{1, 1}, {0, 0}}), 0.0);
  EXPECT_THROW(w1_permutation(R1, {{0}}, {{0}, {1}}), Error);
  std::vector<Point> nine(9, Point{0});
  EXPECT_THROW(w1_permutation(R1, nine, nine), Error);
}

TEST(W1, MatchesPermutationOracle) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    std::size_t N = 1 + rng.below(6);
    auto ys = tools::random_points(rng, N, 2, 0, 1), zs = tools::random_points(rng, N, 2, 0, 1);
    double flow = w1_distance(DiscreteMeasure::uniform(R2, ys), DiscreteMeasure::uniform(R2, zs)).value;
    EXPECT_NEAR(flow, w1_permutation(R2, ys, zs), 1e-9);
  }
}

TEST(W1, MatchesRationalWeightOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(100 + seed);
    const int N = 2 + static_cast<int>(rng.below(6));
    auto split = [&](std::size_t atoms) {
      std::vector<int> k(atoms, 0);
      for (int u = 0; u < N; ++u) ++k[rng.below(atoms)];
      return k;
    };
    std::size_t m1 = 1 + rng.below(4), m2 = 1 + rng.below(4);
    auto ys = tools::random_points(rng, m1, 2, 0, 1), zs = tools::random_points(rng, m2, 2, 0, 1);
    auto ky = split(m1), kz = split(m2);
    std::vector<double> wy, wz;
    for (int k : ky) wy.push_back(static_cast<double>(k) / N);
    for (int k : kz) wz.push_back(static_cast<double>(k) / N);
    double flow = w1_distance(DiscreteMeasure(R2, ys, wy), DiscreteMeasure(R2, zs, wz)).value;
    EXPECT_NEAR(flow, oracle::rational_w1(R2, ys, ky, zs, kz), 1e-9);
  }
}

TEST(W1, PlanIsFeasible) {
  Rng rng(3);
  auto ys = tools::random_points(rng, 5, 2, 0, 1), zs = tools::random_points(rng, 4, 2, 0, 1);
  auto wy = tools::random_probability(rng, 5), wz = tools::random_probability(rng, 4);
  DiscreteMeasure mu(R2, ys, wy), nu(R2, zs, wz);
  auto r = w1_distance(mu, nu);
  double cost = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < nu.size(); ++j) {
      EXPECT_GE(r.plan.flow[i][j], 0.0);
      row += r.plan.flow[i][j];
      cost += r.plan.flow[i][j] * R2.distance(mu.support()[i], nu.support()[j]);
    }
    EXPECT_NEAR(row, mu.weights()[i], 1e-12);
  }
  EXPECT_NEAR(cost, r.value, 1e-12);
}

TEST(Espinola, EqualWeightsAndForcedCase) {
  std::vector<Point> pts{{0, 0}, {1, 0}, {0, 2}};
  auto eq = espinola_check(R2, pts, {0.2, 0.3, 0.5}, {0.2, 0.3, 0.5});
  EXPECT_EQ(eq.w1, 0.0);
  EXPECT_EQ(eq.bound, 0.0);
  EXPECT_TRUE(eq.passed);
  auto forced = espinola_check(R2, {{0, 0}, {3, 4}}, {1, 0}, {0, 1});
  EXPECT_DOUBLE_EQ(forced.w1, 5.0);
  EXPECT_DOUBLE_EQ(forced.bound, 5.0);
  EXPECT_TRUE(forced.passed);
}

TEST(Espinola, RandomSweep) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(1000 + seed);
    std::size_t n = 2 + rng.below(5);
    auto pts = tools::random_points(rng, n, 2, 0, 1);
    auto r = espinola_check(R2, pts, tools::random_probability(rng, n), tools::random_probability(rng, n));
    EXPECT_GE(r.margin, -1e-9);
  }
}

TEST(Barycenter, DiracAndMidpoint) {
  Point x{1.5, -2, 7}, y{0.5, 4, 1};
  TargetSpace T = TargetSpace::normed(3);
  EXPECT_EQ(barycenter(DiscreteMeasure::dirac(T, x)), x);
  Point m = barycenter(DiscreteMeasure(T, {x, y}, {0.5, 0.5}));
  for (int c = 0; c < 3; ++c) EXPECT_DOUBLE_EQ(m[c], (x[c] + y[c]) / 2);
}

TEST(Barycenter, OneLipschitzForEachNorm) {
  for (Norm norm : {Norm::L1, Norm::L2, Norm::LInf}) {
    TargetSpace T = TargetSpace::normed(3, norm);
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
      Rng rng(seed * 7 + static_cast<std::uint64_t>(norm));
      std::size_t a = 1 + rng.below(4), b = 1 + rng.below(4);
      DiscreteMeasure mu(T, tools::random_points(rng, a, 3, -1, 1), tools::random_probability(rng, a));
      DiscreteMeasure nu(T, tools::random_points(rng, b, 3, -1, 1), tools::random_probability(rng, b));
      EXPECT_LE(T.distance(barycenter(mu), barycenter(nu)), w1_distance(mu, nu).value + 1e-9);
    }
  }
}

TEST(Barycenter, MidpointTargetUnsupported) {
  TargetSpace M = TargetSpace::midpoint({{0}}, {{0}});
  try {
    barycenter(DiscreteMeasure::dirac(M, {0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedTarget);
  }
}
