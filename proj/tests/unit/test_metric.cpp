#include <gtest/gtest.h>

#include "lipext/errors.hpp"
#include "lipext/metric.hpp"
#include "lipext/random.hpp"
#include "lipext/target.hpp"
#include "lipext_tools/instances.hpp"
#include "oracles.hpp"

using namespace lipext;

namespace {

FiniteMetricSpace line(std::vector<double> xs) {
  PointCloud pc;
  for (double x : xs) pc.coords.push_back({x});
  return pc.metric();
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InternalError;
}

}  // namespace

TEST(Metric, SinglePoint) {
  auto X = FiniteMetricSpace::validated({{0}});
  EXPECT_EQ(X.size(), 1u);
  EXPECT_EQ(X.diameter(), 0.0);
}

TEST(Metric, TwoPoints) {
  auto X = FiniteMetricSpace::validated({{0, 1}, {1, 0}});
  EXPECT_EQ(X.size(), 2u);
  EXPECT_EQ(X.d(0, 1), 1.0);
}

TEST(Metric, TriangleViolationNamesTriple) {
  try {
    FiniteMetricSpace::validated({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TriangleViolation);
    EXPECT_NE(std::string(e.what()).find("(0,2,1)"), std::string::npos) << e.what();
  }
}

TEST(Metric, ValidationErrors) {
  EXPECT_EQ(code_of([] { FiniteMetricSpace::validated({{0, 1}, {1}}); }), ErrorCode::NotSquare);
  EXPECT_EQ(code_of([] { FiniteMetricSpace::validated({{1, 1}, {1, 0}}); }), ErrorCode::NonZeroDiagonal);
  EXPECT_EQ(code_of([] { FiniteMetricSpace::validated({{0, 1}, {2, 0}}); }), ErrorCode::AsymmetricMatrix);
  EXPECT_EQ(code_of([] { FiniteMetricSpace::validated({{0, -1}, {-1, 0}}); }), ErrorCode::NegativeDistance);
  EXPECT_EQ(code_of([] { FiniteMetricSpace::validated({{0, 0}, {0, 0}}); }), ErrorCode::DuplicatePoints);
}

TEST(Metric, NormDistances) {
  Point a{0, 0}, b{3, 4};
  EXPECT_DOUBLE_EQ(norm_distance(a, b, Norm::L1), 7);
  EXPECT_DOUBLE_EQ(norm_distance(a, b, Norm::L2), 5);
  EXPECT_DOUBLE_EQ(norm_distance(a, b, Norm::LInf), 4);
  EXPECT_EQ(parse_norm("linf"), Norm::LInf);
  EXPECT_FALSE(parse_norm("l3"));
}

TEST(Certify, IdentityAndConstant) {
  auto X = line({0, 1, 3, 7});
  std::vector<Point> id{{0}, {1}, {3}, {7}}, cst{{2}, {2}, {2}, {2}};
  EXPECT_DOUBLE_EQ(certify_lipschitz(X, id, TargetSpace::normed(1)).constant, 1.0);
  EXPECT_EQ(certify_lipschitz(X, cst, TargetSpace::normed(1)).constant, 0.0);
  auto one = line({5});
  EXPECT_EQ(certify_lipschitz(one, {{1}}, TargetSpace::normed(1)).constant, 0.0);
}

TEST(Certify, ThreePointWitness) {
  auto X = line({0, 1, 3});
  auto c = certify_lipschitz(X, {{0}, {2}, {4}}, TargetSpace::normed(1));
  EXPECT_DOUBLE_EQ(c.constant, 2.0);
  EXPECT_EQ(c.i, 0u);
  EXPECT_EQ(c.j, 1u);
  EXPECT_EQ(c.pair_count, 3u);
}

TEST(Certify, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    PointCloud pc;
    pc.coords = tools::random_points(rng, 5 + rng.below(60), 2, 0, 1);
    auto X = pc.metric();
    auto vals = tools::random_points(rng, X.size(), 3, 0, 1);
    for (Norm n : {Norm::L1, Norm::L2, Norm::LInf}) {
      TargetSpace T = TargetSpace::normed(3, n);
      EXPECT_EQ(certify_lipschitz(X, vals, T).constant, oracle::lipschitz(X, vals, T));
    }
  }
}

TEST(Sets, DistancesAndHausdorff) {
  auto X = line({0, 1, 2});
  EXPECT_EQ(dist_to_set(X, 1, {1, 2}), 0.0);
  EXPECT_EQ(hausdorff_to(X, {1}, {0, 1}), 0.0);
  EXPECT_DOUBLE_EQ(hausdorff_to(X, {1, 2}, {0}), 2.0);
  EXPECT_DOUBLE_EQ(set_distance(X, {1, 2}, {0}), 1.0);
  EXPECT_EQ(ball(X, 0, 1.0), (Subset{0, 1}));
  EXPECT_EQ(code_of([&] { dist_to_set(X, 0, {}); }), ErrorCode::EmptySubset);
}

TEST(Sets, GreedyNet) {
  auto X = line({0, 0.5, 1});
  EXPECT_EQ(greedy_separated_net(X, {0, 1, 2}, 0.6), (Subset{0, 2}));
  EXPECT_EQ(greedy_separated_net(X, {1}, 0.6), (Subset{1}));
  EXPECT_EQ(greedy_separated_net(X, {0, 1, 2}, 5.0), (Subset{0}));
}

TEST(Sets, NearestTieBreak) {
  auto X = line({0, 1, 2});
  EXPECT_EQ(nearest_in(X, 0, {0, 2}), 0u);
  EXPECT_EQ(nearest_in(X, 1, {0, 2}), 0u);
  auto Y = line({0, 1.5, 2});
  EXPECT_EQ(nearest_in(Y, 1, {0, 2}), 2u);
}

TEST(Sets, SubsetHelpers) {
  auto X = line({0, 1, 2, 3});
  EXPECT_EQ(make_subset(X, {3, 1}), (Subset{1, 3}));
  EXPECT_EQ(complement(X, {1, 3}), (Subset{0, 2}));
  EXPECT_EQ(code_of([&] { make_subset(X, {1, 1}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([&] { make_subset(X, {4}); }), ErrorCode::IndexOutOfRange);
  auto sub = X.subspace({1, 3});
  EXPECT_DOUBLE_EQ(sub.d(0, 1), 2.0);
}
