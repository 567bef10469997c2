#include <gtest/gtest.h>

#include <cmath>

#include "lipext/errors.hpp"
#include "lipext/partition.hpp"
#include "lipext/whitney.hpp"
#include "lipext_tools/instances.hpp"

using namespace lipext;

namespace {

PointCloud line_cloud(std::vector<double> xs) {
  PointCloud pc;
  for (double x : xs) pc.coords.push_back({x});
  return pc;
}

// Hand-made cover of X \ A, trusted as verified.
WhitneyCovering manual(std::vector<Subset> blocks, Subset A, std::size_t n) {
  WhitneyCovering c;
  c.base.blocks = std::move(blocks);
  c.A = std::move(A);
  c.params = {n, 1.0, 0.5, 1.0};
  c.verified = true;
  return c;
}

}  // namespace

TEST(Partition, SingleBlock) {
  auto X = line_cloud({0, 2}).metric();
  auto pou = build_partition(X, manual({{1}}, {0}, 0));
  ASSERT_EQ(pou.weights[1].size(), 1u);
  EXPECT_EQ(pou.weights[1][0].second, 1.0);
  auto rep = lipschitz_sum_report(pou);
  ASSERT_EQ(rep.points.size(), 1u);
  EXPECT_EQ(rep.points[0].sum, 0.0);
  EXPECT_LE(rep.points[0].sum, rep.points[0].bound);
}

TEST(Partition, TwoIdenticalBlocks) {
  auto X = line_cloud({0, 2, 2.1}).metric();
  auto pou = build_partition(X, manual({{1, 2}, {1, 2}}, {0}, 1));
  for (std::size_t x : {1, 2}) {
    ASSERT_EQ(pou.weights[x].size(), 2u);
    EXPECT_DOUBLE_EQ(pou.weights[x][0].second, 0.5);
    EXPECT_DOUBLE_EQ(pou.weights[x][1].second, 0.5);
    SimplexPoint p = nerve_map(pou, x);
    EXPECT_EQ(p.support(), (Simplex{0, 1}));
  }
  SimplicialComplex K = nerve_of_cover(pou);
  EXPECT_EQ(K.maximal(), (std::vector<Simplex>{{0, 1}}));
}

TEST(Partition, IntegerLineSumsToOne) {
  auto pc = line_cloud({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  auto X = pc.metric();
  auto cov = build_whitney_cover(X, {0}, 1.25, grid_oracle(pc, {0}));
  auto pou = build_partition(X, cov);
  EXPECT_NEAR(pou.exponent, std::log(3.0 * (grid_constants(1).n + 1)), 1e-15);
  for (std::size_t x = 1; x <= 10; ++x) {
    double s = 0.0;
    for (auto& [i, w] : evaluate_weights(pou, x)) s += w;
    EXPECT_NEAR(s, 1.0, 1e-12);
  }
  try {
    evaluate_weights(pou, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PointInDomain);
  }
}

TEST(Partition, SupportAndNerveOnPlanarInstances) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = tools::planar_instance(40 + seed, 50, 12, 1, 1.0);
    const Subset& A = inst.f.domain;
    auto cov = build_whitney_cover(inst.space, A, 1.25, grid_oracle(inst.cloud, A));
    auto pou = build_partition(inst.space, cov);
    SimplicialComplex K = nerve_of_cover(pou);
    EXPECT_LE(K.dimension(), static_cast<long>(cov.params.n));
    for (std::size_t x : complement(inst.space, A)) {
      const auto& w = evaluate_weights(pou, x);
      EXPECT_LE(w.size(), 3 * (grid_constants(2).n + 1));
      SimplexPoint p = nerve_map(pou, x);
      EXPECT_EQ(p.support().size(), w.size());
      EXPECT_TRUE(K.has_simplex(p.support()));
    }
  }
}

TEST(Partition, ExponentRules) {
  WhitneyParams p{5, 1, 1, 1};
  EXPECT_DOUBLE_EQ(partition_exponent(p, ExponentRule::Basic), std::log(6.0));
  EXPECT_DOUBLE_EQ(partition_exponent(p, ExponentRule::General), std::log2(7.0));
}

TEST(Partition, RequiresVerifiedCover) {
  auto X = line_cloud({0, 2}).metric();
  auto c = manual({{1}}, {0}, 0);
  c.verified = false;
  EXPECT_THROW(build_partition(X, c), Error);
}

TEST(Partition, DenseLineLipschitzSums) {
  auto pc = tools::line_cloud({0.0}, 1.0, 0.005, 401);
  auto X = pc.metric();
  auto cov = build_whitney_cover(X, {0}, 1.25, grid_oracle(pc, {0}));
  auto rep = lipschitz_sum_report(build_partition(X, cov));
  EXPECT_TRUE(rep.dense);
  for (const auto& p : rep.points) {
    EXPECT_LE(p.sum, p.bound);
    EXPECT_GT(p.r_j, 0.0);
  }
}
