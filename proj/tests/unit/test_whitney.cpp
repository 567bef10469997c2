#include <gtest/gtest.h>

#include <cmath>

#include "lipext/errors.hpp"
#include "lipext/random.hpp"
#include "lipext/whitney.hpp"
#include "lipext_tools/instances.hpp"
#include "oracles.hpp"

using namespace lipext;

namespace {

PointCloud line_cloud(std::vector<double> xs) {
  PointCloud pc;
  for (double x : xs) pc.coords.push_back({x});
  return pc;
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

TEST(Whitney, OneExteriorPoint) {
  auto pc = line_cloud({0, 1, 3});
  auto X = pc.metric();
  auto cov = build_whitney_cover(X, {0, 1}, 1.25, grid_oracle(pc, {0, 1}));
  ASSERT_EQ(cov.base.blocks.size(), 1u);
  EXPECT_EQ(cov.base.blocks[0], (Subset{2}));
  EXPECT_TRUE(cov.report.ok());
}

TEST(Whitney, IntegerLineParameters) {
  auto pc = line_cloud({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  auto X = pc.metric();
  auto cov = build_whitney_cover(X, {0}, 1.25, grid_oracle(pc, {0}));
  const double c = grid_constants(1).c;
  EXPECT_NEAR(cov.params.alpha, 3 * (1 + c), 1e-12);
  EXPECT_NEAR(cov.params.delta, 0.04, 1e-15);
  EXPECT_NEAR(cov.params.gamma, 1.35, 1e-15);
  EXPECT_EQ(cov.params.n + 1, 3 * (grid_constants(1).n + 1));
  for (std::size_t i = 0; i < cov.base.size(); ++i)
    EXPECT_LE(X.diameter(cov.base.blocks[i]), 3 * (1 + c) * set_distance(X, cov.base.blocks[i], {0}));
  EXPECT_TRUE(verify_whitney(X, cov.base.blocks, {0}, cov.params).ok());
}

TEST(Whitney, MultiplicityOnRandomPlanar) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = tools::planar_instance(seed, 50, 10, 1, 1.0);
    const Subset& A = inst.f.domain;
    auto cov = build_whitney_cover(inst.space, A, 1.25, grid_oracle(inst.cloud, A));
    const std::size_t bound = 3 * (grid_constants(2).n + 1);
    for (std::size_t x : complement(inst.space, A)) {
      std::size_t count = 0;
      for (std::size_t i = 0; i < cov.base.size(); ++i) {
        double r = set_distance(inst.space, cov.base.blocks[i], A);
        count += dist_to_set(inst.space, x, cov.base.blocks[i]) < cov.params.delta * r;
      }
      EXPECT_LE(count, bound);
    }
    EXPECT_TRUE(verify_whitney(inst.space, cov.base.blocks, A, cov.params).ok());
  }
}

TEST(Whitney, Errors) {
  auto pc = line_cloud({0, 1, 2});
  auto X = pc.metric();
  EXPECT_EQ(code_of([&] { build_whitney_cover(X, {0, 1, 2}, 1.25, grid_oracle(pc, {0, 1, 2})); }),
            ErrorCode::EmptyComplement);
  // components of {0, 1} have diameter 1 > 0.5 s for s in (1, 2)
  auto Y = line_cloud({0, 1, 1.6, 2.5, 4, 7}).metric();
  EXPECT_EQ(code_of([&] { build_whitney_cover(Y, {0, 1}, 1.25, component_oracle(Y, {0, 1}, 0.5)); }),
            ErrorCode::OracleNotNagata);
}

TEST(VerifyWhitney, SingletonsAndDoubledDelta) {
  auto pc = line_cloud({0, 1, 1.1, 1.2, 3});
  auto X = pc.metric();
  std::vector<Subset> singles{{1}, {2}, {3}, {4}};
  EXPECT_TRUE(verify_whitney(X, singles, {0}, {3, 0.0, 0.01, 10.0}).diameter_ok);
  auto cov = build_whitney_cover(X, {0}, 1.25, grid_oracle(pc, {0}));
  WhitneyParams wide = cov.params;
  wide.delta *= 2;
  auto rep = verify_whitney(X, cov.base.blocks, {0}, wide);
  EXPECT_TRUE(rep.diameter_ok && rep.distance_ok);
  if (!rep.ok()) EXPECT_FALSE(rep.violations.empty());
  wide.n = 0;
  wide.delta = 100;
  auto bad = verify_whitney(X, singles, {0}, wide);
  EXPECT_FALSE(bad.multiplicity_ok);
  EXPECT_FALSE(bad.violations.empty());
}

TEST(Refined, DefaultR) {
  EXPECT_EQ(default_refined_r(1, 0.0), 64.0);
  EXPECT_EQ(default_refined_r(1, 1.0), 128.0);
  EXPECT_EQ(default_refined_r(2, 1.0), 512.0);
}

TEST(Refined, OneExteriorPoint) {
  auto pc = line_cloud({0, 5});
  auto X = pc.metric();
  auto cov = build_refined_whitney_cover(X, {0}, std::nullopt, component_oracle(X, {0}, 0.0));
  ASSERT_EQ(cov.base.size(), 1u);
  EXPECT_TRUE(cov.report.ok());
}

TEST(Refined, ClusterNearDomain) {
  Rng rng(11);
  PointCloud pc;
  pc.coords.push_back({0.0, 0.0});
  for (int k = 0; k < 10; ++k) pc.coords.push_back({1.0 + rng.uniform(-0.05, 0.05), rng.uniform(-0.05, 0.05)});
  auto X = pc.metric();
  auto cov = build_refined_whitney_cover(X, {0}, std::nullopt, component_oracle(X, {0}, 0.0));
  EXPECT_EQ(cov.params.n, 1u);
  double theta = std::pow(cov.r, 0.5);
  EXPECT_LE(oracle::whitney_subset_multiplicity(X, cov.base.blocks, {0}, theta), 2u);
  ASSERT_TRUE(cov.subset_multiplicity);
  EXPECT_EQ(cov.subset_multiplicity->multiplicity,
            oracle::whitney_subset_multiplicity(X, cov.base.blocks, {0}, theta));
}

TEST(Refined, SubsetSearchMatchesEnumeration) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Rng rng(seed);
    PointCloud pc = line_cloud({0.0, 0.7});
    for (int k = 0; k < 12; ++k) pc.coords.push_back({std::exp(rng.uniform(0.5, 9.0)) * (rng.below(2) ? 1 : -1)});
    auto X = pc.metric();
    auto cov = build_refined_whitney_cover(X, {0, 1}, std::nullopt, grid_oracle(pc, {0, 1}));
    EXPECT_EQ(cov.params.n, 2u);
    double theta = std::pow(cov.r, 1.0 / 4);
    std::size_t brute = oracle::whitney_subset_multiplicity(X, cov.base.blocks, {0, 1}, theta);
    EXPECT_LE(brute, 3u);
    EXPECT_EQ(refined_subset_multiplicity(X, cov.base.blocks, {0, 1}, theta, 256).multiplicity, brute);
    for (const auto& b : cov.base.blocks)
      EXPECT_LE(hausdorff_to(X, b, {0, 1}), cov.r * cov.r * set_distance(X, b, {0, 1}));
  }
}

TEST(Refined, RTooSmall) {
  auto X = line_cloud({0, 5}).metric();
  EXPECT_EQ(code_of([&] { build_refined_whitney_cover(X, {0}, 32.0, component_oracle(X, {0}, 0.0)); }),
            ErrorCode::RTooSmall);
}
