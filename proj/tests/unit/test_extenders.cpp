#include <gtest/gtest.h>

#include <cmath>

#include "lipext/errors.hpp"
#include "lipext/extenders.hpp"
#include "lipext/random.hpp"
#include "lipext_tools/instances.hpp"
#include "oracles.hpp"

using namespace lipext;

namespace {

PointCloud line_cloud(std::vector<double> xs) {
  PointCloud pc;
  for (double x : xs) pc.coords.push_back({x});
  return pc;
}

PartialMap scalar_map(Subset domain, std::vector<double> vals) {
  PartialMap f;
  f.domain = std::move(domain);
  for (double v : vals) f.values.push_back({v});
  return f;
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

TEST(McShane, SinglePointCone) {
  auto X = line_cloud({0, 1, 4, -2}).metric();
  auto r = mcshane_extend(X, scalar_map({0}, {3}), 1.0);
  for (std::size_t x = 0; x < 4; ++x) EXPECT_DOUBLE_EQ(r.values[x][0], 3 + X.d(0, x));
  EXPECT_TRUE(r.within_bound);
}

TEST(McShane, ThreePoints) {
  auto X = line_cloud({0, 1, 2}).metric();
  auto r = mcshane_extend(X, scalar_map({0, 2}, {0, 2}));
  EXPECT_DOUBLE_EQ(r.values[1][0], 1.0);
  EXPECT_DOUBLE_EQ(r.certificate.constant, 1.0);
}

TEST(McShane, ExactOnDomainAndLipschitz) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    PointCloud pc;
    pc.coords = tools::random_points(rng, 3 + rng.below(30), 2, 0, 10);
    auto X = pc.metric();
    Subset A;
    for (std::size_t i = 0; i < X.size(); ++i)
      if (rng.below(3) == 0 || i == 0) A.push_back(i);
    std::vector<double> v;
    for (std::size_t k = 0; k < A.size(); ++k) v.push_back(rng.uniform(-3, 3));
    auto f = scalar_map(A, v);
    auto r = mcshane_extend(X, f);
    for (std::size_t k = 0; k < A.size(); ++k) EXPECT_EQ(r.values[A[k]], f.values[k]);
    EXPECT_LE(oracle::lipschitz(X, r.values, f.target), r.lip_f + 1e-9);
  }
}

TEST(McShane, Errors) {
  auto X = line_cloud({0, 1, 2}).metric();
  PartialMap f;
  f.domain = {0};
  f.values = {{0, 0}};
  f.target = TargetSpace::normed(2);
  EXPECT_EQ(code_of([&] { mcshane_extend(X, f); }), ErrorCode::NonScalarTarget);
  EXPECT_EQ(code_of([&] { mcshane_extend(X, scalar_map({0, 2}, {0, 2}), 0.5); }), ErrorCode::InvalidArgument);
}

TEST(WhitneyExtend, DomainIsEverything) {
  auto pc = line_cloud({0, 1, 3});
  auto X = pc.metric();
  auto f = scalar_map({0, 1, 2}, {0, 0.5, 1});
  auto r = whitney_extend(X, f, grid_oracle(pc, {0, 1, 2}));
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(r.values[k], f.values[k]);
  EXPECT_DOUBLE_EQ(r.certificate.constant, r.lip_f);
}

TEST(WhitneyExtend, OneExteriorPointTakesAnchorValue) {
  auto pc = line_cloud({0, 1, 5});
  auto X = pc.metric();
  auto f = scalar_map({0, 1}, {2, 2.5});
  auto r = whitney_extend(X, f, grid_oracle(pc, {0, 1}));
  EXPECT_EQ(r.values[2][0], 2.5);
  EXPECT_TRUE(r.within_bound);
}

TEST(WhitneyExtend, PlanarWithinBound) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = tools::planar_instance(300 + seed, 60, 20, 2, 1.0);
    auto r = whitney_extend(inst.space, inst.f, grid_oracle(inst.cloud, inst.f.domain));
    auto k = grid_constants(2);
    EXPECT_LE(r.certificate.constant, 1000 * (k.c + 1) * std::log2(k.n + 2.0) * r.lip_f + 1e-9);
    EXPECT_TRUE(r.within_bound);
    for (std::size_t a = 0; a < inst.f.domain.size(); ++a) EXPECT_EQ(r.values[inst.f.domain[a]], inst.f.values[a]);
  }
}

TEST(LeeNaor, Cutoffs) {
  const std::size_t N = 2;
  EXPECT_EQ(lee_naor_omega(0.5, N), 0.0);
  EXPECT_DOUBLE_EQ(lee_naor_omega(0.75, N), 0.5);
  EXPECT_EQ(lee_naor_omega(1.0, N), 1.0);
  EXPECT_EQ(lee_naor_omega(4.0, N), 1.0);
  EXPECT_DOUBLE_EQ(lee_naor_omega(6.0, N), 0.5);
  EXPECT_EQ(lee_naor_omega(8.0, N), 0.0);
  EXPECT_EQ(lee_naor_levels(16), 1u);
  EXPECT_EQ(lee_naor_levels(64), 2u);
  EXPECT_EQ(lee_naor_levels(1000000), 3u);
  // sum over dyadic scales is N+1
  for (double d : {0.3, 1.0, 7.7}) {
    double s = 0;
    for (int m = -20; m <= 20; ++m) s += lee_naor_omega(std::ldexp(1.0, m) / (16 * d), N);
    EXPECT_NEAR(s, 3.0, 1e-12);
  }
}

TEST(LeeNaor, DomainTooSmall) {
  auto inst = tools::planar_instance(1, 30, 15, 1, 1.0);
  EXPECT_EQ(code_of([&] { lee_naor_extend(inst.space, inst.f, {}); }), ErrorCode::DomainTooSmall);
}

TEST(LeeNaor, ExtendsAndIsReproducible) {
  auto inst = tools::planar_instance(2, 50, 20, 2, 1.0);
  auto a = lee_naor_extend(inst.space, inst.f, {5, 500});
  auto b = lee_naor_extend(inst.space, inst.f, {5, 500});
  EXPECT_EQ(a.values, b.values);
  for (std::size_t k = 0; k < inst.f.domain.size(); ++k) EXPECT_EQ(a.values[inst.f.domain[k]], inst.f.values[k]);
  EXPECT_TRUE(a.within_bound);
}

TEST(Nerve, SingleBlockIsConstant) {
  auto pc = line_cloud({0, 1, 5, 5.2});
  auto X = pc.metric();
  auto f = scalar_map({0, 1}, {2, 2.5});
  auto cov = build_whitney_cover(X, {0, 1}, 1.25, grid_oracle(pc, {0, 1}));
  ASSERT_EQ(cov.base.size(), 1u);
  auto r = nerve_extend(X, f, cov);
  EXPECT_EQ(r.values[2][0], 2.5);
  EXPECT_EQ(r.values[3][0], 2.5);
}

TEST(Nerve, PlanarWithinBoundBothExtensors) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto inst = tools::planar_instance(600 + seed, 50, 15, 2, 1.0);
    auto cov = build_whitney_cover(inst.space, inst.f.domain, 1.25, grid_oracle(inst.cloud, inst.f.domain));
    auto bary = nerve_extend(inst.space, inst.f, cov, ExtensorKind::Barycentric);
    const auto& p = cov.params;
    EXPECT_LE(bary.certificate.constant, 100 * p.alpha / p.delta * p.gamma * std::log2(p.n + 2.0) + 1e-9);
    auto skel = nerve_extend(inst.space, inst.f, cov, ExtensorKind::Skeletal);
    EXPECT_TRUE(skel.within_bound);
    EXPECT_GE(skel.bound_constant, bary.bound_constant);
  }
}

TEST(Nerve, RequiresVerifiedCover) {
  auto pc = line_cloud({0, 1, 5});
  auto X = pc.metric();
  auto cov = build_whitney_cover(X, {0, 1}, 1.25, grid_oracle(pc, {0, 1}));
  cov.verified = false;
  EXPECT_EQ(code_of([&] { nerve_extend(X, scalar_map({0, 1}, {0, 1}), cov); }), ErrorCode::CoverNotVerified);
}

TEST(Constants, Logarithmic) {
  // 3e10 * 2^10 * (1e5)^2 * 2^6 for n = 1, c = 1, lambda = 1
  double expect = std::log10(3e10) + 10 * std::log10(2.0) + 10 + 6 * std::log10(2.0);
  EXPECT_NEAR(log10_detailed_constant(1, 1.0, 1.0), expect, 1e-12);
  EXPECT_NEAR(log10_headline_constant(2, 1.0, 10.0), 1e10 + 3 + 10 * std::log10(2.0), 1e-3);
}
