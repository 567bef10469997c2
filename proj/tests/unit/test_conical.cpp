#include <gtest/gtest.h>

#include <cmath>

#include "lipext/conical.hpp"
#include "lipext/errors.hpp"

using namespace lipext;

TEST(SphereConstant, KnownValues) {
  EXPECT_NEAR(sphere_constant(1), 4 / M_PI, 1e-6);
  EXPECT_NEAR(sphere_constant(2), 4.0 / 3.0, 1e-6);
  for (int n = 1; n <= 6; ++n) EXPECT_LE(sphere_constant(n), std::sqrt(2.0) + 1e-9);
  EXPECT_THROW(sphere_constant(0), Error);
  EXPECT_THROW(sphere_constant(7), Error);
}

TEST(SphereSamples, OnTheSphere) {
  for (int m : {1, 2}) {
    auto s = sphere_samples(m);
    EXPECT_EQ(s.size(), m == 1 ? 2048u : 4096u);
    for (const auto& p : s) EXPECT_NEAR(norm_of(p, Norm::L2), 1.0, 1e-12);
  }
}

TEST(Conical, IdentityCone) {
  auto sphere = sphere_samples(1);
  auto ext = conical_extend(sphere, sphere, TargetSpace::normed(2), {0, 0});
  Point p = ext.evaluate(5, 0.5);
  EXPECT_NEAR(p[0], 0.5 * sphere[5][0], 1e-15);
  EXPECT_NEAR(p[1], 0.5 * sphere[5][1], 1e-15);
  auto chk = check_conical(ext, 2000, 1);
  EXPECT_TRUE(chk.ok);
  EXPECT_NEAR(chk.empirical, 1.0, 1e-9);
  EXPECT_LE(chk.empirical, std::sqrt(2.0));
}

TEST(Conical, ConstantMap) {
  auto sphere = sphere_samples(2);
  std::vector<Point> vals(sphere.size(), Point{3, 1});
  auto ext = conical_extend(sphere, vals, TargetSpace::normed(2), {3, 1});
  auto chk = check_conical(ext, 1000, 2);
  EXPECT_EQ(chk.empirical, 0.0);
  EXPECT_TRUE(chk.ok);
}

TEST(Conical, ZeroSamples) {
  try {
    conical_extend({}, {}, TargetSpace::normed(1), {0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroSamples);
  }
}

TEST(Conical, WassersteinCircleTightness) {
  auto probe = wasserstein_circle_probe(64);
  EXPECT_NEAR(probe.target, std::sqrt(1 + probe.R * probe.R), 1e-12);
  EXPECT_GE(probe.best_ratio, probe.target - 0.05);
  EXPECT_LE(probe.best_ratio, probe.target + 1e-9);
}

TEST(Polygon, SquareGaugeAndCone) {
  ConvexPolygon sq({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}});
  EXPECT_DOUBLE_EQ(sq.gauge({0.5, 0.25}), 0.5);
  EXPECT_DOUBLE_EQ(sq.inradius(), 1.0);
  EXPECT_DOUBLE_EQ(sq.circumradius(), std::sqrt(2.0));
  Point b = sq.boundary_point({2, 1});
  EXPECT_DOUBLE_EQ(b[0], 1.0);
  EXPECT_DOUBLE_EQ(b[1], 0.5);
  auto chk = polygon_cone_check(
      sq, [](const Point& p) { return Point{p[0] * p[1], p[0]}; }, TargetSpace::normed(2), {0, 0}, 3000, 4);
  EXPECT_TRUE(chk.ok);
  EXPECT_LE(chk.empirical, chk.bound);
}
