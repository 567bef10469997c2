#include <gtest/gtest.h>

#include <cmath>

#include "lipext/errors.hpp"
#include "lipext/random.hpp"
#include "lipext/simplicial.hpp"

using namespace lipext;

namespace {

SimplexPoint pt(std::vector<std::pair<std::size_t, double>> c) { return make_simplex_point(nullptr, std::move(c)); }

}  // namespace

TEST(L2Distance, Basics) {
  auto p = pt({{0, 0.3}, {1, 0.7}});
  EXPECT_EQ(l2_distance(p, p), 0.0);
  EXPECT_DOUBLE_EQ(l2_distance(vertex_point(nullptr, 0), vertex_point(nullptr, 5)), std::sqrt(2.0));
  // midpoints of the disjoint edges {0,1} and {2,3}
  EXPECT_DOUBLE_EQ(l2_distance(pt({{0, 0.5}, {1, 0.5}}), pt({{2, 0.5}, {3, 0.5}})), 1.0);
  auto K = SimplicialComplex::from_simplices({{0, 1}});
  try {
    l2_distance(vertex_point(&K, 0), vertex_point(nullptr, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DifferentComplexes);
  }
}

TEST(Complex, MaximalSimplices) {
  auto K = SimplicialComplex::from_simplices({{0, 1}, {0, 1, 2}, {3}, {2, 3}});
  EXPECT_EQ(K.maximal(), (std::vector<Simplex>{{0, 1, 2}, {2, 3}}));
  EXPECT_EQ(K.dimension(), 2);
  EXPECT_TRUE(K.has_simplex({1, 2}));
  EXPECT_FALSE(K.has_simplex({1, 3}));
  EXPECT_FALSE(K.pure());
  EXPECT_TRUE(K.connected());
}

TEST(Route, PointInIntersection) {
  Simplex a{0, 1, 2}, b{1, 2, 3};
  auto x = pt({{1, 0.4}, {2, 0.6}});
  auto r = route_through_intersection(a, b, x, x);
  EXPECT_EQ(r.detour, 0.0);
  EXPECT_EQ(l2_distance(r.z, x), 0.0);
  EXPECT_TRUE(r.in_intersection);
}

TEST(Route, SharedVertexOppositeCorners) {
  Simplex a{0, 1, 2}, b{2, 3, 4};
  auto r = route_through_intersection(a, b, vertex_point(nullptr, 0), vertex_point(nullptr, 3));
  EXPECT_EQ(r.z.support(), (Simplex{2}));
  EXPECT_DOUBLE_EQ(r.detour, 2 * std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(r.direct, std::sqrt(2.0));
  EXPECT_LE(r.detour, 4 * std::sqrt(2.0) * r.direct);
}

TEST(Route, Disjoint) {
  try {
    route_through_intersection({0, 1}, {2, 3}, vertex_point(nullptr, 0), vertex_point(nullptr, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DisjointSimplices);
  }
}

TEST(Route, RandomPairsWithinSharperConstant) {
  Rng rng(5);
  for (int k = 0; k < 2000; ++k) {
    std::size_t n = 1 + static_cast<std::size_t>(k % 6);
    Simplex a, b;
    for (std::size_t v = 0; v <= n; ++v) a.push_back(v);
    std::size_t shift = 1 + rng.below(n);
    for (std::size_t v = shift; v <= n + shift; ++v) b.push_back(v);
    auto x = random_point_in(nullptr, a, rng), y = random_point_in(nullptr, b, rng);
    auto r = route_through_intersection(a, b, x, y);
    EXPECT_TRUE(r.in_intersection);
    EXPECT_LE(r.detour, 2 * std::sqrt(2.0) * std::sqrt(static_cast<double>(n)) * r.direct * (1 + 1e-12));
  }
}

TEST(Probe, SingleSimplex) {
  auto K = SimplicialComplex::from_simplices({{0, 1, 2}});
  auto rep = quasiconvexity_probe(K, 200, 1);
  EXPECT_NEAR(rep.max_ratio, 1.0, 1e-12);
}

TEST(Probe, TwoTrianglesAndChain) {
  auto K = SimplicialComplex::from_simplices({{0, 1, 2}, {2, 3, 4}});
  auto rep = quasiconvexity_probe(K, 500, 2);
  EXPECT_LE(rep.max_ratio, 4 * std::sqrt(2.0));
  auto chain = SimplicialComplex::from_simplices({{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 5}});
  auto rc = quasiconvexity_probe(chain, 500, 3);
  EXPECT_LE(rc.max_ratio, rc.bound);
  EXPECT_THROW(quasiconvexity_probe(SimplicialComplex::from_simplices({{0, 1, 2}, {3, 4}}), 10, 1), Error);
  EXPECT_THROW(quasiconvexity_probe(SimplicialComplex::from_simplices({{0, 1}, {2, 3}}), 10, 1), Error);
}

TEST(Barycentric, ConstantAndEdge) {
  TargetSpace T = TargetSpace::normed(2);
  BarycentricExtensor cst(T, {{0, {1, 1}}, {1, {1, 1}}, {2, {1, 1}}});
  EXPECT_EQ(cst(pt({{0, 0.2}, {1, 0.3}, {2, 0.5}})), (Point{1, 1}));
  BarycentricExtensor e(T, {{0, {0, 2}}, {1, {4, 0}}});
  Point m = e(pt({{0, 0.5}, {1, 0.5}}));
  EXPECT_DOUBLE_EQ(m[0], 2);
  EXPECT_DOUBLE_EQ(m[1], 1);
  EXPECT_THROW(e(pt({{0, 0.5}, {7, 0.5}})), Error);
}

TEST(Barycentric, AgreesWithMeasureRouteAndConstant) {
  TargetSpace T = TargetSpace::normed(3);
  Rng rng(8);
  for (int k = 0; k < 100; ++k) {
    std::size_t n = 1 + static_cast<std::size_t>(k % 5);
    Simplex s;
    std::map<std::size_t, Point> vals;
    for (std::size_t v = 0; v <= n; ++v) {
      s.push_back(v);
      vals[v] = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    }
    BarycentricExtensor F(T, vals);
    auto p = random_point_in(nullptr, s, rng);
    Point a = F(p), b = F.via_barycenter(p);
    for (int c = 0; c < 3; ++c) EXPECT_NEAR(a[c], b[c], 1e-12);
    auto C = measure_simplex_constant(nullptr, s, T, [&](const SimplexPoint& q) { return F(q); }, 4);
    // affine maps: |F(p)-F(q)| <= (max |y_i - y_j| / 2) |p-q|_1
    EXPECT_LE(C.ratio, std::sqrt((static_cast<double>(n) + 1) / 2) * (1 + 1e-12));
  }
}

TEST(Skeletal, EdgesAreLinear) {
  TargetSpace T = TargetSpace::normed(1);
  auto K = SimplicialComplex::from_simplices({{0, 1}, {1, 2}});
  SkeletalExtensor F(K, T, {{0, {0}}, {1, {3}}, {2, {1}}});
  EXPECT_DOUBLE_EQ(F(make_simplex_point(&K, {{0, 0.25}, {1, 0.75}}))[0], 2.25);
  EXPECT_DOUBLE_EQ(F(vertex_point(&K, 2))[0], 1.0);
  auto C = measure_simplex_constant(&K, {0, 1}, T, [&](const SimplexPoint& q) { return F(q); }, 8);
  EXPECT_NEAR(C.ratio, 1.0, 1e-12);
}

TEST(Skeletal, TriangleWithinConeStepBound) {
  TargetSpace T = TargetSpace::normed(2);
  Rng rng(4);
  auto K = SimplicialComplex::from_simplices({{0, 1, 2}});
  for (int k = 0; k < 10; ++k) {
    std::map<std::size_t, Point> vals;
    for (std::size_t v = 0; v < 3; ++v) vals[v] = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    SkeletalExtensor F(K, T, vals, 16);
    for (std::size_t v = 0; v < 3; ++v) EXPECT_EQ(F(vertex_point(&K, v)), vals[v]);
    auto C = measure_simplex_constant(&K, {0, 1, 2}, T, [&](const SimplexPoint& q) { return F(q); }, 12);
    EXPECT_LE(C.ratio, cone_step_bound(2, std::sqrt(3.0)));
    EXPECT_LE(C.ratio, skeletal_bound(2, std::sqrt(3.0)));
  }
}

TEST(Skeletal, BoundFormulas) {
  EXPECT_NEAR(skeletal_bound(2, std::sqrt(3.0)), 3 * std::sqrt(2.0) * std::sqrt(2.0) * 4, 1e-12);
  EXPECT_NEAR(cone_step_bound(2, std::sqrt(3.0)), 2 * 4 * std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(skeletal_bound(1, 2.0), 2.0, 1e-12);
}
