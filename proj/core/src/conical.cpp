#include "lipext/conical.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "lipext/errors.hpp"
#include "lipext/random.hpp"
#include "lipext/transport.hpp"

namespace lipext {

double sphere_constant(int n) {
  if (n < 1 || n > 6) fail(ErrorCode::UnsupportedDimension, "sphere constant supports 1 <= n <= 6");
  using boost::math::quadrature::gauss_kronrod;
  const double pi = std::numbers::pi;
  auto density = [n](double th) { return std::pow(std::sin(th), n - 1); };
  double num = gauss_kronrod<double, 61>::integrate(
      [&](double th) { return 2 * std::sin(th / 2) * density(th); }, 0.0, pi, 15, 1e-12);
  double den = gauss_kronrod<double, 61>::integrate(density, 0.0, pi, 15, 1e-12);
  return num / den;
}

std::vector<Point> sphere_samples(int m, std::size_t count) {
  const double pi = std::numbers::pi;
  std::vector<Point> out;
  if (m == 1) {
    if (count == 0) count = 2048;
    for (std::size_t k = 0; k < count; ++k) {
      double th = 2 * pi * static_cast<double>(k) / static_cast<double>(count);
      out.push_back({std::cos(th), std::sin(th)});
    }
  } else if (m == 2) {
    if (count == 0) count = 4096;
    const double golden = pi * (3 - std::sqrt(5.0));
    for (std::size_t k = 0; k < count; ++k) {
      double z = 1 - (2 * static_cast<double>(k) + 1) / static_cast<double>(count);
      double rad = std::sqrt(std::max(0.0, 1 - z * z));
      double th = golden * static_cast<double>(k);
      out.push_back({rad * std::cos(th), rad * std::sin(th), z});
    }
  } else {
    fail(ErrorCode::UnsupportedDimension, "sphere samples exist for m = 1, 2");
  }
  return out;
}

ConicalExtension::ConicalExtension(std::vector<Point> sphere, std::vector<Point> values, TargetSpace target,
                                   Point apex)
    : sphere_(std::move(sphere)), values_(std::move(values)), target_(std::move(target)), apex_(std::move(apex)) {
  if (sphere_.empty()) fail(ErrorCode::ZeroSamples, "no sphere samples");
  if (values_.size() != sphere_.size()) fail(ErrorCode::DimensionMismatch, "one value per sphere sample");
  if (!target_.is_normed()) fail(ErrorCode::UnsupportedTarget, "conical extension uses the linear bicombing");
  target_.check_point(apex_);
  for (const auto& v : values_) {
    target_.check_point(v);
    R_ = std::max(R_, target_.distance(v, apex_));
  }
  for (std::size_t a = 0; a < sphere_.size(); ++a)
    for (std::size_t b = a + 1; b < sphere_.size(); ++b)
      L_ = std::max(L_, target_.distance(values_[a], values_[b]) / norm_distance(sphere_[a], sphere_[b], Norm::L2));
}

Point ConicalExtension::evaluate(std::size_t sample, double t) const {
  Point out(apex_.size());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = apex_[c] + t * (values_[sample][c] - apex_[c]);
  return out;
}

double ConicalExtension::bound() const {
  if (L_ == 0.0) return R_;
  return std::sqrt(1 + (R_ / L_) * (R_ / L_)) * L_;
}

ConicalExtension conical_extend(std::vector<Point> sphere, std::vector<Point> values, TargetSpace target, Point apex) {
  return ConicalExtension(std::move(sphere), std::move(values), std::move(target), std::move(apex));
}

ConicalCheck check_conical(const ConicalExtension& ext, std::size_t pairs, std::uint64_t seed) {
  Rng rng(seed);
  const auto& S = ext.sphere();
  const std::size_t n = S.size();
  ConicalCheck out;
  auto point = [&](std::size_t i, double t) {
    Point x = S[i];
    for (double& c : x) c *= t;
    return x;
  };
  for (std::size_t k = 0; k < pairs; ++k) {
    std::size_t i = rng.below(n), j;
    double t = std::sqrt(rng.uniform01()), s;
    if (k % 2 == 0) {
      j = rng.below(n);
      s = std::sqrt(rng.uniform01());
    } else {
      j = (i + 1 + rng.below(3)) % n;
      s = std::clamp(t + rng.uniform(-0.02, 0.02), 0.0, 1.0);
    }
    double d = norm_distance(point(i, t), point(j, s), Norm::L2);
    if (d < 1e-14) continue;
    double ratio = ext.target().distance(ext.evaluate(i, t), ext.evaluate(j, s)) / d;
    out.empirical = std::max(out.empirical, ratio);
    ++out.pairs;
  }
  out.bound = ext.bound() * (1 + 1e-6);
  out.ok = out.empirical <= out.bound;
  return out;
}

TightnessProbe wasserstein_circle_probe(std::size_t K) {
  if (K < 3) fail(ErrorCode::InvalidArgument, "circle needs at least 3 points");
  std::vector<Point> circle = sphere_samples(1, K);
  TargetSpace plane = TargetSpace::normed(2);
  auto cone_point = [&](std::size_t x, double t) {
    std::vector<double> w(K, (1 - t) / static_cast<double>(K));
    w[x] += t;
    return DiscreteMeasure(plane, circle, w);
  };
  TightnessProbe out;
  out.K = K;
  DiscreteMeasure p = DiscreteMeasure::uniform(plane, circle);
  out.R = w1_distance(p, DiscreteMeasure::dirac(plane, circle[0])).value;
  out.target = std::sqrt(1 + out.R * out.R);
  const double chord = norm_distance(circle[0], circle[1], Norm::L2);
  for (int step = 1; step <= 40; ++step) {
    double a = out.R * chord * static_cast<double>(step) / 20.0;
    if (a >= 1) break;
    double s = 1.0, r = 1.0 - a;
    double w1 = w1_distance(cone_point(0, s), cone_point(1, r)).value;
    Point xs = circle[0], yr = circle[1];
    for (double& c : yr) c *= r;
    out.best_ratio = std::max(out.best_ratio, w1 / norm_distance(xs, yr, Norm::L2));
  }
  return out;
}

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices) : v_(std::move(vertices)) {
  if (v_.size() < 3) fail(ErrorCode::InvalidArgument, "polygon needs at least 3 vertices");
  r_ = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v_.size(); ++i) {
    const Point &a = v_[i], &b = v_[(i + 1) % v_.size()];
    if (a.size() != 2) fail(ErrorCode::DimensionMismatch, "polygon vertices live in R^2");
    double cross = a[0] * b[1] - a[1] * b[0];
    if (!(cross > 0)) fail(ErrorCode::InvalidArgument, "polygon must be counter-clockwise around the origin");
    double len = norm_distance(a, b, Norm::L2);
    r_ = std::min(r_, cross / len);
    R_ = std::max(R_, norm_of(a, Norm::L2));
  }
}

double ConvexPolygon::gauge(const Point& x) const {
  double g = 0.0;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    const Point &a = v_[i], &b = v_[(i + 1) % v_.size()];
    // outward normal n with n . y = 1 on the edge
    double cross = a[0] * b[1] - a[1] * b[0];
    double nx = (b[1] - a[1]) / cross, ny = (a[0] - b[0]) / cross;
    g = std::max(g, nx * x[0] + ny * x[1]);
  }
  return g;
}

Point ConvexPolygon::boundary_point(const Point& direction) const {
  double g = gauge(direction);
  return {direction[0] / g, direction[1] / g};
}

PolygonExtensionCheck polygon_cone_check(const ConvexPolygon& K, const std::function<Point(const Point&)>& f,
                                         const TargetSpace& target, const Point& apex, std::size_t samples,
                                         std::uint64_t seed) {
  const double pi = std::numbers::pi;
  const std::size_t M = 720;
  std::vector<Point> bnd;
  std::vector<Point> vals;
  for (std::size_t k = 0; k < M; ++k) {
    double th = 2 * pi * static_cast<double>(k) / static_cast<double>(M);
    bnd.push_back(K.boundary_point({std::cos(th), std::sin(th)}));
    vals.push_back(f(bnd.back()));
  }
  PolygonExtensionCheck out;
  double Rf = 0.0;
  for (std::size_t a = 0; a < M; ++a) {
    Rf = std::max(Rf, target.distance(vals[a], apex));
    for (std::size_t b = a + 1; b < M; ++b)
      out.boundary_constant =
          std::max(out.boundary_constant, target.distance(vals[a], vals[b]) / norm_distance(bnd[a], bnd[b], Norm::L2));
  }
  auto F = [&](std::size_t k, double t) {
    Point o(apex.size());
    for (std::size_t c = 0; c < o.size(); ++c) o[c] = apex[c] + t * (vals[k][c] - apex[c]);
    return o;
  };
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    std::size_t i = rng.below(M), j = (s % 2 == 0) ? rng.below(M) : (i + 1 + rng.below(3)) % M;
    double t = rng.uniform01(), u = (s % 2 == 0) ? rng.uniform01() : std::clamp(t + rng.uniform(-0.02, 0.02), 0.0, 1.0);
    Point x{t * bnd[i][0], t * bnd[i][1]}, y{u * bnd[j][0], u * bnd[j][1]};
    double d = norm_distance(x, y, Norm::L2);
    if (d < 1e-14) continue;
    out.empirical = std::max(out.empirical, target.distance(F(i, t), F(j, u)) / d);
  }
  const double L = out.boundary_constant;
  const double ratio = K.circumradius() / K.inradius();
  out.bound = ratio * ratio * (L > 0 ? std::sqrt(1 + (Rf / L) * (Rf / L)) * L : Rf);
  out.ok = out.empirical <= out.bound * (1 + 1e-6);
  return out;
}

}  // namespace lipext
