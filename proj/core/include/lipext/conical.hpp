#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "lipext/metric.hpp"
#include "lipext/target.hpp"

namespace lipext {

// Mean chordal distance from a fixed point of the unit sphere S^n, by
// adaptive Gauss-Kronrod quadrature over the polar angle; 1 <= n <= 6.
double sphere_constant(int n);

// Deterministic samples of S^m in R^(m+1): 2048 equally spaced points for
// m = 1, a 4096-point Fibonacci lattice for m = 2.
std::vector<Point> sphere_samples(int m, std::size_t count = 0);

// F(t u) = p + t (f(u) - p) over the cone on sampled sphere points.
class ConicalExtension {
 public:
  ConicalExtension(std::vector<Point> sphere, std::vector<Point> values, TargetSpace target, Point apex);

  Point evaluate(std::size_t sample, double t) const;
  double radius() const { return R_; }          // max |f(u) - p|
  double sphere_constant() const { return L_; } // Lip of f on the samples
  double bound() const;                          // sqrt(1 + (R/L)^2) L
  const std::vector<Point>& sphere() const { return sphere_; }
  const TargetSpace& target() const { return target_; }

 private:
  std::vector<Point> sphere_, values_;
  TargetSpace target_;
  Point apex_;
  double R_ = 0.0, L_ = 0.0;
};

ConicalExtension conical_extend(std::vector<Point> sphere, std::vector<Point> values, TargetSpace target, Point apex);

struct ConicalCheck {
  double empirical = 0.0;
  double bound = 0.0;  // sqrt(1 + (R/L)^2) L (1 + 1e-6)
  std::size_t pairs = 0;
  bool ok = false;
};

// Half the pairs are uniform over the ball, half are local perturbations.
ConicalCheck check_conical(const ConicalExtension& ext, std::size_t pairs, std::uint64_t seed);

struct TightnessProbe {
  std::size_t K = 0;
  double R = 0.0;           // W1(p, delta_x)
  double target = 0.0;      // sqrt(1 + R^2)
  double best_ratio = 0.0;  // largest sampled W1 ratio
};

// Cone over x -> delta_x on K equally spaced circle points with the
// uniform measure as apex, distances by the W1 solver.
TightnessProbe wasserstein_circle_probe(std::size_t K);

// Convex polygon containing the origin in its interior.
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<Point> vertices);
  double gauge(const Point& x) const;  // Minkowski functional
  double inradius() const { return r_; }
  double circumradius() const { return R_; }
  Point boundary_point(const Point& direction) const;

 private:
  std::vector<Point> v_;
  double r_ = 0.0, R_ = 0.0;
};

struct PolygonExtensionCheck {
  double empirical = 0.0;
  double boundary_constant = 0.0;
  double bound = 0.0;  // (R/r)^2 sqrt(1 + (Rf/L)^2) L
  bool ok = false;
};

// Radial cone extension of a boundary map into the polygon.
PolygonExtensionCheck polygon_cone_check(const ConvexPolygon& K, const std::function<Point(const Point&)>& f,
                                         const TargetSpace& target, const Point& apex, std::size_t samples,
                                         std::uint64_t seed);

}  // namespace lipext
