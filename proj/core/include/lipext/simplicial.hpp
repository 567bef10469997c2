#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lipext/metric.hpp"
#include "lipext/random.hpp"
#include "lipext/target.hpp"

namespace lipext {

using Simplex = std::vector<std::size_t>;  // sorted vertex ids

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Keeps only the maximal simplices of the given family.
  static SimplicialComplex from_simplices(std::vector<Simplex> simplices);

  const std::vector<std::size_t>& vertices() const { return vertices_; }
  const std::vector<Simplex>& maximal() const { return maximal_; }
  long dimension() const;
  bool has_simplex(const Simplex& s) const;
  bool pure() const;
  bool connected() const;

 private:
  std::vector<std::size_t> vertices_;
  std::vector<Simplex> maximal_;
};

// Point of the simplex space with positive sparse barycentric coordinates.
struct SimplexPoint {
  const SimplicialComplex* complex = nullptr;  // null: the full simplex space
  std::vector<std::pair<std::size_t, double>> coords;

  Simplex support() const;
  double weight(std::size_t v) const;
};

// Drops zero weights, sorts by vertex and checks the sum and the support.
SimplexPoint make_simplex_point(const SimplicialComplex* complex, std::vector<std::pair<std::size_t, double>> coords);
SimplexPoint vertex_point(const SimplicialComplex* complex, std::size_t v);
SimplexPoint simplex_barycenter(const SimplicialComplex* complex, const Simplex& s);

double l2_distance(const SimplexPoint& p, const SimplexPoint& q);

struct RouteResult {
  SimplexPoint z;
  double detour = 0.0;  // |x-z| + |z-y|
  double direct = 0.0;  // |x-y|
  std::size_t n = 0;
  bool in_intersection = false;
};

// z in the intersection with |x-z| + |z-y| <= 4 sqrt(n) |x-y|.
RouteResult route_through_intersection(const Simplex& delta, const Simplex& delta2, const SimplexPoint& x,
                                       const SimplexPoint& y);

struct ProbeReport {
  double max_ratio = 1.0;
  double bound = 0.0;  // N^(10 ln n)
  std::size_t N = 0;
  std::size_t n = 0;
  std::size_t samples = 0;
  bool asserted = false;
};

SimplexPoint random_point_in(const SimplicialComplex* complex, const Simplex& s, Rng& rng);

ProbeReport quasiconvexity_probe(const SimplicialComplex& complex, std::size_t samples, std::uint64_t seed);

class BarycentricExtensor {
 public:
  BarycentricExtensor(TargetSpace target, std::map<std::size_t, Point> values);
  Point operator()(const SimplexPoint& p) const;
  // Same value through the barycenter of sum p_i delta_{f(v_i)}.
  Point via_barycenter(const SimplexPoint& p) const;
  const TargetSpace& target() const { return target_; }
  const Point& value(std::size_t v) const;

 private:
  TargetSpace target_;
  std::map<std::size_t, Point> values_;
};

// Extension skeleton by skeleton: edges linear, higher faces coned from the
// apex (mean of boundary values on a 1/mesh grid) inside the inscribed
// ball and radially constant outside it.
class SkeletalExtensor {
 public:
  SkeletalExtensor(const SimplicialComplex& complex, TargetSpace target, std::map<std::size_t, Point> values,
                   std::size_t mesh = 16);
  Point operator()(const SimplexPoint& p) const;
  const TargetSpace& target() const { return target_; }
  std::size_t mesh() const { return mesh_; }

 private:
  Point eval(const std::vector<std::pair<std::size_t, double>>& coords) const;
  Point apex_of(const Simplex& face);

  TargetSpace target_;
  std::map<std::size_t, Point> values_;
  std::map<Simplex, Point> apex_;
  std::size_t mesh_;
};

// lambda^n (sqrt 2)^(n-1) sqrt(n) (n!)^2
double skeletal_bound(std::size_t n, double lambda);
// sqrt(2 + 2/(n-1)) n^2 lambda
double cone_step_bound(std::size_t n, double lambda);

// Barycentric grid of mesh 1/m on a simplex.
std::vector<SimplexPoint> simplex_grid(const SimplicialComplex* complex, const Simplex& s, std::size_t m);

struct SimplexConstant {
  double map_constant = 0.0;     // Lip of the map on the grid
  double vertex_constant = 0.0;  // Lip on the vertices
  double ratio = 0.0;
};

template <class F>
SimplexConstant measure_simplex_constant(const SimplicialComplex* complex, const Simplex& s, const TargetSpace& target,
                                         const F& map, std::size_t mesh) {
  std::vector<SimplexPoint> grid = simplex_grid(complex, s, mesh);
  std::vector<Point> vals;
  vals.reserve(grid.size());
  for (const auto& p : grid) vals.push_back(map(p));
  SimplexConstant out;
  for (std::size_t a = 0; a < grid.size(); ++a)
    for (std::size_t b = a + 1; b < grid.size(); ++b) {
      double d = l2_distance(grid[a], grid[b]);
      out.map_constant = std::max(out.map_constant, target.distance(vals[a], vals[b]) / d);
    }
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      Point fa = map(vertex_point(complex, s[a])), fb = map(vertex_point(complex, s[b]));
      out.vertex_constant = std::max(out.vertex_constant, target.distance(fa, fb) / std::sqrt(2.0));
    }
  out.ratio = out.vertex_constant > 0 ? out.map_constant / out.vertex_constant : 0.0;
  return out;
}

}  // namespace lipext
