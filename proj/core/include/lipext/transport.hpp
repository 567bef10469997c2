#pragma once

#include <cstddef>
#include <vector>

#include "lipext/target.hpp"

namespace lipext {

inline constexpr double kWeightTol = 1e-12;

// Finitely supported probability measure. Construction canonicalizes:
// equal support points are merged, zero weights dropped, and a total
// within kWeightTol of 1 is renormalized.
class DiscreteMeasure {
 public:
  DiscreteMeasure(TargetSpace target, std::vector<Point> support, std::vector<double> weights);
  static DiscreteMeasure dirac(TargetSpace target, Point x);
  static DiscreteMeasure uniform(TargetSpace target, std::vector<Point> support);

  const TargetSpace& target() const { return target_; }
  const std::vector<Point>& support() const { return support_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return support_.size(); }

 private:
  TargetSpace target_;
  std::vector<Point> support_;
  std::vector<double> weights_;
};

struct TransportPlan {
  std::vector<std::vector<double>> flow;  // rows: source atoms, cols: sink atoms
  double cost = 0.0;
};

struct W1Result {
  double value = 0.0;
  TransportPlan plan;
};

// Exact W1 by successive shortest paths on the bipartite support graph.
W1Result w1_distance(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

// min over permutations of (1/N) sum d(y_i, z_pi(i)); N <= 8.
double w1_permutation(const TargetSpace& target, const std::vector<Point>& ys, const std::vector<Point>& zs);

struct EspinolaReport {
  double w1 = 0.0;
  double bound = 0.0;  // (D/2) * sum |alpha_i - beta_i|
  double margin = 0.0;
  bool passed = false;
};

EspinolaReport espinola_check(const TargetSpace& target, const std::vector<Point>& points,
                              const std::vector<double>& alpha, const std::vector<double>& beta);

// Weighted mean for normed targets.
Point barycenter(const DiscreteMeasure& mu);

}  // namespace lipext
