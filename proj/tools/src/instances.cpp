#include "lipext_tools/instances.hpp"

#include <algorithm>
#include <numeric>

#include "lipext/errors.hpp"

namespace lipext::tools {

std::vector<Point> random_points(Rng& rng, std::size_t count, std::size_t dim, double lo, double hi) {
  std::vector<Point> out(count, Point(dim));
  for (auto& p : out)
    for (auto& c : p) c = rng.uniform(lo, hi);
  return out;
}

FiniteMetricSpace random_graph_metric(Rng& rng, std::size_t n) {
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = rng.uniform(0.1, 1.0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return FiniteMetricSpace::validated(d);
}

std::vector<double> random_probability(Rng& rng, std::size_t n) {
  std::vector<double> w(n);
  for (auto& v : w) v = rng.uniform(0.05, 1.0);
  double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& v : w) v /= total;
  return w;
}

PartialMap random_lipschitz_map(Rng& rng, const FiniteMetricSpace& space, const Subset& domain,
                                std::size_t target_dim, double lip) {
  PartialMap f;
  f.domain = domain;
  f.target = TargetSpace::normed(target_dim);
  f.values = random_points(rng, domain.size(), target_dim, 0.0, 5.0);
  double L = certify_partial(space, f).constant;
  if (L > 0)
    for (auto& v : f.values)
      for (auto& c : v) c *= lip / L;
  return f;
}

PlanarInstance planar_instance(std::uint64_t seed, std::size_t points, std::size_t domain_size,
                               std::size_t target_dim, double lip) {
  if (domain_size == 0 || domain_size > points) fail(ErrorCode::InvalidArgument, "bad domain size");
  Rng rng(seed);
  PlanarInstance inst;
  inst.cloud.norm = Norm::L2;
  inst.cloud.coords = random_points(rng, points, 2, 0.0, 10.0);
  inst.space = inst.cloud.metric();
  std::vector<std::size_t> idx(points);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  rng.shuffle(idx);
  idx.resize(domain_size);
  inst.f = random_lipschitz_map(rng, inst.space, make_subset(inst.space, idx), target_dim, lip);
  return inst;
}

PointCloud line_cloud(const std::vector<double>& domain, double start, double step, std::size_t exterior) {
  PointCloud pc;
  for (double a : domain) pc.coords.push_back({a});
  for (std::size_t k = 0; k < exterior; ++k) pc.coords.push_back({start + step * static_cast<double>(k)});
  return pc;
}

}  // namespace lipext::tools
