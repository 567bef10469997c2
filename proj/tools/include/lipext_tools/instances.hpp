#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lipext/metric.hpp"
#include "lipext/random.hpp"
#include "lipext/target.hpp"

namespace lipext::tools {

std::vector<Point> random_points(Rng& rng, std::size_t count, std::size_t dim, double lo, double hi);

// Shortest-path metric of a complete graph with random edge weights.
FiniteMetricSpace random_graph_metric(Rng& rng, std::size_t n);

std::vector<double> random_probability(Rng& rng, std::size_t n);

// Random values on `domain` rescaled so that Lip f = lip exactly.
PartialMap random_lipschitz_map(Rng& rng, const FiniteMetricSpace& space, const Subset& domain,
                                std::size_t target_dim, double lip);

struct PlanarInstance {
  PointCloud cloud;
  FiniteMetricSpace space;
  PartialMap f;
};

// Uniform points in [0,10]^2, a random domain of `domain_size` points and a
// random map into R^target_dim with Lip f = lip.
PlanarInstance planar_instance(std::uint64_t seed, std::size_t points, std::size_t domain_size,
                               std::size_t target_dim, double lip);

// Collinear cloud: the domain points first, then `exterior` points spaced
// by `step` starting at `start`.
PointCloud line_cloud(const std::vector<double>& domain, double start, double step, std::size_t exterior);

}  // namespace lipext::tools
