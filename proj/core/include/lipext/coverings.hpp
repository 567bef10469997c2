#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "lipext/metric.hpp"

namespace lipext {

struct Covering {
  std::vector<Subset> blocks;
  std::optional<double> scale;
  std::vector<std::size_t> colors;       // one per block when colored, colors in 1..n+1
  std::vector<double> block_dist_to_A;   // r_i when built relative to a subset A
  // Ball-partition covers: number of permutations that produced each block.
  std::vector<std::uint64_t> multiplicity;
  std::uint64_t permutations = 0;
  double ball_radius = 0.0;
  bool enumerated = false;

  std::size_t size() const { return blocks.size(); }
  bool colored() const { return !colors.empty(); }
  Subset covered_set() const;
};

inline constexpr std::size_t kDefaultSearchBudget = 64;

struct MultiplicityReport {
  double s = 0.0;
  std::size_t multiplicity = 0;
  std::vector<std::pair<std::size_t, std::size_t>> witness;  // (block, representative)
};

// Whether E extended by p is still admissible, given E admissible.
using Admissible = std::function<bool(const std::vector<std::size_t>& E, std::size_t p)>;

// Exact maximum number of blocks met by an admissible point set, found by
// branch and bound over blocks after a greedy lower bound. Admissibility
// must be inherited by subsets and hold for singletons.
MultiplicityReport max_blocks_met(const std::vector<Subset>& blocks, const Admissible& admissible,
                                  std::size_t budget = kDefaultSearchBudget);

MultiplicityReport s_multiplicity(const FiniteMetricSpace& space, const Covering& cover, double s,
                                  std::size_t budget = kDefaultSearchBudget);

struct NagataReport {
  bool ok = false;
  MultiplicityReport multiplicity;
  double max_diameter = 0.0;
  std::vector<std::size_t> oversized_blocks;
};

NagataReport verify_nagata(const FiniteMetricSpace& space, const Covering& cover, double s, std::size_t n,
                           double c, std::size_t budget = kDefaultSearchBudget);

struct NagataConstants {
  std::size_t n = 0;
  double c = 0.0;
};

// Constants certified by grid_cover in dimension d: (2^d - 1, sqrt(d) * d).
NagataConstants grid_constants(std::size_t d);

// Half-open axis cubes of side s*d; requires an L2 cloud. Covers `subset`
// (all points when empty).
Covering grid_cover(const PointCloud& cloud, double s, const Subset& subset = {});

// Cubical construction. `base` must cover `subset` with 2(n+2)s-multiplicity
// at most n+1 and diameters at most 2(n+2)cs. Output blocks of equal color
// are more than s apart and have diameter at most 2(c+1)(n+2)s.
Covering colored_cover(const FiniteMetricSpace& space, const Subset& subset, double s, const Covering& base,
                       std::size_t n, double c, std::size_t budget = kDefaultSearchBudget);

double colored_base_scale(double s, std::size_t n);

struct PartitionMode {
  enum class Kind { Enumerate, Sample } kind = Kind::Enumerate;
  std::size_t count = 0;
  std::uint64_t seed = 0;

  static PartitionMode enumerate() { return {}; }
  static PartitionMode sample(std::size_t count, std::uint64_t seed) { return {Kind::Sample, count, seed}; }
};

// Blocks B(x_pi(k), D) minus earlier blocks for each permutation pi;
// duplicate blocks are merged and counted in `multiplicity`.
Covering iterative_ball_partition(const FiniteMetricSpace& space, double D, PartitionMode mode);

struct PaddedPoint {
  std::size_t x = 0;
  std::uint64_t deep = 0;        // blocks (with multiplicity) containing B(x, D/2)
  std::uint64_t containing = 0;  // blocks (with multiplicity) containing x
  std::size_t inner = 0;         // #B(x, D/2)
  std::size_t outer = 0;         // #B(x, 2D)
  bool pass = false;
};

// Ball radius D gives a 2D-bounded cover; checks
// deep/containing >= #B(x, D/2)/#B(x, 2D) with integer cross-multiplication.
std::vector<PaddedPoint> padded_ratio_check(const FiniteMetricSpace& space, const Covering& cover,
                                            bool allow_sampled = false);

}  // namespace lipext
