#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lipext/coverings.hpp"
#include "lipext/metric.hpp"

namespace lipext {

// Scale-indexed covers of A certifying Nagata(n, c): for each s > 0,
// `cover(s)` covers A with s-multiplicity <= n+1 and diameters <= c*s.
struct NagataOracle {
  NagataConstants constants;
  std::function<Covering(double s)> cover;
};

NagataOracle grid_oracle(const PointCloud& cloud, const Subset& A);
// Connected components of A under d < s; the claimed c is checked at every
// requested scale.
NagataOracle component_oracle(const FiniteMetricSpace& space, const Subset& A, double c);

struct WhitneyParams {
  std::size_t n = 0;  // neighborhoods overlap at most n+1 times
  double alpha = 0.0;
  double delta = 0.0;
  double gamma = 0.0;
};

struct WhitneyReport {
  bool diameter_ok = true;
  bool multiplicity_ok = true;
  bool distance_ok = true;
  std::size_t max_multiplicity = 0;
  double max_diameter_ratio = 0.0;  // max diam B_i / r_i
  double max_distance_ratio = 0.0;  // max hd(B_i, A) / r_i
  std::vector<std::string> violations;

  bool ok() const { return diameter_ok && multiplicity_ok && distance_ok; }
};

WhitneyReport verify_whitney(const FiniteMetricSpace& space, const std::vector<Subset>& blocks, const Subset& A,
                             const WhitneyParams& params);

enum class WhitneyKind { Basic, Refined };

struct WhitneyCovering {
  Covering base;  // blocks with block_dist_to_A
  Subset A;
  WhitneyParams params;
  WhitneyKind kind = WhitneyKind::Basic;
  NagataConstants nagata;
  double r = 0.0;
  std::vector<long> level;           // annulus index (k for basic, i for refined)
  std::vector<std::size_t> sublevel; // refined color class k; 0 for basic
  WhitneyReport report;
  std::optional<MultiplicityReport> subset_multiplicity;  // refined only
  bool verified = false;
};

// Default r for the basic cover.
inline constexpr double kDefaultWhitneyR = 1.25;

WhitneyCovering build_whitney_cover(const FiniteMetricSpace& space, const Subset& A, double r,
                                    const NagataOracle& oracle, std::size_t budget = kDefaultSearchBudget);

// Smallest power of two strictly above 2(c+1)4^(n+1).
double default_refined_r(std::size_t n, double c);

// `oracle` certifies Nagata(n-1, c); the result is a Whitney(n, ...) cover.
WhitneyCovering build_refined_whitney_cover(const FiniteMetricSpace& space, const Subset& A,
                                            std::optional<double> r, const NagataOracle& oracle,
                                            std::size_t budget = 256);

// Largest number of blocks met by some E with diam E <= theta * d(E, A).
MultiplicityReport refined_subset_multiplicity(const FiniteMetricSpace& space, const std::vector<Subset>& blocks,
                                               const Subset& A, double theta, std::size_t budget);

}  // namespace lipext
