#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lipext {

enum class Norm { L1, L2, LInf };

using Point = std::vector<double>;
using Subset = std::vector<std::size_t>;  // strictly increasing indices

double norm_of(const Point& v, Norm norm);
double norm_distance(const Point& a, const Point& b, Norm norm);
std::string to_string(Norm norm);
std::optional<Norm> parse_norm(const std::string& s);

inline constexpr double kMetricRelTol = 1e-12;

class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;

  std::size_t size() const { return n_; }
  double d(std::size_t i, std::size_t j) const { return dist_[i * n_ + j]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Metric induced on the listed points, in the listed order.
  FiniteMetricSpace subspace(const Subset& indices) const;
  double diameter() const;
  double diameter(const Subset& s) const;
  double min_positive_distance() const;

  // Validating factory. Throws NotSquare, NonZeroDiagonal, AsymmetricMatrix,
  // NegativeDistance, TriangleViolation(i,j,k) or DuplicatePoints.
  static FiniteMetricSpace validated(const std::vector<std::vector<double>>& dist,
                                     std::vector<std::string> labels = {});

  // Trusted construction for matrices produced by a norm; only checks for
  // duplicate points and shape.
  static FiniteMetricSpace from_norm_matrix(std::vector<double> flat, std::size_t n,
                                            std::vector<std::string> labels = {});

 private:
  std::size_t n_ = 0;
  std::vector<double> dist_;
  std::vector<std::string> labels_;
};

struct PointCloud {
  std::vector<Point> coords;
  Norm norm = Norm::L2;

  std::size_t dimension() const { return coords.empty() ? 0 : coords.front().size(); }
  FiniteMetricSpace metric() const;
};

Subset make_subset(const FiniteMetricSpace& space, std::vector<std::size_t> indices,
                   bool allow_empty = false);
Subset complement(const FiniteMetricSpace& space, const Subset& s);
Subset all_points(const FiniteMetricSpace& space);
bool contains(const Subset& s, std::size_t i);

Subset ball(const FiniteMetricSpace& space, std::size_t center, double radius);
double dist_to_set(const FiniteMetricSpace& space, std::size_t x, const Subset& s);
double set_distance(const FiniteMetricSpace& space, const Subset& a, const Subset& b);
double hausdorff_to(const FiniteMetricSpace& space, const Subset& b, const Subset& a);
Subset greedy_separated_net(const FiniteMetricSpace& space, const Subset& subset, double eps);
std::size_t nearest_in(const FiniteMetricSpace& space, std::size_t x, const Subset& a);

}  // namespace lipext
