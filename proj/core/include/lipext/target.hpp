#pragma once

#include <cstddef>
#include <vector>

#include "lipext/metric.hpp"

namespace lipext {

// Either a finite-dimensional normed space or a finite space with a
// midpoint table (points of the latter are encoded as {index}).
class TargetSpace {
 public:
  enum class Kind { NormedVector, MidpointSpace };

  static TargetSpace normed(std::size_t dim, Norm norm = Norm::L2);
  // Validates the metric, symmetry of m, m(y,y) = y and
  // d(m(x,y), m(x,z)) <= d(y,z)/2.
  static TargetSpace midpoint(const std::vector<std::vector<double>>& dist,
                              const std::vector<std::vector<std::size_t>>& mid);

  Kind kind() const { return kind_; }
  bool is_normed() const { return kind_ == Kind::NormedVector; }
  std::size_t dim() const { return dim_; }
  Norm norm() const { return norm_; }
  std::size_t midpoint_size() const { return space_.size(); }
  std::size_t mid(std::size_t x, std::size_t y) const { return mid_[x * space_.size() + y]; }

  double distance(const Point& a, const Point& b) const;
  void check_point(const Point& p) const;
  bool same_as(const TargetSpace& other) const;

 private:
  Kind kind_ = Kind::NormedVector;
  std::size_t dim_ = 1;
  Norm norm_ = Norm::L2;
  FiniteMetricSpace space_;
  std::vector<std::size_t> mid_;
};

struct PartialMap {
  Subset domain;
  std::vector<Point> values;  // one per domain index
  TargetSpace target = TargetSpace::normed(1);

  void check(const FiniteMetricSpace& space) const;
};

struct LipschitzCertificate {
  double constant = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t pair_count = 0;
};

// Exact max of d_Y(F(x),F(y))/d_X(x,y) over unordered pairs; ties keep the
// lexicographically smallest pair.
LipschitzCertificate certify_lipschitz(const FiniteMetricSpace& space,
                                       const std::vector<Point>& values,
                                       const TargetSpace& target);

// Lipschitz constant of a partial map on its domain.
LipschitzCertificate certify_partial(const FiniteMetricSpace& space, const PartialMap& f);

}  // namespace lipext
