#include "lipext/target.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lipext/errors.hpp"
#include "lipext/parallel.hpp"

namespace lipext {

TargetSpace TargetSpace::normed(std::size_t dim, Norm norm) {
  if (dim == 0) fail(ErrorCode::InvalidArgument, "target dimension must be positive");
  TargetSpace t;
  t.kind_ = Kind::NormedVector;
  t.dim_ = dim;
  t.norm_ = norm;
  return t;
}

TargetSpace TargetSpace::midpoint(const std::vector<std::vector<double>>& dist,
                                  const std::vector<std::vector<std::size_t>>& mid) {
  TargetSpace t;
  t.kind_ = Kind::MidpointSpace;
  t.dim_ = 1;
  t.space_ = FiniteMetricSpace::validated(dist);
  const std::size_t n = t.space_.size();
  if (mid.size() != n) fail(ErrorCode::InvalidMidpointTable, "midpoint table has wrong row count");
  t.mid_.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (mid[x].size() != n) fail(ErrorCode::InvalidMidpointTable, "midpoint table row has wrong length");
    for (std::size_t y = 0; y < n; ++y) {
      if (mid[x][y] >= n) fail(ErrorCode::InvalidMidpointTable, "midpoint index out of range");
      t.mid_[x * n + y] = mid[x][y];
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (t.mid(x, x) != x)
      fail(ErrorCode::InvalidMidpointTable, "m(y,y) != y at " + std::to_string(x));
    for (std::size_t y = 0; y < n; ++y)
      if (t.mid(x, y) != t.mid(y, x))
        fail(ErrorCode::InvalidMidpointTable, "table not symmetric at (" + std::to_string(x) + "," + std::to_string(y) + ")");
  }
  const auto& d = t.space_;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        double lhs = d.d(t.mid(x, y), t.mid(x, z));
        if (lhs > 0.5 * d.d(y, z) * (1.0 + kMetricRelTol))
          fail(ErrorCode::InvalidMidpointTable, "d(m(x,y),m(x,z)) > d(y,z)/2 at (" + std::to_string(x) + "," +
                                                    std::to_string(y) + "," + std::to_string(z) + ")");
      }
  return t;
}

void TargetSpace::check_point(const Point& p) const {
  if (kind_ == Kind::NormedVector) {
    if (p.size() != dim_) fail(ErrorCode::DimensionMismatch, "target point has dimension " + std::to_string(p.size()));
    for (double v : p)
      if (!std::isfinite(v)) fail(ErrorCode::InvalidArgument, "non-finite target coordinate");
  } else {
    if (p.size() != 1 || p[0] < 0 || p[0] != std::floor(p[0]) || p[0] >= static_cast<double>(space_.size()))
      fail(ErrorCode::InvalidArgument, "midpoint-space point must be a single valid index");
  }
}

double TargetSpace::distance(const Point& a, const Point& b) const {
  if (kind_ == Kind::NormedVector) return norm_distance(a, b, norm_);
  return space_.d(static_cast<std::size_t>(a[0]), static_cast<std::size_t>(b[0]));
}

bool TargetSpace::same_as(const TargetSpace& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ == Kind::NormedVector) return dim_ == o.dim_ && norm_ == o.norm_;
  if (space_.size() != o.space_.size() || mid_ != o.mid_) return false;
  for (std::size_t i = 0; i < space_.size(); ++i)
    for (std::size_t j = 0; j < space_.size(); ++j)
      if (space_.d(i, j) != o.space_.d(i, j)) return false;
  return true;
}

void PartialMap::check(const FiniteMetricSpace& space) const {
  if (values.size() != domain.size())
    fail(ErrorCode::DimensionMismatch, "map has " + std::to_string(values.size()) + " values for " +
                                           std::to_string(domain.size()) + " domain points");
  for (std::size_t k = 0; k < domain.size(); ++k) {
    if (domain[k] >= space.size()) fail(ErrorCode::IndexOutOfRange, "domain index " + std::to_string(domain[k]));
    if (k > 0 && domain[k] <= domain[k - 1]) fail(ErrorCode::InvalidArgument, "domain indices must be strictly increasing");
    target.check_point(values[k]);
  }
}

namespace {

struct Best {
  double ratio = 0.0;
  std::size_t i = 0, j = 0;
  bool set = false;
};

bool better(double r, std::size_t i, std::size_t j, const Best& b) {
  if (!b.set) return true;
  if (r != b.ratio) return r > b.ratio;
  return std::pair(i, j) < std::pair(b.i, b.j);
}

LipschitzCertificate certify_indices(const FiniteMetricSpace& space, const Subset& idx,
                                     const std::vector<Point>& values, const TargetSpace& target) {
  const std::size_t n = idx.size();
  LipschitzCertificate cert;
  cert.pair_count = n < 2 ? 0 : n * (n - 1) / 2;
  if (n < 2) {
    if (n == 1) cert.i = cert.j = idx[0];
    return cert;
  }
  std::size_t chunks = chunk_count(n, 16);
  std::vector<Best> partial(chunks);
  parallel_for(
      n,
      [&](std::size_t begin, std::size_t end, std::size_t c) {
        Best b;
        for (std::size_t a = begin; a < end; ++a)
          for (std::size_t bb = a + 1; bb < n; ++bb) {
            double r = target.distance(values[a], values[bb]) / space.d(idx[a], idx[bb]);
            if (better(r, idx[a], idx[bb], b)) b = {r, idx[a], idx[bb], true};
          }
        partial[c] = b;
      },
      16);
  Best best;
  for (const auto& b : partial)
    if (b.set && better(b.ratio, b.i, b.j, best)) best = b;
  cert.constant = best.ratio;
  cert.i = best.i;
  cert.j = best.j;
  return cert;
}

}  // namespace

LipschitzCertificate certify_lipschitz(const FiniteMetricSpace& space, const std::vector<Point>& values,
                                       const TargetSpace& target) {
  if (values.size() != space.size())
    fail(ErrorCode::DimensionMismatch, "certify_lipschitz needs one value per point");
  return certify_indices(space, all_points(space), values, target);
}

LipschitzCertificate certify_partial(const FiniteMetricSpace& space, const PartialMap& f) {
  f.check(space);
  return certify_indices(space, f.domain, f.values, f.target);
}

}  // namespace lipext
