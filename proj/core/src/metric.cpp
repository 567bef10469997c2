#include "lipext/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lipext/errors.hpp"

namespace lipext {

double norm_of(const Point& v, Norm norm) {
  double acc = 0.0;
  switch (norm) {
    case Norm::L1:
      for (double x : v) acc += std::abs(x);
      return acc;
    case Norm::L2:
      for (double x : v) acc += x * x;
      return std::sqrt(acc);
    case Norm::LInf:
      for (double x : v) acc = std::max(acc, std::abs(x));
      return acc;
  }
  return acc;
}

double norm_distance(const Point& a, const Point& b, Norm norm) {
  double acc = 0.0;
  const std::size_t n = a.size();
  switch (norm) {
    case Norm::L1:
      for (std::size_t i = 0; i < n; ++i) acc += std::abs(a[i] - b[i]);
      return acc;
    case Norm::L2:
      for (std::size_t i = 0; i < n; ++i) {
        double t = a[i] - b[i];
        acc += t * t;
      }
      return std::sqrt(acc);
    case Norm::LInf:
      for (std::size_t i = 0; i < n; ++i) acc = std::max(acc, std::abs(a[i] - b[i]));
      return acc;
  }
  return acc;
}

std::string to_string(Norm norm) {
  switch (norm) {
    case Norm::L1: return "l1";
    case Norm::L2: return "l2";
    case Norm::LInf: return "linf";
  }
  return "l2";
}

std::optional<Norm> parse_norm(const std::string& s) {
  if (s == "l1") return Norm::L1;
  if (s == "l2") return Norm::L2;
  if (s == "linf") return Norm::LInf;
  return std::nullopt;
}

namespace {

std::vector<std::string> default_labels(std::size_t n, std::vector<std::string> labels) {
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != n) fail(ErrorCode::DimensionMismatch, "label count differs from point count");
  return labels;
}

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  std::ostringstream os;
  os << "(" << i << "," << j << "," << k << ")";
  return os.str();
}

}  // namespace

FiniteMetricSpace FiniteMetricSpace::validated(const std::vector<std::vector<double>>& dist,
                                               std::vector<std::string> labels) {
  const std::size_t n = dist.size();
  for (std::size_t i = 0; i < n; ++i)
    if (dist[i].size() != n) fail(ErrorCode::NotSquare, "row " + std::to_string(i) + " has wrong length");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(dist[i][j]))
        fail(ErrorCode::NegativeDistance, "non-finite entry at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (dist[i][j] < 0)
        fail(ErrorCode::NegativeDistance, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is negative");
    }
    if (dist[i][i] != 0.0) fail(ErrorCode::NonZeroDiagonal, "dist[" + std::to_string(i) + "][" + std::to_string(i) + "] != 0");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double a = dist[i][j], b = dist[j][i];
      if (std::abs(a - b) > kMetricRelTol * std::max(a, b))
        fail(ErrorCode::AsymmetricMatrix, "dist[" + std::to_string(i) + "][" + std::to_string(j) + "] != dist[" +
                                              std::to_string(j) + "][" + std::to_string(i) + "]");
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (dist[i][j] == 0.0)
        fail(ErrorCode::DuplicatePoints, "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        double via = dist[i][k] + dist[k][j];
        if (dist[i][j] > via * (1.0 + kMetricRelTol))
          fail(ErrorCode::TriangleViolation, "triple " + triple(i, j, k) + ": d(i,j) > d(i,k) + d(k,j)");
      }

  FiniteMetricSpace s;
  s.n_ = n;
  s.labels_ = default_labels(n, std::move(labels));
  s.dist_.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      s.dist_[i * n + j] = dist[i][j];
      s.dist_[j * n + i] = dist[i][j];
    }
  return s;
}

FiniteMetricSpace FiniteMetricSpace::from_norm_matrix(std::vector<double> flat, std::size_t n,
                                                      std::vector<std::string> labels) {
  if (flat.size() != n * n) fail(ErrorCode::NotSquare, "matrix size is not n*n");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (flat[i * n + j] == 0.0)
        fail(ErrorCode::DuplicatePoints, "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
  FiniteMetricSpace s;
  s.n_ = n;
  s.dist_ = std::move(flat);
  s.labels_ = default_labels(n, std::move(labels));
  return s;
}

FiniteMetricSpace FiniteMetricSpace::subspace(const Subset& indices) const {
  const std::size_t m = indices.size();
  FiniteMetricSpace s;
  s.n_ = m;
  s.dist_.resize(m * m);
  s.labels_.reserve(m);
  for (std::size_t a = 0; a < m; ++a) {
    if (indices[a] >= n_) fail(ErrorCode::IndexOutOfRange, "subspace index " + std::to_string(indices[a]));
    s.labels_.push_back(labels_[indices[a]]);
    for (std::size_t b = 0; b < m; ++b) s.dist_[a * m + b] = d(indices[a], indices[b]);
  }
  return s;
}

double FiniteMetricSpace::diameter() const {
  double best = 0.0;
  for (double v : dist_) best = std::max(best, v);
  return best;
}

double FiniteMetricSpace::diameter(const Subset& s) const {
  double best = 0.0;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) best = std::max(best, d(s[a], s[b]));
  return best;
}

double FiniteMetricSpace::min_positive_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) best = std::min(best, d(i, j));
  return best;
}

FiniteMetricSpace PointCloud::metric() const {
  const std::size_t n = coords.size();
  const std::size_t dim = dimension();
  for (const auto& p : coords) {
    if (p.size() != dim) fail(ErrorCode::DimensionMismatch, "point cloud vectors differ in dimension");
    for (double x : p)
      if (!std::isfinite(x)) fail(ErrorCode::InvalidArgument, "non-finite coordinate");
  }
  std::vector<double> flat(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double v = norm_distance(coords[i], coords[j], norm);
      flat[i * n + j] = v;
      flat[j * n + i] = v;
    }
  return FiniteMetricSpace::from_norm_matrix(std::move(flat), n);
}

Subset make_subset(const FiniteMetricSpace& space, std::vector<std::size_t> indices, bool allow_empty) {
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
    fail(ErrorCode::InvalidArgument, "subset lists an index twice");
  for (std::size_t i : indices)
    if (i >= space.size()) fail(ErrorCode::IndexOutOfRange, "subset index " + std::to_string(i));
  if (indices.empty() && !allow_empty) fail(ErrorCode::EmptySubset, "subset is empty");
  return indices;
}

Subset complement(const FiniteMetricSpace& space, const Subset& s) {
  Subset out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    while (k < s.size() && s[k] < i) ++k;
    if (k < s.size() && s[k] == i) continue;
    out.push_back(i);
  }
  return out;
}

Subset all_points(const FiniteMetricSpace& space) {
  Subset out(space.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

bool contains(const Subset& s, std::size_t i) { return std::binary_search(s.begin(), s.end(), i); }

Subset ball(const FiniteMetricSpace& space, std::size_t center, double radius) {
  Subset out;
  for (std::size_t i = 0; i < space.size(); ++i)
    if (space.d(center, i) <= radius) out.push_back(i);
  return out;
}

double dist_to_set(const FiniteMetricSpace& space, std::size_t x, const Subset& s) {
  if (s.empty()) fail(ErrorCode::EmptySubset, "distance to an empty set");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i : s) best = std::min(best, space.d(x, i));
  return best;
}

double set_distance(const FiniteMetricSpace& space, const Subset& a, const Subset& b) {
  if (a.empty() || b.empty()) fail(ErrorCode::EmptySubset, "distance between sets needs nonempty sets");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i : a) best = std::min(best, dist_to_set(space, i, b));
  return best;
}

double hausdorff_to(const FiniteMetricSpace& space, const Subset& b, const Subset& a) {
  if (a.empty()) fail(ErrorCode::EmptySubset, "hausdorff_to needs a nonempty target set");
  double best = 0.0;
  for (std::size_t i : b) best = std::max(best, dist_to_set(space, i, a));
  return best;
}

Subset greedy_separated_net(const FiniteMetricSpace& space, const Subset& subset, double eps) {
  if (!(eps > 0)) fail(ErrorCode::InvalidArgument, "net separation must be positive");
  Subset kept;
  for (std::size_t i : subset) {
    bool ok = true;
    for (std::size_t k : kept)
      if (space.d(i, k) < eps) {
        ok = false;
        break;
      }
    if (ok) kept.push_back(i);
  }
  return kept;
}

std::size_t nearest_in(const FiniteMetricSpace& space, std::size_t x, const Subset& a) {
  if (a.empty()) fail(ErrorCode::EmptySubset, "nearest_in needs a nonempty set");
  std::size_t best = a.front();
  double bd = space.d(x, best);
  for (std::size_t i : a) {
    double v = space.d(x, i);
    if (v < bd) {
      bd = v;
      best = i;
    }
  }
  return best;
}

}  // namespace lipext
