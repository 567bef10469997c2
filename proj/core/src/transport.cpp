#include "lipext/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "lipext/errors.hpp"

namespace lipext {

DiscreteMeasure::DiscreteMeasure(TargetSpace target, std::vector<Point> support, std::vector<double> weights)
    : target_(std::move(target)) {
  if (support.size() != weights.size())
    fail(ErrorCode::InvalidWeights, "support and weights differ in length");
  if (support.empty()) fail(ErrorCode::InvalidWeights, "measure has empty support");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) fail(ErrorCode::InvalidWeights, "weights must be finite and nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > kWeightTol)
    fail(ErrorCode::InvalidWeights, "weights sum to " + std::to_string(total) + ", not 1");
  for (std::size_t k = 0; k < support.size(); ++k) {
    target_.check_point(support[k]);
    if (weights[k] == 0.0) continue;
    auto it = std::find(support_.begin(), support_.end(), support[k]);
    if (it == support_.end()) {
      support_.push_back(support[k]);
      weights_.push_back(weights[k]);
    } else {
      weights_[static_cast<std::size_t>(it - support_.begin())] += weights[k];
    }
  }
  double s = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  for (double& w : weights_) w /= s;
}

DiscreteMeasure DiscreteMeasure::dirac(TargetSpace target, Point x) {
  return DiscreteMeasure(std::move(target), {std::move(x)}, {1.0});
}

DiscreteMeasure DiscreteMeasure::uniform(TargetSpace target, std::vector<Point> support) {
  std::vector<double> w(support.size(), support.empty() ? 0.0 : 1.0 / static_cast<double>(support.size()));
  return DiscreteMeasure(std::move(target), std::move(support), std::move(w));
}

namespace {

constexpr double kFlowTol = 1e-15;

}  // namespace

W1Result w1_distance(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  if (!mu.target().same_as(nu.target())) fail(ErrorCode::MixedTargetSpaces, "measures live in different targets");
  const std::size_t n = mu.size(), m = nu.size();
  std::vector<std::vector<double>> c(n, std::vector<double>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) c[i][j] = mu.target().distance(mu.support()[i], nu.support()[j]);

  std::vector<std::vector<double>> f(n, std::vector<double>(m, 0.0));
  std::vector<double> rs = mu.weights(), rd = nu.weights();
  // nodes: sources 0..n-1, sinks n..n+m-1, S = n+m, T = n+m+1
  const std::size_t S = n + m, T = n + m + 1, V = n + m + 2;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> pot(V, 0.0), dist(V);
  std::vector<std::size_t> pred(V);
  std::vector<char> done(V);

  auto arc_cost = [&](std::size_t u, std::size_t v) -> double {
    // returns +inf when the residual arc is absent
    if (u == S) return (v < n && rs[v] > kFlowTol) ? 0.0 : inf;
    if (u < n) return (v >= n && v < n + m) ? c[u][v - n] : inf;
    if (u < n + m) {
      std::size_t j = u - n;
      if (v == T) return rd[j] > kFlowTol ? 0.0 : inf;
      if (v < n) return f[v][j] > kFlowTol ? -c[v][j] : inf;
    }
    return inf;
  };

  const std::size_t cap = 4 * (n + m) * (n + m) + 64;
  for (std::size_t iter = 0; iter < cap; ++iter) {
    double remaining = 0.0;
    for (double v : rs) remaining += v;
    if (remaining <= kFlowTol * static_cast<double>(n + m)) break;

    std::fill(dist.begin(), dist.end(), inf);
    std::fill(done.begin(), done.end(), 0);
    dist[S] = 0.0;
    for (;;) {
      std::size_t u = V;
      for (std::size_t v = 0; v < V; ++v)
        if (!done[v] && dist[v] < inf && (u == V || dist[v] < dist[u])) u = v;
      if (u == V) break;
      done[u] = 1;
      if (u == T) continue;
      for (std::size_t v = 0; v < V; ++v) {
        if (done[v]) continue;
        double a = arc_cost(u, v);
        if (a == inf) continue;
        double rc = std::max(0.0, a + pot[u] - pot[v]);
        if (dist[u] + rc < dist[v]) {
          dist[v] = dist[u] + rc;
          pred[v] = u;
        }
      }
    }
    if (dist[T] == inf) break;
    for (std::size_t v = 0; v < V; ++v) pot[v] += std::min(dist[v], dist[T]);

    double push = inf;
    for (std::size_t v = T; v != S; v = pred[v]) {
      std::size_t u = pred[v];
      if (u == S) push = std::min(push, rs[v]);
      else if (v == T) push = std::min(push, rd[u - n]);
      else if (u >= n) push = std::min(push, f[v][u - n]);
    }
    for (std::size_t v = T; v != S; v = pred[v]) {
      std::size_t u = pred[v];
      if (u == S) rs[v] -= push;
      else if (v == T) rd[u - n] -= push;
      else if (u < n) f[u][v - n] += push;
      else f[v][u - n] -= push;
    }
  }

  W1Result out;
  double cost = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (f[i][j] < kFlowTol) f[i][j] = 0.0;
      cost += f[i][j] * c[i][j];
    }
  out.plan.flow = std::move(f);
  out.plan.cost = cost;
  out.value = cost;
  return out;
}

double w1_permutation(const TargetSpace& target, const std::vector<Point>& ys, const std::vector<Point>& zs) {
  if (ys.size() != zs.size() || ys.empty()) fail(ErrorCode::NotUniform, "both sides need the same number N >= 1 of atoms");
  const std::size_t N = ys.size();
  if (N > 8) fail(ErrorCode::TooLarge, "permutation oracle supports N <= 8");
  std::vector<std::vector<double>> c(N, std::vector<double>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) c[i][j] = target.distance(ys[i], zs[j]);
  std::vector<std::size_t> perm(N);
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i) s += c[i][perm[i]];
    best = std::min(best, s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best / static_cast<double>(N);
}

EspinolaReport espinola_check(const TargetSpace& target, const std::vector<Point>& points,
                              const std::vector<double>& alpha, const std::vector<double>& beta) {
  if (alpha.size() != points.size() || beta.size() != points.size())
    fail(ErrorCode::DimensionMismatch, "alpha, beta and points must have equal length");
  double D = 0.0, l1 = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) D = std::max(D, target.distance(points[i], points[j]));
    l1 += std::abs(alpha[i] - beta[i]);
  }
  DiscreteMeasure mu(target, points, alpha), nu(target, points, beta);
  EspinolaReport r;
  r.w1 = w1_distance(mu, nu).value;
  r.bound = 0.5 * D * l1;
  r.margin = r.bound - r.w1;
  r.passed = r.margin >= -1e-9;
  return r;
}

Point barycenter(const DiscreteMeasure& mu) {
  if (!mu.target().is_normed())
    fail(ErrorCode::UnsupportedTarget,
         "barycenters are implemented for normed targets only; midpoint-table targets have no constructive barycenter here");
  if (mu.size() == 1) return mu.support()[0];
  Point out(mu.target().dim(), 0.0);
  for (std::size_t k = 0; k < mu.size(); ++k)
    for (std::size_t c = 0; c < out.size(); ++c) out[c] += mu.weights()[k] * mu.support()[k][c];
  return out;
}

}  // namespace lipext
