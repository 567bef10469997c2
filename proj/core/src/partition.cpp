#include "lipext/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lipext/errors.hpp"

namespace lipext {

double partition_exponent(const WhitneyParams& params, ExponentRule rule) {
  const double n = static_cast<double>(params.n);
  return rule == ExponentRule::Basic ? std::log(n + 1) : std::log2(n + 2);
}

PartitionOfUnity build_partition(const FiniteMetricSpace& space, const WhitneyCovering& cover) {
  return build_partition(space, cover, cover.kind == WhitneyKind::Basic ? ExponentRule::Basic : ExponentRule::General);
}

PartitionOfUnity build_partition(const FiniteMetricSpace& space, const WhitneyCovering& cover, ExponentRule rule) {
  if (!cover.verified) fail(ErrorCode::CoverNotVerified, "partition needs a verified Whitney cover");
  PartitionOfUnity pou;
  pou.space = &space;
  pou.blocks = cover.base.blocks;
  pou.A = cover.A;
  pou.exterior = complement(space, cover.A);
  pou.params = cover.params;
  pou.exponent = partition_exponent(cover.params, rule);
  const std::size_t nb = pou.blocks.size(), N = space.size();
  const double delta = cover.params.delta, m = pou.exponent;

  pou.r.resize(nb);
  pou.anchors.resize(nb);
  std::vector<std::vector<char>> inU(nb, std::vector<char>(N, 0));
  for (std::size_t i = 0; i < nb; ++i) {
    const Subset& B = pou.blocks[i];
    double best = std::numeric_limits<double>::infinity();
    std::size_t anchor = cover.A.front();
    for (std::size_t a : cover.A) {
      double v = dist_to_set(space, a, B);
      if (v < best) {
        best = v;
        anchor = a;
      }
    }
    pou.r[i] = best;
    pou.anchors[i] = anchor;
    for (std::size_t y = 0; y < N; ++y) inU[i][y] = dist_to_set(space, y, B) < delta * best;
  }

  pou.weights.assign(N, {});
  pou.psi_total.assign(N, 0.0);
  pou.home.assign(N, 0);
  pou.min_psi_margin = std::numeric_limits<double>::infinity();
  for (std::size_t x : pou.exterior) {
    SparseWeights w;
    double total = 0.0;
    for (std::size_t i = 0; i < nb; ++i) {
      if (!inU[i][x]) continue;
      double d = std::numeric_limits<double>::infinity();
      for (std::size_t y = 0; y < N; ++y)
        if (!inU[i][y]) d = std::min(d, space.d(x, y));
      if (d == std::numeric_limits<double>::infinity()) d = delta * pou.r[i];
      double psi = std::pow(d, m);
      if (psi > 0) {
        w.emplace_back(i, psi);
        total += psi;
      }
    }
    if (!(total > 0)) fail(ErrorCode::UncoveredPoint, "psi vanishes at point " + std::to_string(x));
    for (auto& [i, v] : w) v /= total;
    std::size_t home = nb;
    for (std::size_t i = 0; i < nb; ++i)
      if (contains(pou.blocks[i], x) && (home == nb || pou.r[i] > pou.r[home])) home = i;
    if (home == nb) fail(ErrorCode::UncoveredPoint, "point " + std::to_string(x) + " lies in no block");
    pou.home[x] = home;
    pou.min_psi_margin = std::min(pou.min_psi_margin, total / std::pow(delta * pou.r[home], m));
    pou.psi_total[x] = total;
    pou.weights[x] = std::move(w);
  }
  return pou;
}

const SparseWeights& evaluate_weights(const PartitionOfUnity& pou, std::size_t x) {
  if (x >= pou.weights.size()) fail(ErrorCode::IndexOutOfRange, "point " + std::to_string(x));
  if (contains(pou.A, x)) fail(ErrorCode::PointInDomain, "point " + std::to_string(x) + " lies in A");
  return pou.weights[x];
}

LipschitzSumReport lipschitz_sum_report(const PartitionOfUnity& pou) {
  const FiniteMetricSpace& space = *pou.space;
  const Subset& ext = pou.exterior;
  const std::size_t nb = pou.blocks.size(), ne = ext.size();
  std::vector<std::vector<double>> phi(nb, std::vector<double>(ne, 0.0));
  for (std::size_t a = 0; a < ne; ++a)
    for (auto& [i, v] : pou.weights[ext[a]]) phi[i][a] = v;

  LipschitzSumReport rep;
  rep.min_r = pou.r.empty() ? 0.0 : *std::min_element(pou.r.begin(), pou.r.end());
  for (std::size_t a = 0; a < ne; ++a) {
    double nn = std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < ne; ++b)
      if (b != a) nn = std::min(nn, space.d(ext[a], ext[b]));
    if (ne > 1) rep.mesh = std::max(rep.mesh, nn);
  }
  rep.dense = ne > 1 && rep.mesh <= 0.01 * rep.min_r;

  std::vector<double> S(ne, 0.0);
  for (std::size_t i = 0; i < nb; ++i) {
    std::vector<std::size_t> supp;
    for (std::size_t a = 0; a < ne; ++a)
      if (phi[i][a] > 0) supp.push_back(a);
    if (supp.empty()) continue;
    std::vector<double> best(ne, 0.0);
    for (std::size_t a : supp)
      for (std::size_t b = 0; b < ne; ++b) {
        if (b == a) continue;
        double q = std::abs(phi[i][a] - phi[i][b]) / space.d(ext[a], ext[b]);
        best[a] = std::max(best[a], q);
        if (phi[i][b] == 0.0) best[b] = std::max(best[b], q);
      }
    for (std::size_t a = 0; a < ne; ++a) S[a] += best[a];
  }
  rep.min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < ne; ++a) {
    LipschitzSumPoint p;
    p.x = ext[a];
    p.sum = S[a];
    p.j = pou.home[ext[a]];
    p.r_j = pou.r[p.j];
    p.bound = 6 * pou.exponent / (pou.params.delta * p.r_j);
    p.margin = p.bound - p.sum;
    rep.min_margin = std::min(rep.min_margin, p.margin);
    rep.points.push_back(p);
  }
  return rep;
}

SimplexPoint nerve_map(const PartitionOfUnity& pou, std::size_t x) {
  const SparseWeights& w = evaluate_weights(pou, x);
  SimplexPoint p;
  p.coords = w;
  return p;
}

SimplicialComplex nerve_of_cover(const PartitionOfUnity& pou) {
  std::vector<Simplex> simplices;
  for (std::size_t i = 0; i < pou.blocks.size(); ++i) simplices.push_back({i});
  for (std::size_t x : pou.exterior) {
    Simplex s;
    for (auto& [i, v] : pou.weights[x]) s.push_back(i);
    simplices.push_back(std::move(s));
  }
  SimplicialComplex K = SimplicialComplex::from_simplices(std::move(simplices));
  if (K.dimension() > static_cast<long>(pou.params.n))
    fail(ErrorCode::PropertyViolation, "nerve dimension " + std::to_string(K.dimension()) + " exceeds n = " +
                                           std::to_string(pou.params.n));
  return K;
}

}  // namespace lipext
