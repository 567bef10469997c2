#include "lipext/simplicial.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <set>

#include "lipext/errors.hpp"
#include "lipext/transport.hpp"

namespace lipext {

namespace {

constexpr double kCoordTol = 1e-12;

bool is_face(const Simplex& small, const Simplex& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices) {
  for (auto& s : simplices) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  std::sort(simplices.begin(), simplices.end());
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  std::stable_sort(simplices.begin(), simplices.end(),
                   [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });
  SimplicialComplex K;
  std::set<std::size_t> verts;
  for (const auto& s : simplices) {
    if (s.empty()) continue;
    bool dominated = false;
    for (const auto& m : K.maximal_)
      if (is_face(s, m)) {
        dominated = true;
        break;
      }
    if (!dominated) K.maximal_.push_back(s);
    verts.insert(s.begin(), s.end());
  }
  std::sort(K.maximal_.begin(), K.maximal_.end());
  K.vertices_.assign(verts.begin(), verts.end());
  return K;
}

long SimplicialComplex::dimension() const {
  long d = -1;
  for (const auto& s : maximal_) d = std::max(d, static_cast<long>(s.size()) - 1);
  return d;
}

bool SimplicialComplex::has_simplex(const Simplex& s) const {
  for (const auto& m : maximal_)
    if (is_face(s, m)) return true;
  return false;
}

bool SimplicialComplex::pure() const {
  for (const auto& s : maximal_)
    if (static_cast<long>(s.size()) - 1 != dimension()) return false;
  return true;
}

bool SimplicialComplex::connected() const {
  if (maximal_.empty()) return true;
  std::vector<char> seen(maximal_.size(), 0);
  std::deque<std::size_t> q{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!q.empty()) {
    std::size_t a = q.front();
    q.pop_front();
    for (std::size_t b = 0; b < maximal_.size(); ++b) {
      if (seen[b]) continue;
      Simplex inter;
      std::set_intersection(maximal_[a].begin(), maximal_[a].end(), maximal_[b].begin(), maximal_[b].end(),
                            std::back_inserter(inter));
      if (!inter.empty()) {
        seen[b] = 1;
        ++count;
        q.push_back(b);
      }
    }
  }
  return count == maximal_.size();
}

Simplex SimplexPoint::support() const {
  Simplex s;
  for (auto& [v, w] : coords) s.push_back(v);
  return s;
}

double SimplexPoint::weight(std::size_t v) const {
  for (auto& [u, w] : coords)
    if (u == v) return w;
  return 0.0;
}

SimplexPoint make_simplex_point(const SimplicialComplex* complex, std::vector<std::pair<std::size_t, double>> coords) {
  std::sort(coords.begin(), coords.end());
  SimplexPoint p;
  p.complex = complex;
  double sum = 0.0;
  for (auto& [v, w] : coords) {
    if (w < 0 || !std::isfinite(w)) fail(ErrorCode::InvalidWeights, "negative barycentric coordinate");
    if (!p.coords.empty() && p.coords.back().first == v) fail(ErrorCode::InvalidArgument, "vertex listed twice");
    sum += w;
    if (w > 0) p.coords.emplace_back(v, w);
  }
  if (std::abs(sum - 1.0) > kCoordTol) fail(ErrorCode::InvalidWeights, "barycentric coordinates do not sum to 1");
  if (complex && !complex->has_simplex(p.support()))
    fail(ErrorCode::InvalidArgument, "support is not a simplex of the complex");
  return p;
}

SimplexPoint vertex_point(const SimplicialComplex* complex, std::size_t v) {
  SimplexPoint p;
  p.complex = complex;
  p.coords = {{v, 1.0}};
  return p;
}

SimplexPoint simplex_barycenter(const SimplicialComplex* complex, const Simplex& s) {
  SimplexPoint p;
  p.complex = complex;
  for (std::size_t v : s) p.coords.emplace_back(v, 1.0 / static_cast<double>(s.size()));
  return p;
}

double l2_distance(const SimplexPoint& p, const SimplexPoint& q) {
  if (p.complex != q.complex) fail(ErrorCode::DifferentComplexes, "points belong to different complexes");
  double acc = 0.0;
  std::size_t a = 0, b = 0;
  while (a < p.coords.size() || b < q.coords.size()) {
    if (b == q.coords.size() || (a < p.coords.size() && p.coords[a].first < q.coords[b].first)) {
      acc += p.coords[a].second * p.coords[a].second;
      ++a;
    } else if (a == p.coords.size() || q.coords[b].first < p.coords[a].first) {
      acc += q.coords[b].second * q.coords[b].second;
      ++b;
    } else {
      double t = p.coords[a].second - q.coords[b].second;
      acc += t * t;
      ++a;
      ++b;
    }
  }
  return std::sqrt(acc);
}

RouteResult route_through_intersection(const Simplex& delta, const Simplex& delta2, const SimplexPoint& x,
                                       const SimplexPoint& y) {
  Simplex shared;
  std::set_intersection(delta.begin(), delta.end(), delta2.begin(), delta2.end(), std::back_inserter(shared));
  if (shared.empty()) fail(ErrorCode::DisjointSimplices, "simplices do not intersect");
  if (!is_face(x.support(), delta) || !is_face(y.support(), delta2))
    fail(ErrorCode::InvalidArgument, "points must lie in their simplices");
  RouteResult best;
  best.n = std::max(delta.size(), delta2.size()) - 1;
  best.direct = l2_distance(x, y);
  best.detour = std::numeric_limits<double>::infinity();
  double nu = 0.0;
  for (auto& [v, w] : x.coords)
    if (!std::binary_search(shared.begin(), shared.end(), v)) nu += w;
  for (std::size_t v0 : shared) {
    SimplexPoint z;
    z.complex = x.complex;
    for (std::size_t v : shared) {
      double w = x.weight(v) + (v == v0 ? nu : 0.0);
      if (w > 0) z.coords.emplace_back(v, w);
    }
    double detour = l2_distance(x, z) + l2_distance(z, y);
    if (detour < best.detour) {
      best.detour = detour;
      best.z = z;
    }
  }
  best.in_intersection = is_face(best.z.support(), shared);
  const double bound = 4.0 * std::sqrt(static_cast<double>(best.n)) * best.direct;
  if (best.detour > bound * (1 + 1e-12) + 1e-15)
    fail(ErrorCode::PropertyViolation, "routing detour exceeds 4 sqrt(n) |x-y|");
  return best;
}

SimplexPoint random_point_in(const SimplicialComplex* complex, const Simplex& s, Rng& rng) {
  std::vector<double> e(s.size());
  double total = 0.0;
  for (double& v : e) {
    double u;
    do {
      u = rng.uniform01();
    } while (u <= 0.0);
    v = -std::log(u);
    total += v;
  }
  SimplexPoint p;
  p.complex = complex;
  for (std::size_t k = 0; k < s.size(); ++k) p.coords.emplace_back(s[k], e[k] / total);
  return p;
}

ProbeReport quasiconvexity_probe(const SimplicialComplex& complex, std::size_t samples, std::uint64_t seed) {
  if (!complex.pure()) fail(ErrorCode::NotPure, "probe needs a pure complex");
  if (!complex.connected()) fail(ErrorCode::Disconnected, "probe needs a connected complex");
  const auto& M = complex.maximal();
  ProbeReport rep;
  rep.N = M.size();
  rep.n = static_cast<std::size_t>(std::max(0L, complex.dimension()));
  rep.bound = std::pow(static_cast<double>(rep.N), 10.0 * std::log(static_cast<double>(std::max<std::size_t>(rep.n, 1))));
  rep.asserted = rep.n >= 2;

  std::vector<std::vector<std::size_t>> adj(M.size());
  for (std::size_t a = 0; a < M.size(); ++a)
    for (std::size_t b = 0; b < M.size(); ++b) {
      if (a == b) continue;
      Simplex inter;
      std::set_intersection(M[a].begin(), M[a].end(), M[b].begin(), M[b].end(), std::back_inserter(inter));
      if (!inter.empty()) adj[a].push_back(b);
    }

  Rng rng(seed);
  for (std::size_t t = 0; t < samples; ++t) {
    std::size_t sa = rng.below(M.size()), sb = rng.below(M.size());
    SimplexPoint x = random_point_in(&complex, M[sa], rng);
    SimplexPoint y = random_point_in(&complex, M[sb], rng);
    double direct = l2_distance(x, y);
    if (direct < 1e-12) continue;
    std::vector<std::size_t> prev(M.size(), M.size());
    std::deque<std::size_t> q{sa};
    prev[sa] = sa;
    while (!q.empty()) {
      std::size_t a = q.front();
      q.pop_front();
      for (std::size_t b : adj[a])
        if (prev[b] == M.size()) {
          prev[b] = a;
          q.push_back(b);
        }
    }
    std::vector<std::size_t> chain{sb};
    while (chain.back() != sa) chain.push_back(prev[chain.back()]);
    std::reverse(chain.begin(), chain.end());

    double length = 0.0;
    SimplexPoint cur = x;
    for (std::size_t i = 1; i < chain.size(); ++i) {
      SimplexPoint w;
      if (i + 1 < chain.size()) {
        Simplex inter;
        std::set_intersection(M[chain[i]].begin(), M[chain[i]].end(), M[chain[i + 1]].begin(),
                              M[chain[i + 1]].end(), std::back_inserter(inter));
        w = simplex_barycenter(&complex, inter);
      } else {
        w = y;
      }
      RouteResult rr = route_through_intersection(M[chain[i - 1]], M[chain[i]], cur, w);
      length += l2_distance(cur, rr.z);
      cur = rr.z;
    }
    length += l2_distance(cur, y);
    rep.max_ratio = std::max(rep.max_ratio, length / direct);
    ++rep.samples;
  }
  if (rep.asserted && rep.max_ratio > rep.bound)
    fail(ErrorCode::PropertyViolation, "observed detour ratio exceeds N^(10 ln n)");
  return rep;
}

BarycentricExtensor::BarycentricExtensor(TargetSpace target, std::map<std::size_t, Point> values)
    : target_(std::move(target)), values_(std::move(values)) {
  if (!target_.is_normed()) fail(ErrorCode::UnsupportedTarget, "barycentric extensor needs a normed target");
  for (auto& [v, p] : values_) target_.check_point(p);
}

const Point& BarycentricExtensor::value(std::size_t v) const {
  auto it = values_.find(v);
  if (it == values_.end()) fail(ErrorCode::MissingVertexValue, "no value for vertex " + std::to_string(v));
  return it->second;
}

Point BarycentricExtensor::operator()(const SimplexPoint& p) const {
  if (p.coords.size() == 1) return value(p.coords[0].first);
  Point out(target_.dim(), 0.0);
  for (auto& [v, w] : p.coords) {
    const Point& fv = value(v);
    for (std::size_t c = 0; c < out.size(); ++c) out[c] += w * fv[c];
  }
  return out;
}

Point BarycentricExtensor::via_barycenter(const SimplexPoint& p) const {
  std::vector<Point> support;
  std::vector<double> weights;
  for (auto& [v, w] : p.coords) {
    support.push_back(value(v));
    weights.push_back(w);
  }
  return barycenter(DiscreteMeasure(target_, std::move(support), std::move(weights)));
}

std::vector<SimplexPoint> simplex_grid(const SimplicialComplex* complex, const Simplex& s, std::size_t m) {
  std::vector<SimplexPoint> out;
  std::vector<std::size_t> parts(s.size(), 0);
  const double md = static_cast<double>(m);
  auto rec = [&](auto&& self, std::size_t k, std::size_t left) -> void {
    if (k + 1 == s.size()) {
      parts[k] = left;
      SimplexPoint p;
      p.complex = complex;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (parts[i] > 0) p.coords.emplace_back(s[i], static_cast<double>(parts[i]) / md);
      out.push_back(std::move(p));
      return;
    }
    for (std::size_t v = 0; v <= left; ++v) {
      parts[k] = v;
      self(self, k + 1, left - v);
    }
  };
  if (!s.empty()) rec(rec, 0, m);
  return out;
}

SkeletalExtensor::SkeletalExtensor(const SimplicialComplex& complex, TargetSpace target,
                                   std::map<std::size_t, Point> values, std::size_t mesh)
    : target_(std::move(target)), values_(std::move(values)), mesh_(mesh) {
  if (!target_.is_normed()) fail(ErrorCode::UnsupportedTarget, "skeletal extension needs a normed target");
  if (mesh_ < 2) fail(ErrorCode::InvalidArgument, "mesh must be at least 2");
  for (std::size_t v : complex.vertices())
    if (!values_.count(v)) fail(ErrorCode::MissingVertexValue, "no value for vertex " + std::to_string(v));
  for (auto& [v, p] : values_) target_.check_point(p);
  std::set<Simplex> faces;
  for (const auto& m : complex.maximal()) {
    const std::size_t k = m.size();
    if (k >= 20) fail(ErrorCode::UnsupportedDimension, "simplex dimension too large");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      Simplex f;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) f.push_back(m[i]);
      if (f.size() >= 3) faces.insert(f);
    }
  }
  std::vector<Simplex> ordered(faces.begin(), faces.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
  for (const auto& f : ordered) apex_[f] = apex_of(f);
}

Point SkeletalExtensor::apex_of(const Simplex& face) {
  Point sum(target_.dim(), 0.0);
  std::size_t count = 0;
  for (const SimplexPoint& p : simplex_grid(nullptr, face, mesh_)) {
    if (p.coords.size() == face.size()) continue;  // interior grid point
    Point v = eval(p.coords);
    for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += v[c];
    ++count;
  }
  for (double& c : sum) c /= static_cast<double>(count);
  return sum;
}

Point SkeletalExtensor::operator()(const SimplexPoint& p) const { return eval(p.coords); }

Point SkeletalExtensor::eval(const std::vector<std::pair<std::size_t, double>>& coords_in) const {
  std::vector<std::pair<std::size_t, double>> coords;
  for (auto& cw : coords_in)
    if (cw.second > 0) coords.push_back(cw);
  const std::size_t k1 = coords.size();
  if (k1 == 0) fail(ErrorCode::InvalidArgument, "empty simplex point");
  auto val = [&](std::size_t v) -> const Point& {
    auto it = values_.find(v);
    if (it == values_.end()) fail(ErrorCode::MissingVertexValue, "no value for vertex " + std::to_string(v));
    return it->second;
  };
  if (k1 == 1) return val(coords[0].first);
  Point out(target_.dim(), 0.0);
  if (k1 == 2) {
    const Point &a = val(coords[0].first), &b = val(coords[1].first);
    for (std::size_t c = 0; c < out.size(); ++c) out[c] = coords[0].second * a[c] + coords[1].second * b[c];
    return out;
  }
  Simplex face;
  for (auto& [v, w] : coords) face.push_back(v);
  auto it = apex_.find(face);
  if (it == apex_.end()) fail(ErrorCode::InvalidArgument, "point outside the complex");
  const Point& apex = it->second;
  const double k = static_cast<double>(k1 - 1);
  const double b = 1.0 / static_cast<double>(k1);
  std::vector<double> v(k1);
  double len = 0.0;
  for (std::size_t i = 0; i < k1; ++i) {
    v[i] = coords[i].second - b;
    len += v[i] * v[i];
  }
  len = std::sqrt(len);
  if (len < 1e-15) return apex;
  double tstar = std::numeric_limits<double>::infinity();
  std::size_t hit = 0;
  for (std::size_t i = 0; i < k1; ++i)
    if (v[i] < 0 && b / -v[i] < tstar) {
      tstar = b / -v[i];
      hit = i;
    }
  std::vector<std::pair<std::size_t, double>> rho;
  double total = 0.0;
  for (std::size_t i = 0; i < k1; ++i) {
    double w = i == hit ? 0.0 : b + tstar * v[i];
    if (w > 1e-14) {
      rho.emplace_back(coords[i].first, w);
      total += w;
    }
  }
  for (auto& [vv, w] : rho) w /= total;
  Point boundary = eval(rho);
  const double r_in = 1.0 / std::sqrt(k * (k + 1));
  if (len >= r_in) return boundary;
  const double t = len / r_in;
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = apex[c] + t * (boundary[c] - apex[c]);
  return out;
}

double skeletal_bound(std::size_t n, double lambda) {
  double fact = 1.0;
  for (std::size_t i = 2; i <= n; ++i) fact *= static_cast<double>(i);
  const double nd = static_cast<double>(n);
  return std::pow(lambda, nd) * std::pow(std::sqrt(2.0), nd - 1) * std::sqrt(nd) * fact * fact;
}

double cone_step_bound(std::size_t n, double lambda) {
  const double nd = static_cast<double>(n);
  return std::sqrt(2 + 2 / (nd - 1)) * nd * nd * lambda;
}

}  // namespace lipext
