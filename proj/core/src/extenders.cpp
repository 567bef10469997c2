#include "lipext/extenders.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "lipext/coverings.hpp"
#include "lipext/errors.hpp"
#include "lipext/parallel.hpp"
#include "lipext/random.hpp"
#include "lipext/simplicial.hpp"

namespace lipext {

std::string to_string(Method m) {
  switch (m) {
    case Method::McShane: return "mcshane";
    case Method::Whitney: return "whitney";
    case Method::LeeNaor: return "leenaor";
    case Method::Nerve: return "nerve";
  }
  return "unknown";
}

namespace {

std::vector<long> domain_positions(const FiniteMetricSpace& space, const PartialMap& f) {
  std::vector<long> pos(space.size(), -1);
  for (std::size_t k = 0; k < f.domain.size(); ++k) pos[f.domain[k]] = static_cast<long>(k);
  return pos;
}

void finalize(ExtensionResult& res, const FiniteMetricSpace& space, const PartialMap& f, double bound_constant,
              const std::string& label) {
  res.certificate = certify_lipschitz(space, res.values, f.target);
  res.bound_constant = bound_constant;
  res.paper_bound = bound_constant * res.lip_f;
  res.bound_label = label;
  res.normalized_constant = res.lip_f > 0 ? res.certificate.constant / res.lip_f : 0.0;
  res.within_bound = res.certificate.constant <= res.paper_bound + kCertificateSlack;
}

void check_normed(const PartialMap& f) {
  if (!f.target.is_normed()) fail(ErrorCode::UnsupportedTarget, "extension needs a normed target");
}

std::vector<Point> start_values(const FiniteMetricSpace& space, const PartialMap& f) {
  std::vector<Point> vals(space.size(), Point(f.target.dim(), 0.0));
  for (std::size_t k = 0; k < f.domain.size(); ++k) vals[f.domain[k]] = f.values[k];
  return vals;
}

// Convex combination sum w_i y_i with the weights already normalized.
Point combine(const std::vector<std::pair<double, const Point*>>& terms, std::size_t dim) {
  if (terms.size() == 1) return *terms[0].second;
  Point out(dim, 0.0);
  for (auto& [w, y] : terms)
    for (std::size_t c = 0; c < dim; ++c) out[c] += w * (*y)[c];
  return out;
}

std::size_t aux_anchor_check(const FiniteMetricSpace& space, const PartitionOfUnity& pou) {
  const auto& p = pou.params;
  std::size_t checked = 0;
  for (std::size_t x : pou.exterior)
    for (auto& [i, w] : pou.weights[x]) {
      ++checked;
      if (space.d(pou.anchors[i], x) > (1 + p.alpha + p.delta) * pou.r[i])
        fail(ErrorCode::PropertyViolation, "anchor bound d(a_i,x) <= (1+alpha+delta) r_i fails at point " +
                                               std::to_string(x) + ", block " + std::to_string(i));
    }
  return checked;
}

}  // namespace

ExtensionResult mcshane_extend(const FiniteMetricSpace& space, const PartialMap& f, std::optional<double> slope) {
  f.check(space);
  if (!f.target.is_normed() || f.target.dim() != 1) fail(ErrorCode::NonScalarTarget, "McShane needs a real-valued map");
  if (f.domain.empty()) fail(ErrorCode::EmptySubset, "map has an empty domain");
  ExtensionResult res;
  res.method = Method::McShane;
  res.lip_f = certify_partial(space, f).constant;
  const double L = slope.value_or(res.lip_f);
  if (!(L >= 0) || L < res.lip_f * (1 - 1e-12))
    fail(ErrorCode::InvalidArgument, "slope must be at least Lip f = " + std::to_string(res.lip_f));
  res.values = start_values(space, f);
  std::vector<long> pos = domain_positions(space, f);
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (pos[x] >= 0) continue;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < f.domain.size(); ++k) best = std::min(best, f.values[k][0] + L * space.d(f.domain[k], x));
    res.values[x] = {best};
  }
  res.inputs = {{"slope", L}};
  finalize(res, space, f, 1.0, "Lip f");
  res.paper_bound = std::max(res.paper_bound, L);
  res.within_bound = res.certificate.constant <= res.paper_bound + kCertificateSlack;
  return res;
}

ExtensionResult whitney_extend(const FiniteMetricSpace& space, const PartialMap& f, const NagataOracle& oracle,
                               double r) {
  f.check(space);
  check_normed(f);
  if (f.domain.empty()) fail(ErrorCode::EmptySubset, "map has an empty domain");
  const double n = static_cast<double>(oracle.constants.n), c = oracle.constants.c;
  ExtensionResult res;
  res.method = Method::Whitney;
  res.lip_f = certify_partial(space, f).constant;
  res.values = start_values(space, f);
  res.inputs = {{"r", r}, {"n", n}, {"c", c}};
  const double constant = 1000 * (c + 1) * std::log2(n + 2);
  const std::string label = "1000(c+1)log2(n+2) Lip f";
  if (f.domain.size() == space.size()) {
    finalize(res, space, f, constant, label);
    return res;
  }
  WhitneyCovering cover = build_whitney_cover(space, f.domain, r, oracle);
  PartitionOfUnity pou = build_partition(space, cover, ExponentRule::Basic);
  std::vector<long> pos = domain_positions(space, f);
  for (std::size_t x : pou.exterior) {
    std::vector<std::pair<double, const Point*>> terms;
    for (auto& [i, w] : pou.weights[x]) terms.emplace_back(w, &f.values[static_cast<std::size_t>(pos[pou.anchors[i]])]);
    res.values[x] = combine(terms, f.target.dim());
  }
  std::size_t checked = aux_anchor_check(space, pou);
  res.diagnostics = {{"blocks", static_cast<double>(cover.base.size())},
                     {"alpha", cover.params.alpha},
                     {"delta", cover.params.delta},
                     {"gamma", cover.params.gamma},
                     {"multiplicity_bound", static_cast<double>(cover.params.n + 1)},
                     {"max_multiplicity", static_cast<double>(cover.report.max_multiplicity)},
                     {"exponent", pou.exponent},
                     {"anchor_checks", static_cast<double>(checked)}};
  finalize(res, space, f, constant, label);
  return res;
}

double lee_naor_omega(double t, std::size_t N) {
  const double top = std::ldexp(1.0, static_cast<int>(N));
  if (t <= 0.5 || t >= 2 * top) return 0.0;
  if (t <= 1) return 2 * t - 1;
  if (t <= top) return 1.0;
  return 2 - t / top;
}

std::size_t lee_naor_levels(std::size_t n) {
  double v = std::floor(std::log2(std::log(static_cast<double>(n))));
  return v < 1 ? 1 : static_cast<std::size_t>(v);
}

ExtensionResult lee_naor_extend(const FiniteMetricSpace& space, const PartialMap& f, const LeeNaorOptions& options) {
  f.check(space);
  check_normed(f);
  const std::size_t nA = f.domain.size();
  if (nA < kLeeNaorMinDomain) fail(ErrorCode::DomainTooSmall, "Lee-Naor needs |A| >= 16, got " + std::to_string(nA));
  const std::size_t levels = lee_naor_levels(nA), N = levels - 1;
  const double nd = static_cast<double>(nA);
  const double constant = 600 * std::log(nd) / std::log(std::log(nd));
  ExtensionResult res;
  res.method = Method::LeeNaor;
  res.lip_f = certify_partial(space, f).constant;
  res.values = start_values(space, f);
  res.inputs = {{"n", nd}, {"N", static_cast<double>(N)}, {"seed", static_cast<double>(options.seed)},
                {"permutations", static_cast<double>(options.permutations)}};
  const Subset& A = f.domain;
  Subset ext = complement(space, A);
  if (ext.empty()) {
    finalize(res, space, f, constant, "600 log n / log log n Lip f");
    return res;
  }
  const std::size_t P = space.size();
  std::vector<long> pos = domain_positions(space, f);
  std::vector<std::size_t> ax(P);
  std::vector<double> dA(P, 0.0);
  for (std::size_t x = 0; x < P; ++x) {
    ax[x] = nearest_in(space, x, A);
    dA[x] = space.d(x, ax[x]);
  }
  double dmin = std::numeric_limits<double>::infinity(), dmax = 0.0;
  for (std::size_t x : ext) {
    dmin = std::min(dmin, dA[x]);
    dmax = std::max(dmax, dA[x]);
  }
  const long m_lo = static_cast<long>(std::floor(std::log2(8 * dmin))) - 1;
  const long m_hi = static_cast<long>(std::ceil(std::log2(std::ldexp(dmax, static_cast<int>(N) + 5)))) + 1;

  // neighbours of every point by increasing distance (ties by index)
  std::vector<std::vector<std::size_t>> order(P);
  for (std::size_t x = 0; x < P; ++x) {
    order[x].resize(P);
    for (std::size_t y = 0; y < P; ++y) order[x][y] = y;
    std::stable_sort(order[x].begin(), order[x].end(),
                     [&](std::size_t a, std::size_t b) { return space.d(x, a) < space.d(x, b); });
  }
  FiniteMetricSpace Aspace = space.subspace(A);

  std::vector<std::vector<double>> acc(P, std::vector<double>(f.target.dim(), 0.0));
  std::vector<double> omega_sum(P, 0.0);
  std::vector<std::size_t> omega_support(P, 0);
  double worst_bound_ratio = 0.0;
  std::size_t scales_used = 0, checked_points = 0;

  for (long m = m_lo; m <= m_hi; ++m) {
    const double scale = std::ldexp(1.0, static_cast<int>(m));
    std::vector<double> om(P, 0.0);
    bool any = false;
    for (std::size_t x : ext) {
      om[x] = lee_naor_omega(scale / (16 * dA[x]), N);
      if (om[x] != 0.0) any = true;
    }
    if (!any) continue;
    ++scales_used;
    PartitionMode mode = nA <= 8 ? PartitionMode::enumerate()
                                 : PartitionMode::sample(options.permutations,
                                                         Rng::derive(options.seed, static_cast<std::uint64_t>(m + (1L << 20))));
    Covering cov = iterative_ball_partition(Aspace, scale / 2, mode);
    const std::size_t nb = cov.blocks.size();
    // block membership of A points, global indices
    std::vector<std::vector<char>> inA(nb, std::vector<char>(P, 0));
    std::vector<std::size_t> anchor(nb);
    std::vector<std::vector<std::size_t>> blocks_of(P);
    for (std::size_t i = 0; i < nb; ++i) {
      anchor[i] = A[cov.blocks[i].front()];
      for (std::size_t a : cov.blocks[i]) {
        inA[i][A[a]] = 1;
        blocks_of[A[a]].push_back(i);
      }
    }
    std::vector<char> inXm(P, 0);
    for (std::size_t x = 0; x < P; ++x) inXm[x] = dA[x] <= scale;
    for (std::size_t x = 0; x < P; ++x) {
      if (!inXm[x]) continue;
      std::size_t big = 0, small = 0;
      for (std::size_t a : A) {
        double d = space.d(ax[x], a);
        if (d <= scale) ++big;
        if (d <= scale / 4) ++small;
      }
      const double expo = std::max(1.0, std::log(static_cast<double>(big) / static_cast<double>(small)));
      std::vector<std::pair<double, const Point*>> terms;
      double total = 0.0;
      for (std::size_t i : blocks_of[ax[x]]) {
        double d = scale / 16;
        for (std::size_t y : order[x])
          if (inXm[y] && !inA[i][ax[y]]) {
            d = space.d(x, y);
            break;
          }
        double psi = static_cast<double>(cov.multiplicity[i]) * std::pow(d, expo);
        if (psi > 0) {
          terms.emplace_back(psi, &f.values[static_cast<std::size_t>(pos[anchor[i]])]);
          total += psi;
        }
      }
      if (!(total > 0)) fail(ErrorCode::UncoveredPoint, "Lee-Naor weights vanish at point " + std::to_string(x));
      for (auto& t : terms) t.first /= total;
      Point Fm = combine(terms, f.target.dim());
      const Point& fax = f.values[static_cast<std::size_t>(pos[ax[x]])];
      double dev = f.target.distance(Fm, fax);
      double allowed = scale * res.lip_f;
      ++checked_points;
      if (allowed > 0) worst_bound_ratio = std::max(worst_bound_ratio, dev / allowed);
      if (dev > allowed * (1 + 1e-12) + 1e-300)
        fail(ErrorCode::PropertyViolation, "||F_m(x) - f(a_x)|| > 2^m at point " + std::to_string(x) +
                                               ", scale " + std::to_string(m));
      if (om[x] != 0.0 && !contains(A, x)) {
        for (std::size_t c = 0; c < Fm.size(); ++c) acc[x][c] += om[x] * Fm[c];
        omega_sum[x] += om[x];
        ++omega_support[x];
      }
    }
  }
  const double L = static_cast<double>(levels);
  for (std::size_t x : ext) {
    if (std::abs(omega_sum[x] - L) > 1e-9)
      fail(ErrorCode::PropertyViolation, "sum of cutoffs is " + std::to_string(omega_sum[x]) + ", not N+1, at point " +
                                             std::to_string(x));
    if (omega_support[x] > N + 2)
      fail(ErrorCode::PropertyViolation, "more than N+2 nonzero cutoffs at point " + std::to_string(x));
    for (std::size_t c = 0; c < acc[x].size(); ++c) res.values[x][c] = acc[x][c] / L;
  }
  res.diagnostics = {{"scales", static_cast<double>(scales_used)},
                     {"checked_points", static_cast<double>(checked_points)},
                     {"max_deviation_ratio", worst_bound_ratio}};
  finalize(res, space, f, constant, "600 log n / log log n Lip f");
  return res;
}

ExtensionResult nerve_extend(const FiniteMetricSpace& space, const PartialMap& f, const WhitneyCovering& cover,
                             ExtensorKind kind, std::size_t skeletal_mesh) {
  f.check(space);
  check_normed(f);
  if (!cover.verified) fail(ErrorCode::CoverNotVerified, "nerve extension needs a verified Whitney cover");
  if (cover.A != f.domain) fail(ErrorCode::InvalidArgument, "cover was built for a different domain");
  ExtensionResult res;
  res.method = Method::Nerve;
  res.lip_f = certify_partial(space, f).constant;
  res.values = start_values(space, f);
  const auto& p = cover.params;
  PartitionOfUnity pou = build_partition(space, cover, ExponentRule::General);
  SimplicialComplex K = nerve_of_cover(pou);
  std::vector<long> pos = domain_positions(space, f);
  std::map<std::size_t, Point> vertex_values;
  for (std::size_t i = 0; i < pou.blocks.size(); ++i)
    vertex_values[i] = f.values[static_cast<std::size_t>(pos[pou.anchors[i]])];

  double C = 1.0;
  if (kind == ExtensorKind::Barycentric) {
    BarycentricExtensor psi(f.target, vertex_values);
    for (std::size_t x : pou.exterior) {
      SimplexPoint phi = nerve_map(pou, x);
      phi.complex = &K;
      res.values[x] = psi(phi);
    }
  } else {
    SkeletalExtensor psi(K, f.target, vertex_values, 16);
    for (std::size_t x : pou.exterior) {
      SimplexPoint phi = nerve_map(pou, x);
      phi.complex = &K;
      res.values[x] = psi(phi);
    }
    C = 0.0;
    for (const Simplex& s : K.maximal()) {
      if (s.size() < 2) continue;
      auto m = measure_simplex_constant(&K, s, f.target, [&](const SimplexPoint& q) { return psi(q); }, skeletal_mesh);
      C = std::max(C, m.ratio);
    }
    C = std::max(C, 1.0);
  }
  std::size_t checked = aux_anchor_check(space, pou);
  const double n = static_cast<double>(p.n);
  const double constant = 100 * C * p.alpha / p.delta * p.gamma * std::log2(n + 2);
  res.inputs = {{"n", n}, {"alpha", p.alpha}, {"delta", p.delta}, {"gamma", p.gamma}, {"C", C}};
  res.diagnostics = {{"blocks", static_cast<double>(pou.blocks.size())},
                     {"nerve_dimension", static_cast<double>(K.dimension())},
                     {"exponent", pou.exponent},
                     {"anchor_checks", static_cast<double>(checked)},
                     {"log10_detailed_constant", log10_detailed_constant(cover.nagata.n, cover.nagata.c, 1.0)},
                     {"log10_headline_constant", log10_headline_constant(cover.nagata.n, cover.nagata.c, 1.0)}};
  finalize(res, space, f, constant, "100 C alpha gamma log2(n+2) / delta Lip f");
  return res;
}

double log10_detailed_constant(std::size_t n, double c, double lambda) {
  const double nd = static_cast<double>(n);
  return std::log10(3.0) + 10 + 10 * std::log10(c + 1) + (nd + 1) * (5 + std::log10(lambda)) +
         6 * nd * std::log10(nd + 1);
}

double log10_headline_constant(std::size_t n, double c, double lambda) {
  return 1e10 + (static_cast<double>(n) + 1) * std::log10(lambda) + 10 * std::log10(c + 1);
}

}  // namespace lipext
