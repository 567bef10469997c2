#include "lipext_tools/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lipext/conical.hpp"
#include "lipext/coverings.hpp"
#include "lipext/errors.hpp"
#include "lipext/extenders.hpp"
#include "lipext/partition.hpp"
#include "lipext/random.hpp"
#include "lipext/simplicial.hpp"
#include "lipext/transport.hpp"
#include "lipext/whitney.hpp"
#include "lipext_tools/instances.hpp"

namespace lipext::tools {

namespace {

constexpr double kLipSlack = 1e-9;
constexpr double kSumTol = 1e-9;
constexpr double kW1Tol = 1e-9;
constexpr double kSphereTol = 1e-6;
constexpr double kConicalRel = 1e-6;
constexpr double kTightnessGap = 0.05;
constexpr double kRouteRel = 1e-12;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::vector<PlanarInstance> planar_suite(std::uint64_t seed) {
  std::vector<PlanarInstance> out;
  for (std::uint64_t k = 0; k < 20; ++k) {
    std::uint64_t s = Rng::derive(seed, 9000 + k);
    Rng rng(s);
    std::size_t points = 30 + rng.below(31);
    std::size_t domain = 5 + rng.below(16);
    double lip = rng.uniform(0.5, 1.0);
    out.push_back(planar_instance(Rng::derive(s, 1), points, domain, 2, lip));
  }
  return out;
}

Subset exterior_of(const WhitneyCovering& cov) {
  Subset all;
  for (const auto& b : cov.base.blocks) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  return all;
}

// ---- 1 ----
std::string mcshane_suite(std::uint64_t seed) {
  std::size_t pairs = 0;
  double worst = -1e300;
  for (std::uint64_t k = 0; k < 100; ++k) {
    Rng rng(Rng::derive(seed, 100 + k));
    std::size_t n = 2 + rng.below(39);
    PointCloud pc;
    pc.coords = random_points(rng, n, 2, 0.0, 10.0);
    FiniteMetricSpace X = pc.metric();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    rng.shuffle(idx);
    idx.resize(1 + rng.below(n));
    PartialMap f;
    f.domain = make_subset(X, idx);
    f.target = TargetSpace::normed(1);
    for (std::size_t a = 0; a < f.domain.size(); ++a) f.values.push_back({rng.uniform(-5, 5)});
    ExtensionResult r = mcshane_extend(X, f);
    require(r.certificate.constant <= r.lip_f + kLipSlack,
            "instance " + std::to_string(k) + ": Lip F = " + num(r.certificate.constant) + " > Lip f = " + num(r.lip_f));
    for (std::size_t a = 0; a < f.domain.size(); ++a)
      require(r.values[f.domain[a]] == f.values[a], "instance " + std::to_string(k) + ": F differs from f on A");
    worst = std::max(worst, r.certificate.constant - r.lip_f);
    pairs += r.certificate.pair_count;
  }
  return "100 instances, " + std::to_string(pairs) + " pairs, max(Lip F - Lip f) = " + num(worst);
}

// ---- 2 ----
std::string padded_suite(std::uint64_t seed) {
  std::size_t checks = 0;
  for (std::uint64_t k = 0; k < 200; ++k) {
    Rng rng(Rng::derive(seed, 200 + k));
    std::size_t n = 2 + rng.below(5);
    FiniteMetricSpace X = random_graph_metric(rng, n);
    double diam = X.diameter();
    for (double frac : {0.15, 0.35, 0.75}) {
      double D = frac * diam;
      Covering cov = iterative_ball_partition(X, D, PartitionMode::enumerate());
      std::vector<PaddedPoint> lib = padded_ratio_check(X, cov);
      // independent recount over all n! orders
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      std::vector<std::uint64_t> deep(n, 0);
      std::uint64_t total = 0;
      do {
        ++total;
        std::vector<long> block(n, -1);
        for (std::size_t k2 = 0; k2 < n; ++k2)
          for (std::size_t y = 0; y < n; ++y)
            if (block[y] < 0 && X.d(perm[k2], y) <= D) block[y] = static_cast<long>(k2);
        for (std::size_t x = 0; x < n; ++x) {
          bool inside = true;
          for (std::size_t y = 0; y < n; ++y)
            if (X.d(x, y) <= D / 2 && block[y] != block[x]) inside = false;
          if (inside) ++deep[x];
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      require(cov.enumerated && cov.permutations == total, "space " + std::to_string(k) + ": enumeration incomplete");
      for (std::size_t x = 0; x < n; ++x) {
        std::uint64_t inner = ball(X, x, D / 2).size(), outer = ball(X, x, 2 * D).size();
        require(deep[x] * outer >= total * inner, "space " + std::to_string(k) + ", point " + std::to_string(x) +
                                                      ": padded inequality fails");
        require(lib[x].pass && lib[x].deep == deep[x] && lib[x].containing == total,
                "space " + std::to_string(k) + ", point " + std::to_string(x) + ": library counts differ");
        ++checks;
      }
    }
  }
  return std::to_string(checks) + " point checks over 200 spaces x 3 scales";
}

// ---- 3 ----
std::string wasserstein_suite(std::uint64_t seed) {
  TargetSpace T = TargetSpace::normed(2);
  double worst_eq = 0.0;
  for (std::uint64_t k = 0; k < 50; ++k) {
    Rng rng(Rng::derive(seed, 300 + k));
    std::size_t N = 1 + rng.below(6);
    auto ys = random_points(rng, N, 2, 0, 1), zs = random_points(rng, N, 2, 0, 1);
    double a = w1_distance(DiscreteMeasure::uniform(T, ys), DiscreteMeasure::uniform(T, zs)).value;
    double b = w1_permutation(T, ys, zs);
    worst_eq = std::max(worst_eq, std::abs(a - b));
    require(std::abs(a - b) <= kW1Tol, "uniform instance " + std::to_string(k) + ": " + num(a) + " vs " + num(b));
  }
  auto measure = [&](Rng& rng) {
    std::size_t m = 1 + rng.below(5);
    return DiscreteMeasure(T, random_points(rng, m, 2, 0, 1), random_probability(rng, m));
  };
  double worst_tri = -1e300;
  for (std::uint64_t k = 0; k < 100; ++k) {
    Rng rng(Rng::derive(seed, 400 + k));
    DiscreteMeasure mu = measure(rng), nu = measure(rng), rho = measure(rng);
    double mn = w1_distance(mu, nu).value, nm = w1_distance(nu, mu).value;
    double nr = w1_distance(nu, rho).value, mr = w1_distance(mu, rho).value;
    require(std::abs(w1_distance(mu, mu).value) <= kW1Tol, "triple " + std::to_string(k) + ": W1(mu,mu) != 0");
    require(mn >= -kW1Tol, "triple " + std::to_string(k) + ": negative distance");
    require(std::abs(mn - nm) <= kW1Tol, "triple " + std::to_string(k) + ": asymmetric");
    require(mr <= mn + nr + kW1Tol, "triple " + std::to_string(k) + ": triangle inequality fails");
    worst_tri = std::max(worst_tri, mr - mn - nr);
  }
  double worst_margin = 1e300;
  for (std::uint64_t k = 0; k < 200; ++k) {
    Rng rng(Rng::derive(seed, 600 + k));
    std::size_t m = 2 + rng.below(5);
    auto pts = random_points(rng, m, 2, 0, 1);
    EspinolaReport rep = espinola_check(T, pts, random_probability(rng, m), random_probability(rng, m));
    worst_margin = std::min(worst_margin, rep.margin);
    require(rep.margin >= -kW1Tol, "case " + std::to_string(k) + ": margin " + num(rep.margin));
  }
  return "max |flow - permutation| = " + num(worst_eq) + ", max triangle excess = " + num(worst_tri) +
         ", min transport margin = " + num(worst_margin);
}

// ---- 4 ----
struct DenseCase {
  std::string name;
  PointCloud cloud;
  Subset A;
};

std::vector<DenseCase> dense_cases() {
  std::vector<DenseCase> out;
  out.push_back({"line-1", line_cloud({0.0}, 1.0, 0.005, 401), {0}});
  out.push_back({"line-2", line_cloud({0.0, 0.5}, 1.0, 0.004, 1001), {0, 1}});
  DenseCase arc{"arc", {}, {0}};
  arc.cloud.coords.push_back({0.0, 0.0});
  for (int k = 0; k < 300; ++k) arc.cloud.coords.push_back({2 * std::cos(0.005 * k), 2 * std::sin(0.005 * k)});
  for (int k = 1; k <= 200; ++k) {
    double rad = 2 + 0.01 * k;
    arc.cloud.coords.push_back({rad * std::cos(-0.3), rad * std::sin(-0.3)});
  }
  out.push_back(std::move(arc));
  return out;
}

void check_partition(const FiniteMetricSpace& X, const WhitneyCovering& cov, const PartitionOfUnity& pou,
                     const std::string& name, std::size_t& checked) {
  const std::size_t max_support = 3 * (cov.nagata.n + 1);
  for (std::size_t x : exterior_of(cov)) {
    const SparseWeights& w = pou.weights[x];
    double sum = 0.0;
    for (auto& [i, v] : w) {
      require(v > 0, name + ": nonpositive weight at point " + std::to_string(x));
      require(dist_to_set(X, x, pou.blocks[i]) < pou.params.delta * pou.r[i],
              name + ": weight of block " + std::to_string(i) + " outside its neighbourhood at point " +
                  std::to_string(x));
      sum += v;
    }
    require(std::abs(sum - 1) <= kSumTol, name + ": weights sum to " + num(sum) + " at point " + std::to_string(x));
    require(w.size() <= max_support, name + ": support of size " + std::to_string(w.size()) + " at point " +
                                         std::to_string(x));
    ++checked;
  }
}

std::string partition_suite(std::uint64_t seed) {
  std::size_t checked = 0, dense_points = 0;
  double min_margin = 1e300;
  auto planar = planar_suite(seed);
  for (std::size_t k = 0; k < planar.size(); ++k) {
    auto& inst = planar[k];
    WhitneyCovering cov = build_whitney_cover(inst.space, inst.f.domain, kDefaultWhitneyR,
                                              grid_oracle(inst.cloud, inst.f.domain));
    PartitionOfUnity pou = build_partition(inst.space, cov, ExponentRule::Basic);
    check_partition(inst.space, cov, pou, "planar " + std::to_string(k), checked);
  }
  for (auto& dc : dense_cases()) {
    FiniteMetricSpace X = dc.cloud.metric();
    WhitneyCovering cov = build_whitney_cover(X, dc.A, kDefaultWhitneyR, grid_oracle(dc.cloud, dc.A));
    PartitionOfUnity pou = build_partition(X, cov, ExponentRule::Basic);
    check_partition(X, cov, pou, dc.name, checked);
    LipschitzSumReport rep = lipschitz_sum_report(pou);
    require(rep.dense, dc.name + ": mesh " + num(rep.mesh) + " exceeds 0.01 min r = " + num(0.01 * rep.min_r));
    for (const auto& p : rep.points) {
      require(p.sum <= p.bound, dc.name + ": Lipschitz sum " + num(p.sum) + " > " + num(p.bound) + " at point " +
                                    std::to_string(p.x));
      min_margin = std::min(min_margin, p.bound - p.sum);
      ++dense_points;
    }
  }
  return std::to_string(checked) + " exterior points, " + std::to_string(dense_points) +
         " dense points, min Lipschitz-sum margin " + num(min_margin);
}

// ---- 5 ----
struct RefinedCase {
  std::string name;
  PointCloud cloud;
  Subset A;
  bool grid = false;
  double c = 0.0;
};

std::vector<RefinedCase> refined_cases(std::uint64_t seed) {
  std::vector<RefinedCase> out;
  {
    RefinedCase rc{"point", {}, {0}, false, 0.0};
    rc.cloud.coords.push_back({0.0});
    for (int k = 1; k <= 300; ++k) rc.cloud.coords.push_back({0.01 * std::pow(1.05, k)});
    out.push_back(std::move(rc));
  }
  {
    Rng rng(Rng::derive(seed, 510));
    RefinedCase rc{"pair-line", {}, {0, 1}, false, 1.0};
    rc.cloud.coords = {{0.0}, {1.0}};
    for (int k = 0; k < 150; ++k) rc.cloud.coords.push_back({std::exp(rng.uniform(std::log(1.5), std::log(1e4)))});
    out.push_back(std::move(rc));
  }
  {
    Rng rng(Rng::derive(seed, 511));
    RefinedCase rc{"pair-plane", {}, {0, 1}, false, 1.0};
    rc.cloud.coords = {{0.0, 0.0}, {1.0, 0.0}};
    for (int k = 0; k < 150; ++k) {
      double rad = std::exp(rng.uniform(std::log(2.0), std::log(1e5))), th = rng.uniform(0, 2 * M_PI);
      rc.cloud.coords.push_back({rad * std::cos(th), rad * std::sin(th)});
    }
    out.push_back(std::move(rc));
  }
  for (int v = 0; v < 2; ++v) {
    Rng rng(Rng::derive(seed, 520 + v));
    RefinedCase rc{"grid-line-" + std::to_string(v), {}, {}, true, 1.0};
    std::size_t na = 10 + 10 * v;
    double width = v == 0 ? 1.0 : 10.0;
    for (std::size_t k = 0; k < na; ++k) rc.cloud.coords.push_back({rng.uniform(0, width)});
    for (int k = 0; k < 150; ++k) {
      double t = std::exp(rng.uniform(std::log(0.5), std::log(1e4)));
      rc.cloud.coords.push_back({rng.below(2) ? width + t : -t});
    }
    rc.A.resize(na);
    std::iota(rc.A.begin(), rc.A.end(), std::size_t{0});
    out.push_back(std::move(rc));
  }
  return out;
}

std::string whitney_suite(std::uint64_t seed) {
  std::size_t blocks = 0;
  double max_diam = 0, max_dist = 0;
  std::size_t max_mult = 0;
  auto planar = planar_suite(seed);
  for (std::size_t k = 0; k < planar.size(); ++k) {
    auto& inst = planar[k];
    const Subset& A = inst.f.domain;
    WhitneyCovering cov = build_whitney_cover(inst.space, A, kDefaultWhitneyR, grid_oracle(inst.cloud, A));
    WhitneyReport rep = verify_whitney(inst.space, cov.base.blocks, A, cov.params);
    require(cov.verified && rep.ok(), "planar " + std::to_string(k) + ": " +
                                          (rep.violations.empty() ? std::string("not verified") : rep.violations.front()));
    require(exterior_of(cov) == complement(inst.space, A), "planar " + std::to_string(k) + ": blocks do not partition X \\ A");
    blocks += cov.base.size();
    max_diam = std::max(max_diam, rep.max_diameter_ratio / cov.params.alpha);
    max_dist = std::max(max_dist, rep.max_distance_ratio / cov.params.gamma);
    max_mult = std::max(max_mult, rep.max_multiplicity);
  }
  std::ostringstream refined;
  for (auto& rc : refined_cases(seed)) {
    FiniteMetricSpace X = rc.cloud.metric();
    NagataOracle oracle = rc.grid ? grid_oracle(rc.cloud, rc.A) : component_oracle(X, rc.A, rc.c);
    WhitneyCovering cov = build_refined_whitney_cover(X, rc.A, std::nullopt, oracle);
    require(cov.params.n <= 2, rc.name + ": n = " + std::to_string(cov.params.n));
    WhitneyReport rep = verify_whitney(X, cov.base.blocks, rc.A, cov.params);
    require(rep.ok(), rc.name + ": " + (rep.violations.empty() ? std::string("axioms fail") : rep.violations.front()));
    double theta = std::pow(cov.r, 1.0 / (2.0 * static_cast<double>(cov.params.n)));
    MultiplicityReport m = refined_subset_multiplicity(X, cov.base.blocks, rc.A, theta, 256);
    require(m.multiplicity <= cov.params.n + 1, rc.name + ": a set E meets " + std::to_string(m.multiplicity) +
                                                    " blocks, more than n+1 = " + std::to_string(cov.params.n + 1));
    refined << " " << rc.name << "(n=" << cov.params.n << ",E<=" << m.multiplicity << ")";
  }
  return std::to_string(blocks) + " basic blocks; max diam/(alpha r) " + num(max_diam) + ", max hd/(gamma r) " +
         num(max_dist) + ", max multiplicity " + std::to_string(max_mult) + "; refined:" + refined.str();
}

// ---- 6 ----
std::string whitney_bound_suite(std::uint64_t seed) {
  auto planar = planar_suite(seed);
  double worst = 0.0;
  std::size_t active = 0;
  for (std::size_t k = 0; k < planar.size(); ++k) {
    auto& inst = planar[k];
    const Subset& A = inst.f.domain;
    NagataOracle oracle = grid_oracle(inst.cloud, A);
    ExtensionResult r = whitney_extend(inst.space, inst.f, oracle);
    NagataConstants nc = grid_constants(2);
    double bound = 1000 * (nc.c + 1) * std::log2(static_cast<double>(nc.n) + 2);
    require(r.lip_f <= 1 + 1e-12, "planar " + std::to_string(k) + ": Lip f > 1");
    require(r.certificate.constant <= bound + kLipSlack,
            "planar " + std::to_string(k) + ": Lip F = " + num(r.certificate.constant) + " > " + num(bound));
    worst = std::max(worst, r.certificate.constant / bound);
    WhitneyCovering cov = build_whitney_cover(inst.space, A, kDefaultWhitneyR, oracle);
    PartitionOfUnity pou = build_partition(inst.space, cov, ExponentRule::Basic);
    for (std::size_t i = 0; i < pou.blocks.size(); ++i) {
      std::size_t best = A.front();
      double bd = dist_to_set(inst.space, best, pou.blocks[i]);
      for (std::size_t a : A) {
        double d = dist_to_set(inst.space, a, pou.blocks[i]);
        if (d < bd) bd = d, best = a;
      }
      require(best == pou.anchors[i], "planar " + std::to_string(k) + ": anchor of block " + std::to_string(i));
    }
    const auto& p = cov.params;
    for (std::size_t x : exterior_of(cov))
      for (auto& [i, w] : pou.weights[x]) {
        require(inst.space.d(pou.anchors[i], x) <= (1 + p.alpha + p.delta) * pou.r[i],
                "planar " + std::to_string(k) + ": anchor inequality fails at point " + std::to_string(x));
        ++active;
      }
  }
  return "20 instances, max Lip F / bound = " + num(worst) + ", " + std::to_string(active) + " active pairs";
}

// ---- 7 ----
std::string lee_naor_suite(std::uint64_t seed) {
  std::ostringstream out;
  for (std::size_t n : {16, 32, 64}) {
    std::uint64_t s = Rng::derive(seed, 700 + n);
    PlanarInstance inst = planar_instance(s, n + 40, n, 2, 1.0);
    ExtensionResult r = lee_naor_extend(inst.space, inst.f, {Rng::derive(s, 2), 2000});
    const std::size_t levels = lee_naor_levels(n), N = levels - 1;
    for (std::size_t x : complement(inst.space, inst.f.domain)) {
      double d = dist_to_set(inst.space, x, inst.f.domain);
      long lo = static_cast<long>(std::floor(std::log2(d))) - 8;
      long hi = lo + static_cast<long>(N) + 24;
      double sum = 0.0;
      std::size_t nonzero = 0;
      for (long m = lo; m <= hi; ++m) {
        double w = lee_naor_omega(std::ldexp(1.0, static_cast<int>(m)) / (16 * d), N);
        sum += w;
        nonzero += w != 0.0;
      }
      require(std::abs(sum - static_cast<double>(levels)) <= kSumTol,
              "n = " + std::to_string(n) + ": sum of cutoffs " + num(sum) + " at point " + std::to_string(x));
      require(nonzero <= N + 2, "n = " + std::to_string(n) + ": too many cutoffs at point " + std::to_string(x));
    }
    double dev = 0.0;
    for (auto& [k, v] : r.diagnostics)
      if (k == "max_deviation_ratio") dev = v;
    require(dev <= 1 + 1e-12, "n = " + std::to_string(n) + ": ||F_m - f(a_x)|| exceeds 2^m");
    for (std::size_t a = 0; a < inst.f.domain.size(); ++a)
      require(r.values[inst.f.domain[a]] == inst.f.values[a], "n = " + std::to_string(n) + ": F differs from f on A");
    double nd = static_cast<double>(n);
    double bound = 600 * std::log(nd) / std::log(std::log(nd)) * r.lip_f;
    require(r.certificate.constant <= bound + kLipSlack,
            "n = " + std::to_string(n) + ": Lip F = " + num(r.certificate.constant) + " > " + num(bound));
    out << " n=" << n << ": Lip F " << num(r.certificate.constant) << ", max dev/2^m " << num(dev) << ";";
  }
  return out.str().substr(1);
}

// ---- 8 ----
std::string sphere_suite(std::uint64_t) {
  double c1 = sphere_constant(1), c2 = sphere_constant(2);
  require(std::abs(c1 - 4 / M_PI) <= kSphereTol, "c_1 = " + num(c1));
  require(std::abs(c2 - 4.0 / 3.0) <= kSphereTol, "c_2 = " + num(c2));
  double mx = 0.0;
  for (int n = 1; n <= 6; ++n) {
    double c = sphere_constant(n);
    require(c <= std::sqrt(2.0) + 1e-9, "c_" + std::to_string(n) + " = " + num(c) + " exceeds sqrt 2");
    mx = std::max(mx, c);
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "c_1 = %.9f, c_2 = %.9f, max c_n (n <= 6) = %.9f", c1, c2, mx);
  return buf;
}

// ---- 9 ----
std::string conical_suite(std::uint64_t seed) {
  std::ostringstream out;
  TargetSpace T = TargetSpace::normed(3);
  for (int m = 1; m <= 2; ++m) {
    std::vector<Point> sphere = sphere_samples(m);
    std::vector<Point> values;
    for (const Point& u : sphere) {
      double z = m == 2 ? u[2] : 0.0;
      values.push_back({u[0] + 0.3 * z, u[0] * u[1], std::sin(3 * u[1]) / 3 + 0.2 * z});
    }
    ConicalExtension ext = conical_extend(sphere, values, T, {0.3, -0.2, 0.1});
    ConicalCheck chk = check_conical(ext, 10000, Rng::derive(seed, 900 + m));
    double R = ext.radius(), L = ext.sphere_constant();
    double bound = std::sqrt(1 + (R / L) * (R / L)) * L * (1 + kConicalRel);
    require(chk.empirical <= bound, "m = " + std::to_string(m) + ": empirical " + num(chk.empirical) + " > " + num(bound));
    out << "m=" << m << ": " << num(chk.empirical) << " <= " << num(bound) << "; ";
  }
  TightnessProbe probe = wasserstein_circle_probe(64);
  require(probe.best_ratio >= probe.target - kTightnessGap,
          "tightness ratio " + num(probe.best_ratio) + " < " + num(probe.target - kTightnessGap));
  out << "circle K=64: ratio " << num(probe.best_ratio) << " vs sqrt(1+R^2) = " << num(probe.target);
  return out.str();
}

// ---- 10 ----
std::string routing_suite(std::uint64_t seed) {
  Rng rng(Rng::derive(seed, 1000));
  double worst = 0.0;
  for (std::size_t k = 0; k < 10000; ++k) {
    std::size_t n = 1 + k % 6;
    std::vector<std::size_t> verts(2 * n + 2);
    std::iota(verts.begin(), verts.end(), std::size_t{0});
    rng.shuffle(verts);
    Simplex d1(verts.begin(), verts.begin() + static_cast<long>(n + 1));
    std::size_t shared = 1 + rng.below(n + 1);
    std::size_t size2 = shared + rng.below(n + 1 - shared + 1);
    Simplex d2(verts.begin(), verts.begin() + static_cast<long>(shared));
    d2.insert(d2.end(), verts.begin() + static_cast<long>(n + 1),
              verts.begin() + static_cast<long>(n + 1 + size2 - shared));
    std::sort(d1.begin(), d1.end());
    std::sort(d2.begin(), d2.end());
    SimplexPoint x = random_point_in(nullptr, d1, rng), y = random_point_in(nullptr, d2, rng);
    RouteResult r = route_through_intersection(d1, d2, x, y);
    Simplex inter;
    std::set_intersection(d1.begin(), d1.end(), d2.begin(), d2.end(), std::back_inserter(inter));
    for (std::size_t v : r.z.support())
      require(std::binary_search(inter.begin(), inter.end(), v), "pair " + std::to_string(k) + ": z leaves the intersection");
    double sum = 0.0;
    for (auto& [v, w] : r.z.coords) sum += w;
    require(std::abs(sum - 1) <= 1e-12, "pair " + std::to_string(k) + ": z is not a convex combination");
    double nn = static_cast<double>(std::max(d1.size(), d2.size()) - 1);
    double direct = l2_distance(x, y), detour = l2_distance(x, r.z) + l2_distance(r.z, y);
    require(detour <= 4 * std::sqrt(nn) * direct * (1 + kRouteRel),
            "pair " + std::to_string(k) + ": detour " + num(detour) + " > 4 sqrt(n) |x-y|");
    if (direct > 0) worst = std::max(worst, detour / (std::sqrt(nn) * direct));
  }
  return "10000 pairs, max detour / (sqrt(n) |x-y|) = " + num(worst);
}

// ---- 11 ----
std::string nerve_suite(std::uint64_t seed) {
  auto planar = planar_suite(seed);
  double worst = 0.0;
  for (std::size_t k = 0; k < planar.size(); ++k) {
    auto& inst = planar[k];
    WhitneyCovering cov = build_whitney_cover(inst.space, inst.f.domain, kDefaultWhitneyR,
                                              grid_oracle(inst.cloud, inst.f.domain));
    ExtensionResult r = nerve_extend(inst.space, inst.f, cov, ExtensorKind::Barycentric);
    const auto& p = cov.params;
    double bound = 100 * p.alpha / p.delta * p.gamma * std::log2(static_cast<double>(p.n) + 2);
    require(r.lip_f <= 1 + 1e-12, "planar " + std::to_string(k) + ": Lip f > 1");
    require(r.certificate.constant <= bound + kLipSlack,
            "planar " + std::to_string(k) + ": Lip F = " + num(r.certificate.constant) + " > " + num(bound));
    worst = std::max(worst, r.certificate.constant / bound);
  }
  return "20 instances, max Lip F / bound = " + num(worst);
}

}  // namespace

std::vector<Criterion> acceptance_criteria() {
  return {
      {1, "McShane preservation", 2.0, mcshane_suite},
      {2, "padded decomposition, exhaustive", 30.0, padded_suite},
      {3, "Wasserstein oracle equivalence", 10.0, wasserstein_suite},
      {4, "partition of unity", 60.0, partition_suite},
      {5, "Whitney cover axioms", 120.0, whitney_suite},
      {6, "Whitney extension bound", 0.0, whitney_bound_suite},
      {7, "Lee-Naor suite", 0.0, lee_naor_suite},
      {8, "sphere constants", 0.0, sphere_suite},
      {9, "conical extension", 120.0, conical_suite},
      {10, "simplicial routing", 0.0, routing_suite},
      {11, "nerve extension bound", 0.0, nerve_suite},
  };
}

CriterionResult run_criterion(const Criterion& c, std::uint64_t seed) {
  CriterionResult r;
  r.id = c.id;
  r.name = c.name;
  r.limit_seconds = c.limit_seconds;
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.detail = c.body(seed);
    r.passed = true;
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.passed && c.limit_seconds > 0 && r.seconds > c.limit_seconds) {
    r.passed = false;
    r.detail = "runtime " + num(r.seconds) + " s exceeds " + num(c.limit_seconds) + " s; " + r.detail;
  }
  return r;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::vector<int>& only) {
  std::vector<CriterionResult> out;
  for (const auto& c : acceptance_criteria())
    if (only.empty() || std::find(only.begin(), only.end(), c.id) != only.end()) out.push_back(run_criterion(c, seed));
  return out;
}

std::string format_result(const CriterionResult& r) {
  char head[160];
  std::snprintf(head, sizeof head, "%s [%d] %s (%.2f s%s): ", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds, r.limit_seconds > 0 ? (", limit " + num(r.limit_seconds) + " s").c_str() : "");
  return head + r.detail;
}

}  // namespace lipext::tools
