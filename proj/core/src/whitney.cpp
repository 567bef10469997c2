#include "lipext/whitney.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "lipext/errors.hpp"

namespace lipext {

NagataOracle grid_oracle(const PointCloud& cloud, const Subset& A) {
  NagataOracle o;
  o.constants = grid_constants(cloud.dimension());
  o.cover = [cloud, A](double s) { return grid_cover(cloud, s, A); };
  return o;
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

long level_of(double d, double r, double offset = 0.0) {
  // largest k with r^(k + offset) <= d
  long k = static_cast<long>(std::floor(std::log(d) / std::log(r) - offset));
  while (std::pow(r, static_cast<double>(k) + offset) > d) --k;
  while (std::pow(r, static_cast<double>(k + 1) + offset) <= d) ++k;
  return k;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

NagataOracle component_oracle(const FiniteMetricSpace& space, const Subset& A, double c) {
  NagataOracle o;
  o.constants = {0, c};
  o.cover = [&space, A](double s) {
    UnionFind uf(A.size());
    for (std::size_t a = 0; a < A.size(); ++a)
      for (std::size_t b = a + 1; b < A.size(); ++b)
        if (space.d(A[a], A[b]) < s) uf.unite(a, b);
    Covering cov;
    cov.scale = s;
    std::map<std::size_t, std::size_t> block_of;
    for (std::size_t a = 0; a < A.size(); ++a) {
      auto [it, fresh] = block_of.emplace(uf.find(a), cov.blocks.size());
      if (fresh) cov.blocks.emplace_back();
      cov.blocks[it->second].push_back(A[a]);
    }
    return cov;
  };
  return o;
}

WhitneyReport verify_whitney(const FiniteMetricSpace& space, const std::vector<Subset>& blocks, const Subset& A,
                             const WhitneyParams& params) {
  WhitneyReport rep;
  if (A.empty()) fail(ErrorCode::EmptySubset, "verify_whitney needs a nonempty A");
  std::vector<double> r(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].empty()) fail(ErrorCode::InvalidArgument, "empty Whitney block " + std::to_string(i));
    r[i] = set_distance(space, blocks[i], A);
    if (!(r[i] > 0)) fail(ErrorCode::InvalidArgument, "Whitney block " + std::to_string(i) + " meets A");
    double diam = space.diameter(blocks[i]);
    rep.max_diameter_ratio = std::max(rep.max_diameter_ratio, diam / r[i]);
    if (diam > params.alpha * r[i]) {
      rep.diameter_ok = false;
      rep.violations.push_back("block " + std::to_string(i) + ": diam " + fmt(diam) + " > alpha*r_i = " +
                               fmt(params.alpha * r[i]));
    }
    double hd = hausdorff_to(space, blocks[i], A);
    rep.max_distance_ratio = std::max(rep.max_distance_ratio, hd / r[i]);
    if (hd > params.gamma * r[i]) {
      rep.distance_ok = false;
      rep.violations.push_back("block " + std::to_string(i) + ": hd " + fmt(hd) + " > gamma*r_i = " +
                               fmt(params.gamma * r[i]));
    }
  }
  for (std::size_t x : complement(space, A)) {
    std::size_t count = 0;
    std::vector<std::size_t> hit;
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if (dist_to_set(space, x, blocks[i]) < params.delta * r[i]) {
        ++count;
        hit.push_back(i);
      }
    rep.max_multiplicity = std::max(rep.max_multiplicity, count);
    if (count > params.n + 1) {
      rep.multiplicity_ok = false;
      std::string list;
      for (std::size_t i : hit) list += (list.empty() ? "" : ",") + std::to_string(i);
      rep.violations.push_back("point " + std::to_string(x) + " lies in " + std::to_string(count) +
                               " neighborhoods (blocks " + list + ")");
    }
  }
  return rep;
}

WhitneyCovering build_whitney_cover(const FiniteMetricSpace& space, const Subset& A, double r,
                                    const NagataOracle& oracle, std::size_t budget) {
  if (A.empty()) fail(ErrorCode::EmptySubset, "A must be nonempty");
  if (!(r > 1)) fail(ErrorCode::InvalidArgument, "r must exceed 1");
  Subset ext = complement(space, A);
  if (ext.empty()) fail(ErrorCode::EmptyComplement, "A = X, nothing to cover");
  const std::size_t n = oracle.constants.n;
  const double c = oracle.constants.c;
  const double eps = (r - 1) / (2 * r);
  const double delta = eps / (2 * r);

  std::map<long, Subset> annuli;
  for (std::size_t x : ext) annuli[level_of(dist_to_set(space, x, A), r)].push_back(x);

  WhitneyCovering out;
  out.A = A;
  out.kind = WhitneyKind::Basic;
  out.nagata = oracle.constants;
  out.r = r;
  for (const auto& [k, Rk] : annuli) {
    const double rk = std::pow(r, static_cast<double>(k));
    Subset W = greedy_separated_net(space, Rk, eps * rk);
    std::vector<std::size_t> rho(W.size());
    for (std::size_t w = 0; w < W.size(); ++w) rho[w] = nearest_in(space, W[w], A);
    const double s = 2 * (2 * eps + r) * rk;
    Covering cov = oracle.cover(s);
    NagataReport nr = verify_nagata(space, cov, s, n, c, budget);
    if (!nr.ok || cov.covered_set() != A)
      fail(ErrorCode::OracleNotNagata, "oracle cover at scale " + fmt(s) + " fails Nagata(" + std::to_string(n) +
                                           ", " + fmt(c) + ")");
    for (const Subset& Ai : cov.blocks) {
      Subset B;
      for (std::size_t x : Rk)
        for (std::size_t w = 0; w < W.size(); ++w)
          if (space.d(x, W[w]) <= eps * rk && contains(Ai, rho[w])) {
            B.push_back(x);
            break;
          }
      if (B.empty()) continue;
      out.base.block_dist_to_A.push_back(set_distance(space, B, A));
      out.base.blocks.push_back(std::move(B));
      out.level.push_back(k);
      out.sublevel.push_back(0);
    }
  }
  out.params.n = 3 * (n + 1) - 1;
  out.params.alpha = 2 * (r + eps) * (1 + c) / (1 - eps);
  out.params.delta = delta;
  out.params.gamma = r + eps;

  if (out.base.covered_set() != ext) fail(ErrorCode::InternalError, "Whitney blocks do not cover X \\ A");
  for (std::size_t i = 0; i < out.base.blocks.size(); ++i)
    for (std::size_t x : out.base.blocks[i])
      if (level_of(dist_to_set(space, x, A), r) != out.level[i])
        fail(ErrorCode::InternalError, "block " + std::to_string(i) + " leaves its annulus");
  out.report = verify_whitney(space, out.base.blocks, A, out.params);
  if (!out.report.ok())
    fail(ErrorCode::PropertyViolation, "Whitney axioms fail: " + out.report.violations.front());
  out.verified = true;
  return out;
}

double default_refined_r(std::size_t n, double c) {
  const double floor_value = 2 * (c + 1) * std::pow(4.0, static_cast<double>(n + 1));
  double r = 1.0;
  while (r <= floor_value) r *= 2;
  return r;
}

MultiplicityReport refined_subset_multiplicity(const FiniteMetricSpace& space, const std::vector<Subset>& blocks,
                                               const Subset& A, double theta, std::size_t budget) {
  std::size_t maxp = 0;
  for (const auto& b : blocks)
    for (std::size_t p : b) maxp = std::max(maxp, p + 1);
  std::vector<double> dA(maxp, 0.0);
  for (const auto& b : blocks)
    for (std::size_t p : b) dA[p] = dist_to_set(space, p, A);
  Admissible ok = [&](const std::vector<std::size_t>& E, std::size_t p) {
    double diam = 0.0, near = dA[p];
    for (std::size_t q : E) {
      near = std::min(near, dA[q]);
      for (std::size_t q2 : E) diam = std::max(diam, space.d(q, q2));
      diam = std::max(diam, space.d(p, q));
    }
    return diam <= theta * near;
  };
  return max_blocks_met(blocks, ok, budget);
}

WhitneyCovering build_refined_whitney_cover(const FiniteMetricSpace& space, const Subset& A,
                                            std::optional<double> r_opt, const NagataOracle& oracle,
                                            std::size_t budget) {
  if (A.empty()) fail(ErrorCode::EmptySubset, "A must be nonempty");
  Subset ext = complement(space, A);
  if (ext.empty()) fail(ErrorCode::EmptyComplement, "A = X, nothing to cover");
  const std::size_t n = oracle.constants.n + 1;
  const double c = oracle.constants.c;
  const double r = r_opt.value_or(default_refined_r(n, c));
  const double r_min = 2 * (c + 1) * std::pow(4.0, static_cast<double>(n + 1));
  if (!(r > r_min)) fail(ErrorCode::RTooSmall, "r = " + fmt(r) + " must exceed 2(c+1)4^(n+1) = " + fmt(r_min));
  const double nd = static_cast<double>(n);
  const double cprime = 2 * (c + 1) * (nd + 1);

  std::map<long, Covering> colored;
  auto colored_at = [&](long i) -> const Covering& {
    auto it = colored.find(i);
    if (it != colored.end()) return it->second;
    const double s = 4 * std::pow(r, static_cast<double>(i + 1));
    Covering base = oracle.cover(colored_base_scale(s, oracle.constants.n));
    Covering cov;
    try {
      cov = colored_cover(space, A, s, base, oracle.constants.n, c, std::max(budget, kDefaultSearchBudget));
    } catch (const Error& e) {
      fail(ErrorCode::OracleNotColored, std::string("colored cover at scale ") + fmt(s) + " failed: " + e.what());
    }
    for (std::size_t a = 0; a < cov.blocks.size(); ++a) {
      if (cov.colors[a] < 1 || cov.colors[a] > n || space.diameter(cov.blocks[a]) > cprime * s)
        fail(ErrorCode::OracleNotColored, "colored block violates color range or diameter at scale " + fmt(s));
    }
    return colored.emplace(i, std::move(cov)).first->second;
  };

  std::vector<double> dA(space.size(), 0.0);
  std::vector<std::size_t> rho(space.size(), 0);
  for (std::size_t x : ext) {
    dA[x] = dist_to_set(space, x, A);
    rho[x] = nearest_in(space, x, A);
  }

  WhitneyCovering out;
  out.A = A;
  out.kind = WhitneyKind::Refined;
  out.nagata = oracle.constants;
  out.r = r;
  for (std::size_t k = 0; k < n; ++k) {
    const double offset = static_cast<double>(k) / nd;
    std::map<long, Subset> sub;
    for (std::size_t x : ext) sub[level_of(dA[x], r, offset) + 1].push_back(x);
    for (const auto& [i, Rki] : sub) {
      std::vector<Subset> pieces;
      for (long lvl : {i, i + 1}) {
        const Covering& cov = colored_at(lvl);
        for (std::size_t a = 0; a < cov.blocks.size(); ++a) {
          if (cov.colors[a] != k + 1) continue;
          Subset piece;
          for (std::size_t x : Rki)
            if (contains(cov.blocks[a], rho[x])) piece.push_back(x);
          if (!piece.empty()) pieces.push_back(std::move(piece));
        }
      }
      const double link = std::pow(r, static_cast<double>(i + 1));
      UnionFind uf(pieces.size());
      for (std::size_t a = 0; a < pieces.size(); ++a)
        for (std::size_t b = a + 1; b < pieces.size(); ++b)
          if (set_distance(space, pieces[a], pieces[b]) <= link) uf.unite(a, b);
      std::map<std::size_t, Subset> classes;
      for (std::size_t a = 0; a < pieces.size(); ++a) {
        Subset& cls = classes[uf.find(a)];
        cls.insert(cls.end(), pieces[a].begin(), pieces[a].end());
      }
      std::vector<std::size_t> first;
      for (auto& [root, cls] : classes) {
        std::sort(cls.begin(), cls.end());
        cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
        first.push_back(out.base.blocks.size());
        out.base.blocks.push_back(cls);
        out.base.block_dist_to_A.push_back(set_distance(space, cls, A));
        out.level.push_back(i);
        out.sublevel.push_back(k);
      }
      for (std::size_t a = 0; a < first.size(); ++a)
        for (std::size_t b = a + 1; b < first.size(); ++b)
          if (!(set_distance(space, out.base.blocks[first[a]], out.base.blocks[first[b]]) > link))
            fail(ErrorCode::InternalError, "merged classes are not r^(i+1)-separated");
    }
  }
  out.params.n = n;
  out.params.alpha = 40 * r * r * r * (c + 1) * (nd + 1);
  out.params.delta = 1 / (8 * r * r);
  out.params.gamma = r * r;

  if (out.base.covered_set() != ext) fail(ErrorCode::InternalError, "refined blocks do not cover X \\ A");
  for (std::size_t b = 0; b < out.base.blocks.size(); ++b)
    for (std::size_t x : out.base.blocks[b])
      if (level_of(dA[x], r, static_cast<double>(out.sublevel[b]) / nd) + 1 != out.level[b])
        fail(ErrorCode::InternalError, "refined block " + std::to_string(b) + " leaves its sub-annulus");
  out.report = verify_whitney(space, out.base.blocks, A, out.params);
  if (!out.report.ok())
    fail(ErrorCode::PropertyViolation, "Whitney axioms fail: " + out.report.violations.front());
  const double theta = std::pow(r, 1.0 / (2 * nd));
  out.subset_multiplicity = refined_subset_multiplicity(space, out.base.blocks, A, theta, budget);
  if (out.subset_multiplicity->multiplicity > n + 1)
    fail(ErrorCode::PropertyViolation, "a set E with diam E <= r^(1/2n) d(E,A) meets " +
                                           std::to_string(out.subset_multiplicity->multiplicity) + " blocks");
  out.verified = true;
  return out;
}

}  // namespace lipext
