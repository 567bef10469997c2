#include "lipext/coverings.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "lipext/errors.hpp"
#include "lipext/random.hpp"

namespace lipext {

Subset Covering::covered_set() const {
  Subset out;
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

class BlockSearch {
 public:
  BlockSearch(const std::vector<Subset>& blocks, const Admissible& ok) : blocks_(blocks), ok_(ok) {
    std::size_t maxp = 0;
    for (const auto& b : blocks)
      for (std::size_t p : b) maxp = std::max(maxp, p + 1);
    member_.resize(maxp);
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (std::size_t p : blocks[i]) member_[p].push_back(i);
    hits_.assign(blocks.size(), 0);
  }

  MultiplicityReport run() {
    greedy();
    dfs(0);
    MultiplicityReport r;
    r.multiplicity = best_;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      for (std::size_t p : best_set_)
        if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), p)) {
          r.witness.emplace_back(i, p);
          break;
        }
    }
    return r;
  }

 private:
  void add(std::size_t p) {
    E_.push_back(p);
    for (std::size_t b : member_[p])
      if (hits_[b]++ == 0) ++met_;
  }
  void remove() {
    std::size_t p = E_.back();
    E_.pop_back();
    for (std::size_t b : member_[p])
      if (--hits_[b] == 0) --met_;
  }
  void record() {
    if (met_ > best_) {
      best_ = met_;
      best_set_ = E_;
      std::sort(best_set_.begin(), best_set_.end());
    }
  }

  void greedy() {
    std::vector<std::size_t> pts;
    for (std::size_t p = 0; p < member_.size(); ++p)
      if (!member_[p].empty()) pts.push_back(p);
    for (std::size_t start : pts) {
      add(start);
      for (std::size_t p : pts) {
        if (p == start) continue;
        bool gains = false;
        for (std::size_t b : member_[p])
          if (hits_[b] == 0) gains = true;
        if (gains && ok_(E_, p)) add(p);
      }
      record();
      while (!E_.empty()) remove();
    }
  }

  void dfs(std::size_t i) {
    if (i == blocks_.size()) {
      record();
      return;
    }
    std::size_t reachable = 0;
    for (std::size_t j = i; j < blocks_.size(); ++j) {
      if (hits_[j] > 0) continue;
      for (std::size_t p : blocks_[j])
        if (ok_(E_, p)) {
          ++reachable;
          break;
        }
    }
    std::size_t met_after = 0;
    for (std::size_t j = 0; j < blocks_.size(); ++j)
      if (hits_[j] > 0) ++met_after;
    if (met_after + reachable <= best_) return;
    if (hits_[i] > 0) {
      dfs(i + 1);
      return;
    }
    for (std::size_t p : blocks_[i]) {
      if (!ok_(E_, p)) continue;
      add(p);
      dfs(i + 1);
      remove();
    }
    dfs(i + 1);
  }

  const std::vector<Subset>& blocks_;
  const Admissible& ok_;
  std::vector<std::vector<std::size_t>> member_;
  std::vector<std::size_t> hits_;
  std::vector<std::size_t> E_;
  std::size_t met_ = 0;
  std::size_t best_ = 0;
  std::vector<std::size_t> best_set_;
};

}  // namespace

MultiplicityReport max_blocks_met(const std::vector<Subset>& blocks, const Admissible& admissible,
                                  std::size_t budget) {
  if (blocks.size() > budget)
    fail(ErrorCode::SearchBudgetExceeded,
         std::to_string(blocks.size()) + " blocks exceed the search budget of " + std::to_string(budget));
  BlockSearch search(blocks, admissible);
  return search.run();
}

MultiplicityReport s_multiplicity(const FiniteMetricSpace& space, const Covering& cover, double s,
                                  std::size_t budget) {
  if (!(s > 0)) fail(ErrorCode::InvalidArgument, "scale s must be positive");
  Admissible ok = [&](const std::vector<std::size_t>& E, std::size_t p) {
    for (std::size_t q : E)
      if (space.d(p, q) >= s) return false;
    return true;
  };
  MultiplicityReport r = max_blocks_met(cover.blocks, ok, budget);
  r.s = s;
  return r;
}

NagataReport verify_nagata(const FiniteMetricSpace& space, const Covering& cover, double s, std::size_t n,
                           double c, std::size_t budget) {
  NagataReport r;
  r.multiplicity = s_multiplicity(space, cover, s, budget);
  for (std::size_t i = 0; i < cover.blocks.size(); ++i) {
    double d = space.diameter(cover.blocks[i]);
    r.max_diameter = std::max(r.max_diameter, d);
    if (d > c * s) r.oversized_blocks.push_back(i);
  }
  r.ok = r.multiplicity.multiplicity <= n + 1 && r.oversized_blocks.empty();
  return r;
}

NagataConstants grid_constants(std::size_t d) {
  return {(std::size_t{1} << d) - 1, std::sqrt(static_cast<double>(d)) * static_cast<double>(d)};
}

Covering grid_cover(const PointCloud& cloud, double s, const Subset& subset) {
  if (cloud.norm != Norm::L2) fail(ErrorCode::InvalidArgument, "grid_cover requires an L2 point cloud");
  if (!(s > 0)) fail(ErrorCode::InvalidArgument, "scale s must be positive");
  const std::size_t d = cloud.dimension();
  const double side = s * static_cast<double>(d);
  Subset pts = subset;
  if (pts.empty()) {
    pts.resize(cloud.coords.size());
    std::iota(pts.begin(), pts.end(), 0);
  }
  std::map<std::vector<long long>, std::size_t> cell_of;
  Covering cov;
  for (std::size_t i : pts) {
    if (i >= cloud.coords.size()) fail(ErrorCode::IndexOutOfRange, "grid_cover subset index " + std::to_string(i));
    std::vector<long long> key(d);
    for (std::size_t c = 0; c < d; ++c) key[c] = static_cast<long long>(std::floor(cloud.coords[i][c] / side));
    auto [it, fresh] = cell_of.emplace(key, cov.blocks.size());
    if (fresh) cov.blocks.emplace_back();
    cov.blocks[it->second].push_back(i);
  }
  cov.scale = s;
  return cov;
}

double colored_base_scale(double s, std::size_t n) { return 2.0 * static_cast<double>(n + 2) * s; }

Covering colored_cover(const FiniteMetricSpace& space, const Subset& subset, double s, const Covering& base,
                       std::size_t n, double c, std::size_t budget) {
  if (!(s > 0)) fail(ErrorCode::InvalidArgument, "scale s must be positive");
  const double base_s = colored_base_scale(s, n);
  NagataReport nr = verify_nagata(space, base, base_s, n, c, budget);
  if (!nr.ok)
    fail(ErrorCode::BaseNotNagata, "base cover has " + std::to_string(nr.multiplicity.multiplicity) +
                                       " blocks met at scale " + std::to_string(base_s) + " or oversized blocks");
  const double sp = static_cast<double>(n + 2) * s;  // internal scale
  const double n2 = static_cast<double>(n + 2);
  auto threshold = [&](std::size_t k) { return (1.0 - static_cast<double>(k) / n2) * sp; };

  Covering out;
  out.scale = s;
  std::map<std::vector<std::size_t>, std::size_t> block_of;
  for (std::size_t x : subset) {
    std::vector<std::pair<double, std::size_t>> phi;
    for (std::size_t i = 0; i < base.blocks.size(); ++i) {
      double v = sp - dist_to_set(space, x, base.blocks[i]);
      if (v > 0) phi.emplace_back(v, i);
    }
    std::sort(phi.begin(), phi.end(), [](auto& a, auto& b) { return a.first > b.first || (a.first == b.first && a.second < b.second); });
    std::size_t k = 0;
    for (std::size_t cand = 1; cand <= std::min(phi.size(), n + 1); ++cand)
      if (phi[cand - 1].first > threshold(cand)) k = cand;
    if (k == 0) fail(ErrorCode::InternalCoverGap, "point " + std::to_string(x) + " has no active cube vertex");
    std::vector<std::size_t> J;
    for (auto& [v, i] : phi)
      if (v > threshold(k)) J.push_back(i);
    std::sort(J.begin(), J.end());
    if (J.size() != k) fail(ErrorCode::InternalCoverGap, "active set size differs from its level at point " + std::to_string(x));
    auto [it, fresh] = block_of.emplace(J, out.blocks.size());
    if (fresh) {
      out.blocks.emplace_back();
      out.colors.push_back(k);
    }
    out.blocks[it->second].push_back(x);
  }

  const double diam_bound = 2.0 * (c + 1.0) * n2 * s;
  for (std::size_t a = 0; a < out.blocks.size(); ++a) {
    if (space.diameter(out.blocks[a]) > diam_bound)
      fail(ErrorCode::PropertyViolation, "colored block " + std::to_string(a) + " exceeds diameter 2(c+1)(n+2)s");
    for (std::size_t b = a + 1; b < out.blocks.size(); ++b)
      if (out.colors[a] == out.colors[b] && !(set_distance(space, out.blocks[a], out.blocks[b]) > s))
        fail(ErrorCode::PropertyViolation,
             "colored blocks " + std::to_string(a) + " and " + std::to_string(b) + " are not s-separated");
  }
  if (out.covered_set() != subset) fail(ErrorCode::InternalCoverGap, "colored cover misses points");
  return out;
}

Covering iterative_ball_partition(const FiniteMetricSpace& space, double D, PartitionMode mode) {
  if (!(D > 0)) fail(ErrorCode::InvalidArgument, "ball radius D must be positive");
  const std::size_t n = space.size();
  if (mode.kind == PartitionMode::Kind::Enumerate && n > 8)
    fail(ErrorCode::EnumerationTooLarge, "full enumeration needs |X| <= 8, got " + std::to_string(n));
  if (mode.kind == PartitionMode::Kind::Sample && mode.count == 0)
    fail(ErrorCode::InvalidArgument, "sample mode needs a positive permutation count");

  std::vector<Subset> balls(n);
  for (std::size_t i = 0; i < n; ++i) balls[i] = ball(space, i, D);

  Covering out;
  out.ball_radius = D;
  out.enumerated = mode.kind == PartitionMode::Kind::Enumerate;
  std::map<Subset, std::size_t> index_of;
  std::vector<char> taken(n);
  auto process = [&](const std::vector<std::size_t>& perm) {
    std::fill(taken.begin(), taken.end(), 0);
    for (std::size_t center : perm) {
      Subset blk;
      for (std::size_t y : balls[center])
        if (!taken[y]) {
          taken[y] = 1;
          blk.push_back(y);
        }
      if (blk.empty()) continue;
      auto [it, fresh] = index_of.emplace(blk, out.blocks.size());
      if (fresh) {
        out.blocks.push_back(std::move(blk));
        out.multiplicity.push_back(0);
      }
      ++out.multiplicity[it->second];
    }
    ++out.permutations;
  };

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (out.enumerated) {
    do {
      process(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    Rng rng(mode.seed);
    for (std::size_t t = 0; t < mode.count; ++t) {
      std::iota(perm.begin(), perm.end(), 0);
      rng.shuffle(perm);
      process(perm);
    }
  }
  return out;
}

std::vector<PaddedPoint> padded_ratio_check(const FiniteMetricSpace& space, const Covering& cover,
                                            bool allow_sampled) {
  if (!cover.enumerated && !allow_sampled)
    fail(ErrorCode::NotEnumerated, "padded ratio check needs a fully enumerated partition cover");
  if (cover.multiplicity.size() != cover.blocks.size())
    fail(ErrorCode::NotEnumerated, "cover carries no permutation counts");
  const double D = cover.ball_radius;
  std::vector<PaddedPoint> out;
  for (std::size_t x = 0; x < space.size(); ++x) {
    PaddedPoint p;
    p.x = x;
    Subset inner = ball(space, x, D / 2);
    p.inner = inner.size();
    p.outer = ball(space, x, 2 * D).size();
    for (std::size_t i = 0; i < cover.blocks.size(); ++i) {
      const Subset& b = cover.blocks[i];
      if (!contains(b, x)) continue;
      p.containing += cover.multiplicity[i];
      if (std::includes(b.begin(), b.end(), inner.begin(), inner.end())) p.deep += cover.multiplicity[i];
    }
    p.pass = p.deep * p.outer >= p.inner * p.containing;
    out.push_back(p);
  }
  return out;
}

}  // namespace lipext
