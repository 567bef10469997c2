#pragma once

// Brute-force reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "lipext/metric.hpp"
#include "lipext/target.hpp"
#include "lipext/transport.hpp"

namespace oracle {

using lipext::FiniteMetricSpace;
using lipext::Point;
using lipext::Subset;

inline double lipschitz(const FiniteMetricSpace& X, const std::vector<Point>& v, const lipext::TargetSpace& T) {
  double best = 0.0;
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j = i + 1; j < X.size(); ++j) best = std::max(best, T.distance(v[i], v[j]) / X.d(i, j));
  return best;
}

inline std::vector<std::size_t> members(std::uint64_t mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1U) out.push_back(i);
  return out;
}

inline double diameter(const FiniteMetricSpace& X, const std::vector<std::size_t>& e) {
  double d = 0.0;
  for (std::size_t a : e)
    for (std::size_t b : e) d = std::max(d, X.d(a, b));
  return d;
}

inline std::size_t blocks_met(const std::vector<Subset>& blocks, const std::vector<std::size_t>& e) {
  std::size_t met = 0;
  for (const auto& b : blocks) {
    bool hit = false;
    for (std::size_t x : e) hit = hit || std::binary_search(b.begin(), b.end(), x);
    met += hit;
  }
  return met;
}

// max over all E with diam E < s of the number of blocks met; |X| <= 16.
inline std::size_t s_multiplicity(const FiniteMetricSpace& X, const std::vector<Subset>& blocks, double s) {
  const std::size_t n = X.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    auto e = members(mask, n);
    if (diameter(X, e) < s) best = std::max(best, blocks_met(blocks, e));
  }
  return best;
}

// max over E in X \ A with diam E <= theta d(E, A) of the number of blocks met.
inline std::size_t whitney_subset_multiplicity(const FiniteMetricSpace& X, const std::vector<Subset>& blocks,
                                               const Subset& A, double theta) {
  Subset ext = lipext::complement(X, A);
  const std::size_t n = ext.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> e;
    for (std::size_t k : members(mask, n)) e.push_back(ext[k]);
    double dEA = lipext::set_distance(X, e, A);
    if (diameter(X, e) <= theta * dEA) best = std::max(best, blocks_met(blocks, e));
  }
  return best;
}

// W1 of measures with weights k_i / N, expanded to N equal atoms.
inline double rational_w1(const lipext::TargetSpace& T, const std::vector<Point>& ys, const std::vector<int>& ky,
                          const std::vector<Point>& zs, const std::vector<int>& kz) {
  std::vector<Point> a, b;
  for (std::size_t i = 0; i < ys.size(); ++i) a.insert(a.end(), static_cast<std::size_t>(ky[i]), ys[i]);
  for (std::size_t i = 0; i < zs.size(); ++i) b.insert(b.end(), static_cast<std::size_t>(kz[i]), zs[i]);
  return lipext::w1_permutation(T, a, b);
}

struct PaddedCounts {
  std::uint64_t deep = 0, total = 0;
};

// Per point: number of orders whose block of x contains B(x, D/2), and n!.
inline std::vector<PaddedCounts> padded_counts(const FiniteMetricSpace& X, double D) {
  const std::size_t n = X.size();
  std::vector<PaddedCounts> out(n);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    std::vector<long> block(n, -1);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t y = 0; y < n; ++y)
        if (block[y] < 0 && X.d(perm[k], y) <= D) block[y] = static_cast<long>(k);
    for (std::size_t x = 0; x < n; ++x) {
      bool inside = true;
      for (std::size_t y = 0; y < n; ++y)
        if (X.d(x, y) <= D / 2 && block[y] != block[x]) inside = false;
      out[x].deep += inside;
      ++out[x].total;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace oracle
