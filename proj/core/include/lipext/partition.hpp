#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lipext/metric.hpp"
#include "lipext/simplicial.hpp"
#include "lipext/whitney.hpp"

namespace lipext {

using SparseWeights = std::vector<std::pair<std::size_t, double>>;  // (block, weight), by block

enum class ExponentRule {
  Basic,    // m = ln(n+1) for a cover of multiplicity n+1 = 3(n'+1)
  General,  // m = log2(n+2)
};

double partition_exponent(const WhitneyParams& params, ExponentRule rule);

// Partition of unity psi_i(x) = d(x, X \ U_i)^m normalized, with
// U_i = {y : d(y, B_i) < delta r_i}.
struct PartitionOfUnity {
  const FiniteMetricSpace* space = nullptr;
  std::vector<Subset> blocks;
  std::vector<double> r;  // d(B_i, A)
  Subset A;
  Subset exterior;
  WhitneyParams params;
  double exponent = 1.0;
  std::vector<std::size_t> anchors;         // nearest point of A to B_i
  std::vector<SparseWeights> weights;       // indexed by point; empty on A
  std::vector<double> psi_total;            // indexed by point
  std::vector<std::size_t> home;            // block containing x with the largest r
  double min_psi_margin = 0.0;              // min over x of psi(x) / (delta r_home)^m
};

PartitionOfUnity build_partition(const FiniteMetricSpace& space, const WhitneyCovering& cover, ExponentRule rule);
PartitionOfUnity build_partition(const FiniteMetricSpace& space, const WhitneyCovering& cover);

const SparseWeights& evaluate_weights(const PartitionOfUnity& pou, std::size_t x);

struct LipschitzSumPoint {
  std::size_t x = 0;
  double sum = 0.0;    // S(x)
  double bound = 0.0;  // 6 m / (delta r_j)
  std::size_t j = 0;
  double r_j = 0.0;
  double margin = 0.0;
};

struct LipschitzSumReport {
  std::vector<LipschitzSumPoint> points;
  double mesh = 0.0;  // max nearest-neighbour distance among exterior points
  double min_r = 0.0;
  bool dense = false;  // mesh <= 0.01 * min r_i
  double min_margin = 0.0;
};

LipschitzSumReport lipschitz_sum_report(const PartitionOfUnity& pou);

SimplexPoint nerve_map(const PartitionOfUnity& pou, std::size_t x);

// Vertices are blocks; simplices are the supports of the weights at
// exterior points.
SimplicialComplex nerve_of_cover(const PartitionOfUnity& pou);

}  // namespace lipext
