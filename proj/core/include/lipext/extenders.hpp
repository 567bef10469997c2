#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lipext/metric.hpp"
#include "lipext/partition.hpp"
#include "lipext/target.hpp"
#include "lipext/whitney.hpp"

namespace lipext {

enum class Method { McShane, Whitney, LeeNaor, Nerve };
std::string to_string(Method m);

using NamedValues = std::vector<std::pair<std::string, double>>;

struct ExtensionResult {
  Method method = Method::McShane;
  std::vector<Point> values;  // F at every point of X
  LipschitzCertificate certificate;
  double lip_f = 0.0;
  double normalized_constant = 0.0;  // certificate / Lip f (0 when Lip f = 0)
  double bound_constant = 0.0;       // theorem constant for 1-Lipschitz f
  double paper_bound = 0.0;          // bound_constant * Lip f
  std::string bound_label;
  NamedValues inputs;
  NamedValues diagnostics;
  bool within_bound = false;

  double margin() const { return paper_bound - certificate.constant; }
};

inline constexpr double kCertificateSlack = 1e-9;

// inf_a [f(a) + L d(a, x)] with L = slope (default Lip f); slope must be at
// least Lip f.
ExtensionResult mcshane_extend(const FiniteMetricSpace& space, const PartialMap& f,
                               std::optional<double> slope = std::nullopt);

// sum_i phi_i(x) f(a_i) over the basic Whitney cover and its partition.
ExtensionResult whitney_extend(const FiniteMetricSpace& space, const PartialMap& f, const NagataOracle& oracle,
                               double r = kDefaultWhitneyR);

struct LeeNaorOptions {
  std::uint64_t seed = 0;
  std::size_t permutations = 2000;
};

inline constexpr std::size_t kLeeNaorMinDomain = 16;

ExtensionResult lee_naor_extend(const FiniteMetricSpace& space, const PartialMap& f, const LeeNaorOptions& options);

// 2t-1 on (1/2,1], 1 on [1,2^N], 2-t/2^N on (2^N,2^(N+1)], 0 elsewhere.
double lee_naor_omega(double t, std::size_t N);
std::size_t lee_naor_levels(std::size_t n);  // N + 1

enum class ExtensorKind { Barycentric, Skeletal };

ExtensionResult nerve_extend(const FiniteMetricSpace& space, const PartialMap& f, const WhitneyCovering& cover,
                             ExtensorKind kind = ExtensorKind::Barycentric, std::size_t skeletal_mesh = 8);

// log10 of 3e10 (c+1)^10 (1e5 lambda)^(n+1) (n+1)^(6n).
double log10_detailed_constant(std::size_t n, double c, double lambda);
// log10 of 10^(10^10) lambda^(n+1) (c+1)^10.
double log10_headline_constant(std::size_t n, double c, double lambda);

}  // namespace lipext
