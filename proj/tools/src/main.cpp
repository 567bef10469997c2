#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lipext/conical.hpp"
#include "lipext/coverings.hpp"
#include "lipext/errors.hpp"
#include "lipext/extenders.hpp"
#include "lipext/partition.hpp"
#include "lipext/whitney.hpp"
#include "lipext_tools/acceptance.hpp"
#include "lipext_tools/io.hpp"

using namespace lipext;
using namespace lipext::tools;

namespace {

struct Options {
  std::string space_file, method, mode = "enumerate", domain_file, map_file, out, weights_file, extensor = "barycentric";
  std::string result_file;
  std::optional<double> r, scale, slope, nagata_c;
  std::optional<std::uint64_t> seed;
  std::size_t budget = kDefaultSearchBudget;
  std::size_t permutations = 2000;
  bool timing = false, refined = false;
  std::optional<int> cn;
  std::optional<std::size_t> n, leenaor_n;
  double c = 1.0, lambda = 1.0;
  std::vector<int> only;
};

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare:
    case ErrorCode::NonZeroDiagonal:
    case ErrorCode::AsymmetricMatrix:
    case ErrorCode::NegativeDistance:
    case ErrorCode::TriangleViolation:
    case ErrorCode::DuplicatePoints:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::EmptySubset:
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidMidpointTable:
    case ErrorCode::EnumerationTooLarge:
    case ErrorCode::RTooSmall:
    case ErrorCode::MixedTargetSpaces:
    case ErrorCode::NotUniform:
    case ErrorCode::TooLarge:
    case ErrorCode::UnsupportedTarget:
    case ErrorCode::InvalidWeights:
    case ErrorCode::ZeroSamples:
    case ErrorCode::UnsupportedDimension:
    case ErrorCode::NonScalarTarget:
    case ErrorCode::DomainTooSmall:
      return true;
    default:
      return false;
  }
}

PartitionMode parse_mode(const std::string& s) {
  if (s == "enumerate") return PartitionMode::enumerate();
  // sample:COUNT:SEED
  std::size_t a = s.find(':'), b = s.rfind(':');
  if (s.rfind("sample:", 0) == 0 && a != b) {
    try {
      return PartitionMode::sample(std::stoull(s.substr(a + 1, b - a - 1)), std::stoull(s.substr(b + 1)));
    } catch (const std::exception&) {
    }
  }
  throw InputError("<command line>", "--mode", "expected enumerate or sample:COUNT:SEED");
}

NagataOracle pick_oracle(const SpaceInput& in, const Subset& A, const Options& o) {
  if (o.nagata_c) return component_oracle(in.space, A, *o.nagata_c);
  if (in.cloud && in.cloud->norm == Norm::L2) return grid_oracle(*in.cloud, A);
  throw InputError(o.space_file, "coords",
                   "a Euclidean point cloud is needed for the grid oracle; pass --nagata-c for a distance matrix");
}

void emit(const json& j, const std::string& out) {
  if (out.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_text(out, j.dump(2) + "\n");
}

int cmd_validate(const Options& o) {
  SpaceInput in = parse_space(read_json(o.space_file), o.space_file);
  std::cout << "valid metric space: " << in.space.size() << " points, diameter " << format_number(in.space.diameter())
            << "\n";
  return 0;
}

int cmd_cover(const Options& o) {
  SpaceInput in = parse_space(read_json(o.space_file), o.space_file);
  const FiniteMetricSpace& X = in.space;
  std::optional<Subset> A;
  if (!o.domain_file.empty()) A = parse_subset(read_json(o.domain_file), X, o.domain_file);
  auto need_scale = [&] {
    if (!o.scale || !(*o.scale > 0)) throw InputError("<command line>", "--scale", "a positive scale is required");
    return *o.scale;
  };
  auto need_cloud = [&]() -> const PointCloud& {
    if (!in.cloud || in.cloud->norm != Norm::L2)
      throw InputError(o.space_file, "coords", "this cover needs a Euclidean point cloud");
    return *in.cloud;
  };
  int status = 0;
  json j;
  if (o.method == "grid") {
    double s = need_scale();
    const PointCloud& pc = need_cloud();
    Covering cov = grid_cover(pc, s, A.value_or(Subset{}));
    NagataConstants nc = grid_constants(pc.dimension());
    NagataReport rep = verify_nagata(X, cov, s, nc.n, nc.c, o.budget);
    j = to_json(cov);
    j["nagata"] = {{"n", nc.n}, {"c", nc.c}, {"ok", rep.ok}, {"multiplicity", rep.multiplicity.multiplicity},
                   {"max_diameter", rep.max_diameter}};
    std::cerr << "grid cover: " << cov.size() << " blocks, s-multiplicity " << rep.multiplicity.multiplicity
              << " (bound " << nc.n + 1 << "), " << (rep.ok ? "Nagata verified" : "Nagata check FAILED") << "\n";
    if (!rep.ok) status = 1;
  } else if (o.method == "colored") {
    double s = need_scale();
    const PointCloud& pc = need_cloud();
    NagataConstants nc = grid_constants(pc.dimension());
    Subset sub = A.value_or(all_points(X));
    Covering base = grid_cover(pc, colored_base_scale(s, nc.n), sub);
    Covering cov = colored_cover(X, sub, s, base, nc.n, nc.c, o.budget);
    j = to_json(cov);
    std::cerr << "colored cover: " << cov.size() << " blocks in " << nc.n + 1 << " colors\n";
  } else if (o.method == "padded") {
    double D = need_scale();
    PartitionMode mode = parse_mode(o.mode);
    Covering cov = iterative_ball_partition(X, D, mode);
    j = to_json(cov);
    if (cov.enumerated) {
      auto pts = padded_ratio_check(X, cov);
      std::size_t pass = 0;
      json arr = json::array();
      for (auto& p : pts) {
        pass += p.pass;
        arr.push_back({{"x", p.x}, {"deep", p.deep}, {"containing", p.containing}, {"inner", p.inner},
                       {"outer", p.outer}, {"pass", p.pass}});
      }
      j["padded"] = arr;
      std::cerr << "padded cover: " << cov.size() << " blocks, padding holds at " << pass << "/" << pts.size()
                << " points\n";
      if (pass != pts.size()) status = 1;
    } else {
      std::cerr << "padded cover: " << cov.size() << " blocks from " << cov.permutations
                << " sampled orders (padding is checked only when enumerated)\n";
    }
  } else if (o.method == "whitney" || o.method == "whitney-refined") {
    if (!A) throw InputError("<command line>", "--domain", "a domain file is required");
    NagataOracle oracle = pick_oracle(in, *A, o);
    WhitneyCovering cov = o.method == "whitney"
                              ? build_whitney_cover(X, *A, o.r.value_or(kDefaultWhitneyR), oracle, o.budget)
                              : build_refined_whitney_cover(X, *A, o.r, oracle, std::max<std::size_t>(o.budget, 256));
    j = to_json(cov);
    std::cerr << o.method << " cover: " << cov.base.size() << " blocks, n = " << cov.params.n << ", alpha = "
              << format_number(cov.params.alpha) << ", delta = " << format_number(cov.params.delta)
              << ", gamma = " << format_number(cov.params.gamma) << "\n";
    if (!o.weights_file.empty()) {
      PartitionOfUnity pou = build_partition(X, cov);
      std::ostringstream csv;
      write_weights_csv(csv, pou);
      write_text(o.weights_file, csv.str());
    }
  } else {
    throw InputError("<command line>", "--method", "expected grid, colored, padded, whitney or whitney-refined");
  }
  emit(j, o.out);
  return status;
}

int cmd_extend(const Options& o) {
  SpaceInput in = parse_space(read_json(o.space_file), o.space_file);
  const FiniteMetricSpace& X = in.space;
  PartialMap f = parse_map(read_json(o.map_file), X, o.map_file);
  if (!o.domain_file.empty()) {
    Subset A = parse_subset(read_json(o.domain_file), X, o.domain_file);
    if (A != f.domain) throw InputError(o.domain_file, "domain", "differs from the domain of " + o.map_file);
  }
  auto t0 = std::chrono::steady_clock::now();
  ExtensionResult res;
  if (o.method == "mcshane") {
    res = mcshane_extend(X, f, o.slope);
  } else if (o.method == "whitney") {
    res = whitney_extend(X, f, pick_oracle(in, f.domain, o), o.r.value_or(kDefaultWhitneyR));
  } else if (o.method == "leenaor") {
    if (!o.seed && f.domain.size() > 8)
      throw InputError("<command line>", "--seed", "required: the padded covers are sampled");
    res = lee_naor_extend(X, f, {o.seed.value_or(0), o.permutations});
  } else if (o.method == "nerve") {
    NagataOracle oracle = pick_oracle(in, f.domain, o);
    WhitneyCovering cov = o.refined ? build_refined_whitney_cover(X, f.domain, o.r, oracle)
                                    : build_whitney_cover(X, f.domain, o.r.value_or(kDefaultWhitneyR), oracle);
    ExtensorKind kind;
    if (o.extensor == "barycentric")
      kind = ExtensorKind::Barycentric;
    else if (o.extensor == "skeletal")
      kind = ExtensorKind::Skeletal;
    else
      throw InputError("<command line>", "--extensor", "expected barycentric or skeletal");
    res = nerve_extend(X, f, cov, kind);
  } else {
    throw InputError("<command line>", "--method", "expected mcshane, whitney, leenaor or nerve");
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  json j = to_json(res);
  j["space"] = in.source;
  j["map"] = map_json(f);
  std::string prefix = o.out.empty() ? "extension" : o.out;
  write_text(prefix + ".json", j.dump(2) + "\n");
  std::ostringstream values, report;
  write_values_csv(values, X, res.values);
  write_text(prefix + ".csv", values.str());
  write_report_csv(report, {report_row(o.space_file, res, ms)}, o.timing);
  write_text(prefix + ".report.csv", report.str());
  std::cout << to_string(res.method) << ": Lip f = " << format_number(res.lip_f)
            << ", Lip F = " << format_number(res.certificate.constant) << ", bound = " << format_number(res.paper_bound)
            << " (" << res.bound_label << ")\n";
  if (!res.within_bound) {
    std::cerr << "property violation: Lip F exceeds " << res.bound_label << " at pair (" << res.certificate.i << ", "
              << res.certificate.j << ")\n";
    return 1;
  }
  return 0;
}

int cmd_certify(const Options& o) {
  const std::string& file = o.result_file;
  json j = read_json(file);
  if (!j.contains("space") || !j.contains("map") || !j.contains("values") || !j.contains("certificate"))
    throw InputError(file, "space", "not an extension result");
  SpaceInput in = parse_space(j["space"], file);
  PartialMap f = parse_map(j["map"], in.space, file);
  std::vector<Point> values;
  try {
    values = j["values"].get<std::vector<Point>>();
  } catch (const json::exception& e) {
    throw InputError(file, "values", e.what());
  }
  if (values.size() != in.space.size()) throw InputError(file, "values", "one value per point is required");
  for (std::size_t k = 0; k < values.size(); ++k)
    if (values[k].size() != f.target.dim()) throw InputError(file, "values[" + std::to_string(k) + "]", "wrong dimension");
  LipschitzCertificate cert = certify_lipschitz(in.space, values, f.target);
  double recorded = j["certificate"].value("constant", -1.0);
  double bound = j.value("paper_bound", 0.0);
  std::cout << "Lip F = " << format_number(cert.constant) << " at pair (" << cert.i << ", " << cert.j << "), recorded "
            << format_number(recorded) << ", bound " << format_number(bound) << "\n";
  int status = 0;
  for (std::size_t a = 0; a < f.domain.size(); ++a)
    if (values[f.domain[a]] != f.values[a]) {
      std::cerr << "property violation: F differs from f at domain point " << f.domain[a] << "\n";
      status = 1;
    }
  if (std::abs(cert.constant - recorded) > 1e-12 * std::max(1.0, std::abs(recorded))) {
    std::cerr << "property violation: recomputed certificate differs from the recorded one\n";
    status = 1;
  }
  if (cert.constant > bound + kCertificateSlack) {
    std::cerr << "property violation: Lip F exceeds the bound\n";
    status = 1;
  }
  return status;
}

int cmd_constants(const Options& o) {
  bool any = false;
  if (o.cn) {
    std::printf("%.6f\n", sphere_constant(*o.cn));
    any = true;
  }
  if (o.n) {
    double n = static_cast<double>(*o.n);
    std::printf("whitney bound 1000(c+1)log2(n+2) = %s\n", format_number(1000 * (o.c + 1) * std::log2(n + 2)).c_str());
    std::printf("log10 3e10 (c+1)^10 (1e5 lambda)^(n+1) (n+1)^(6n) = %s\n",
                format_number(log10_detailed_constant(*o.n, o.c, o.lambda)).c_str());
    std::printf("log10 10^(10^10) lambda^(n+1) (c+1)^10 = %s\n",
                format_number(log10_headline_constant(*o.n, o.c, o.lambda)).c_str());
    any = true;
  }
  if (o.leenaor_n) {
    double n = static_cast<double>(*o.leenaor_n);
    if (*o.leenaor_n < kLeeNaorMinDomain) throw InputError("<command line>", "--leenaor-n", "must be at least 16");
    std::printf("lee-naor bound 600 log n / log log n = %s, N + 1 = %zu\n",
                format_number(600 * std::log(n) / std::log(std::log(n))).c_str(), lee_naor_levels(*o.leenaor_n));
    any = true;
  }
  if (!any) throw InputError("<command line>", "--cn", "nothing requested; pass --cn, --n or --leenaor-n");
  return 0;
}

int cmd_selftest(const Options& o) {
  std::uint64_t seed = o.seed.value_or(7);
  std::size_t failed = 0;
  for (const auto& c : acceptance_criteria()) {
    if (!o.only.empty() && std::find(o.only.begin(), o.only.end(), c.id) == o.only.end()) continue;
    CriterionResult r = run_criterion(c, seed);
    std::cout << format_result(r) << std::endl;
    failed += !r.passed;
  }
  std::cout << (failed ? "selftest FAILED: " + std::to_string(failed) + " criteria" : std::string("selftest passed"))
            << "\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lipschitz extension toolkit for finite metric spaces"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "check a metric space file");
  validate->add_option("space", o.space_file, "space JSON")->required();

  auto* cover = app.add_subcommand("cover", "build and verify a covering");
  cover->add_option("space", o.space_file, "space JSON")->required();
  cover->add_option("--method", o.method, "grid|colored|padded|whitney|whitney-refined")->required();
  cover->add_option("--scale", o.scale, "scale s (grid, colored) or ball radius D (padded)");
  cover->add_option("--mode", o.mode, "enumerate or sample:COUNT:SEED (padded)");
  cover->add_option("--domain", o.domain_file, "domain JSON");
  cover->add_option("--r", o.r, "Whitney ratio r");
  cover->add_option("--budget", o.budget, "branch-and-bound budget");
  cover->add_option("--nagata-c", o.nagata_c, "use the component oracle with this c");
  cover->add_option("--weights", o.weights_file, "write the partition of unity as CSV (whitney)");
  cover->add_option("--out", o.out, "output JSON (default: stdout)");

  auto* extend = app.add_subcommand("extend", "extend a partial map");
  extend->add_option("space", o.space_file, "space JSON")->required();
  extend->add_option("--method", o.method, "mcshane|whitney|leenaor|nerve")->required();
  extend->add_option("--map", o.map_file, "partial map JSON")->required();
  extend->add_option("--domain", o.domain_file, "domain JSON (must match the map)");
  extend->add_option("--r", o.r, "Whitney ratio r");
  extend->add_option("--seed", o.seed, "seed for sampled covers");
  extend->add_option("--slope", o.slope, "McShane slope (default Lip f)");
  extend->add_option("--permutations", o.permutations, "sampled orders per scale (leenaor)");
  extend->add_option("--extensor", o.extensor, "barycentric|skeletal (nerve)");
  extend->add_flag("--refined", o.refined, "use the refined Whitney cover (nerve)");
  extend->add_option("--nagata-c", o.nagata_c, "use the component oracle with this c");
  extend->add_option("--out", o.out, "output prefix (default: extension)");
  extend->add_flag("--timing", o.timing, "add runtime to the report CSV");

  auto* certify = app.add_subcommand("certify", "recompute the certificate of an extension result");
  certify->add_option("result", o.result_file, "result JSON")->required();

  auto* constants = app.add_subcommand("constants", "print constants");
  constants->add_option("--cn", o.cn, "mean chordal distance on S^n")->check(CLI::Range(1, 6));
  constants->add_option("--n", o.n, "Nagata dimension n");
  constants->add_option("--c", o.c, "Nagata constant c");
  constants->add_option("--lambda", o.lambda, "connectivity constant lambda");
  constants->add_option("--leenaor-n", o.leenaor_n, "domain size n");

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_option("--seed", o.seed, "suite seed (default 7)");
  selftest->add_option("--only", o.only, "criterion ids")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*cover) return cmd_cover(o);
    if (*extend) return cmd_extend(o);
    if (*certify) return cmd_certify(o);
    if (*constants) return cmd_constants(o);
    if (*selftest) return cmd_selftest(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (is_input_error(e.code())) {
      std::cerr << "input error: " << e.what() << "\n";
      return 2;
    }
    std::cerr << "property violation: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
