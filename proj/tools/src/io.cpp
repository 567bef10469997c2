#include "lipext_tools/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lipext/errors.hpp"

namespace lipext::tools {

InputError::InputError(const std::string& file, const std::string& field, const std::string& message)
    : std::runtime_error(file + ": " + field + ": " + message), file_(file), field_(field) {}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "<file>", "cannot open");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path, "<document>", e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path, "<file>", "cannot write");
  out << text;
}

namespace {

const json& field(const json& j, const std::string& name, const std::string& file) {
  if (!j.is_object()) throw InputError(file, "<document>", "expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw InputError(file, name, "missing field");
  return *it;
}

double number(const json& v, const std::string& file, const std::string& where) {
  if (!v.is_number()) throw InputError(file, where, "expected a number");
  return v.get<double>();
}

std::vector<double> numbers(const json& v, const std::string& file, const std::string& where) {
  if (!v.is_array()) throw InputError(file, where, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(number(v[k], file, where + "[" + std::to_string(k) + "]"));
  return out;
}

std::vector<std::vector<double>> matrix(const json& v, const std::string& file, const std::string& where) {
  if (!v.is_array()) throw InputError(file, where, "expected an array of arrays");
  std::vector<std::vector<double>> out;
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(numbers(v[k], file, where + "[" + std::to_string(k) + "]"));
  return out;
}

std::vector<std::size_t> indices(const json& v, const std::string& file, const std::string& where) {
  if (!v.is_array()) throw InputError(file, where, "expected an array of indices");
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_number_unsigned() && !(v[k].is_number_integer() && v[k].get<long long>() >= 0))
      throw InputError(file, where + "[" + std::to_string(k) + "]", "expected a nonnegative integer");
    out.push_back(v[k].get<std::size_t>());
  }
  return out;
}

std::vector<std::string> labels(const json& j, const std::string& file) {
  std::vector<std::string> out;
  auto it = j.find("points");
  if (it == j.end()) return out;
  if (!it->is_array()) throw InputError(file, "points", "expected an array of labels");
  for (const auto& v : *it) out.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  return out;
}

template <class F>
auto wrap(const std::string& file, const std::string& where, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    throw InputError(file, where, e.what());
  }
}

json named(const NamedValues& v) {
  json o = json::object();
  for (auto& [k, x] : v) o[k] = x;
  return o;
}

json blocks_json(const std::vector<Subset>& blocks) {
  json b = json::array();
  for (const auto& s : blocks) b.push_back(s);
  return b;
}

}  // namespace

SpaceInput parse_space(const json& j, const std::string& file) {
  SpaceInput in;
  in.source = j;
  if (!j.is_object()) throw InputError(file, "<document>", "expected a JSON object");
  auto names = labels(j, file);
  if (j.contains("dist")) {
    auto d = matrix(j["dist"], file, "dist");
    if (!names.empty() && names.size() != d.size())
      throw InputError(file, "points", "label count differs from the matrix size");
    in.space = wrap(file, "dist", [&] { return FiniteMetricSpace::validated(d, names); });
    return in;
  }
  if (j.contains("coords")) {
    PointCloud pc;
    pc.coords = matrix(j["coords"], file, "coords");
    if (j.contains("norm")) {
      if (!j["norm"].is_string()) throw InputError(file, "norm", "expected \"l1\", \"l2\" or \"linf\"");
      auto n = parse_norm(j["norm"].get<std::string>());
      if (!n) throw InputError(file, "norm", "expected \"l1\", \"l2\" or \"linf\"");
      pc.norm = *n;
    }
    for (std::size_t k = 0; k < pc.coords.size(); ++k)
      if (pc.coords[k].size() != pc.dimension())
        throw InputError(file, "coords[" + std::to_string(k) + "]", "dimension mismatch");
    if (!names.empty() && names.size() != pc.coords.size())
      throw InputError(file, "points", "label count differs from the number of coordinates");
    in.space = wrap(file, "coords", [&] {
      FiniteMetricSpace m = pc.metric();
      if (names.empty()) return m;
      std::vector<double> flat;
      for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = 0; b < m.size(); ++b) flat.push_back(m.d(a, b));
      return FiniteMetricSpace::from_norm_matrix(std::move(flat), m.size(), names);
    });
    in.cloud = std::move(pc);
    return in;
  }
  throw InputError(file, "dist", "missing field (or \"coords\")");
}

Subset parse_subset(const json& j, const FiniteMetricSpace& space, const std::string& file) {
  const json& d = j.is_array() ? j : field(j, "domain", file);
  auto idx = indices(d, file, "domain");
  return wrap(file, "domain", [&] { return make_subset(space, idx); });
}

PartialMap parse_map(const json& j, const FiniteMetricSpace& space, const std::string& file) {
  auto idx = indices(field(j, "domain", file), file, "domain");
  auto vals = matrix(field(j, "values", file), file, "values");
  if (idx.size() != vals.size()) throw InputError(file, "values", "one value per domain index is required");
  PartialMap f;
  if (j.contains("target")) {
    const json& t = j["target"];
    if (t.contains("mid")) {
      auto dist = matrix(field(t, "dist", file), file, "target.dist");
      std::vector<std::vector<std::size_t>> mid;
      const json& m = t["mid"];
      if (!m.is_array()) throw InputError(file, "target.mid", "expected an index matrix");
      for (std::size_t k = 0; k < m.size(); ++k) mid.push_back(indices(m[k], file, "target.mid[" + std::to_string(k) + "]"));
      f.target = wrap(file, "target", [&] { return TargetSpace::midpoint(dist, mid); });
    } else {
      std::size_t dim = vals.empty() ? 1 : vals.front().size();
      if (t.contains("dim")) dim = static_cast<std::size_t>(number(t["dim"], file, "target.dim"));
      Norm norm = Norm::L2;
      if (t.contains("norm")) {
        auto n = t["norm"].is_string() ? parse_norm(t["norm"].get<std::string>()) : std::nullopt;
        if (!n) throw InputError(file, "target.norm", "expected \"l1\", \"l2\" or \"linf\"");
        norm = *n;
      }
      f.target = TargetSpace::normed(dim, norm);
    }
  } else {
    f.target = TargetSpace::normed(vals.empty() ? 1 : vals.front().size());
  }
  // keep values aligned with the sorted domain
  std::vector<std::size_t> order(idx.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return idx[a] < idx[b]; });
  f.domain = wrap(file, "domain", [&] { return make_subset(space, idx); });
  for (std::size_t k : order) f.values.push_back(vals[k]);
  wrap(file, "values", [&] {
    f.check(space);
    return 0;
  });
  return f;
}

json target_json(const TargetSpace& t) {
  if (t.is_normed()) return {{"kind", "normed"}, {"dim", t.dim()}, {"norm", to_string(t.norm())}};
  return {{"kind", "midpoint"}, {"size", t.midpoint_size()}};
}

json map_json(const PartialMap& f) {
  return {{"domain", f.domain}, {"values", f.values}, {"target", target_json(f.target)}};
}

json to_json(const Covering& c) {
  json j;
  j["blocks"] = blocks_json(c.blocks);
  j["scale"] = c.scale ? json(*c.scale) : json(nullptr);
  j["colors"] = c.colors;
  if (!c.block_dist_to_A.empty()) j["block_dist_to_A"] = c.block_dist_to_A;
  if (!c.multiplicity.empty()) {
    j["multiplicity"] = c.multiplicity;
    j["permutations"] = c.permutations;
    j["ball_radius"] = c.ball_radius;
    j["enumerated"] = c.enumerated;
  }
  return j;
}

json to_json(const WhitneyCovering& c) {
  json j = to_json(c.base);
  j["kind"] = c.kind == WhitneyKind::Basic ? "whitney" : "whitney-refined";
  j["domain"] = c.A;
  j["r"] = c.r;
  j["nagata"] = {{"n", c.nagata.n}, {"c", c.nagata.c}};
  j["params"] = {{"n", c.params.n}, {"alpha", c.params.alpha}, {"delta", c.params.delta}, {"gamma", c.params.gamma}};
  j["level"] = c.level;
  j["sublevel"] = c.sublevel;
  j["report"] = {{"ok", c.report.ok()},
                 {"max_multiplicity", c.report.max_multiplicity},
                 {"max_diameter_ratio", c.report.max_diameter_ratio},
                 {"max_distance_ratio", c.report.max_distance_ratio},
                 {"violations", c.report.violations}};
  if (c.subset_multiplicity) j["subset_multiplicity"] = c.subset_multiplicity->multiplicity;
  j["verified"] = c.verified;
  return j;
}

json to_json(const SimplicialComplex& k) {
  json m = json::array();
  for (const auto& s : k.maximal()) m.push_back(s);
  return {{"vertices", k.vertices()}, {"maximal", m}};
}

json to_json(const ExtensionResult& r) {
  json j;
  j["method"] = to_string(r.method);
  j["values"] = r.values;
  j["certificate"] = {{"constant", r.certificate.constant},
                      {"pair", {r.certificate.i, r.certificate.j}},
                      {"pairs", r.certificate.pair_count}};
  j["lip_f"] = r.lip_f;
  j["normalized_constant"] = r.normalized_constant;
  j["bound_constant"] = r.bound_constant;
  j["paper_bound"] = r.paper_bound;
  j["bound_label"] = r.bound_label;
  j["margin"] = r.margin();
  j["within_bound"] = r.within_bound;
  j["inputs"] = named(r.inputs);
  j["diagnostics"] = named(r.diagnostics);
  return j;
}

std::string format_number(double v) {
  if (v == 0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_values_csv(std::ostream& os, const FiniteMetricSpace& space, const std::vector<Point>& values) {
  std::size_t dim = values.empty() ? 0 : values.front().size();
  os << "point,label";
  for (std::size_t c = 0; c < dim; ++c) os << ",y" << c;
  os << "\n";
  for (std::size_t x = 0; x < values.size(); ++x) {
    os << x << "," << (x < space.labels().size() ? space.labels()[x] : std::to_string(x));
    for (double v : values[x]) os << "," << format_number(v);
    os << "\n";
  }
}

void write_weights_csv(std::ostream& os, const PartitionOfUnity& pou) {
  os << "point,block,weight\n";
  for (std::size_t x = 0; x < pou.weights.size(); ++x)
    for (auto& [i, w] : pou.weights[x]) os << x << "," << i << "," << format_number(w) << "\n";
}

ReportRow report_row(const std::string& instance, const ExtensionResult& r, double runtime_ms) {
  ReportRow row;
  row.instance = instance;
  row.method = to_string(r.method);
  for (auto& [k, v] : r.inputs) {
    if (k == "n") row.n = v;
    if (k == "c") row.c = v;
  }
  row.lip_f = r.lip_f;
  row.lip_F = r.certificate.constant;
  row.bound = r.paper_bound;
  row.runtime_ms = runtime_ms;
  return row;
}

void write_report_csv(std::ostream& os, const std::vector<ReportRow>& rows, bool timing) {
  os << "instance,method,n,c,lip_f,lip_F,paper_bound,margin";
  if (timing) os << ",runtime_ms";
  os << "\n";
  for (const auto& r : rows) {
    os << r.instance << "," << r.method << "," << (r.n ? format_number(*r.n) : "") << ","
       << (r.c ? format_number(*r.c) : "") << "," << format_number(r.lip_f) << "," << format_number(r.lip_F) << ","
       << format_number(r.bound) << "," << format_number(r.bound - r.lip_F);
    if (timing) os << "," << format_number(r.runtime_ms);
    os << "\n";
  }
}

}  // namespace lipext::tools
