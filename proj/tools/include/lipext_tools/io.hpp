#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lipext/coverings.hpp"
#include "lipext/extenders.hpp"
#include "lipext/metric.hpp"
#include "lipext/partition.hpp"
#include "lipext/simplicial.hpp"
#include "lipext/target.hpp"
#include "lipext/whitney.hpp"

namespace lipext::tools {

using nlohmann::json;

// Malformed input; maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& file, const std::string& field, const std::string& message);
  const std::string& file() const { return file_; }
  const std::string& field() const { return field_; }

 private:
  std::string file_, field_;
};

json read_json(const std::string& path);
void write_text(const std::string& path, const std::string& text);

struct SpaceInput {
  FiniteMetricSpace space;
  std::optional<PointCloud> cloud;
  json source;
};

// {"points": [labels], "dist": [[...]]} or {"coords": [[...]], "norm": "l1|l2|linf"}.
SpaceInput parse_space(const json& j, const std::string& file);

// {"domain": [indices]} or a bare index array.
Subset parse_subset(const json& j, const FiniteMetricSpace& space, const std::string& file);

// {"domain": [...], "values": [[...]], "target": {"dim": d, "norm": "l2"}}; the
// target defaults to the Euclidean space of the value dimension, and
// {"dist": ..., "mid": ...} selects a midpoint-table target.
PartialMap parse_map(const json& j, const FiniteMetricSpace& space, const std::string& file);

json target_json(const TargetSpace& t);
json map_json(const PartialMap& f);
json to_json(const Covering& c);
json to_json(const WhitneyCovering& c);
json to_json(const SimplicialComplex& k);
json to_json(const ExtensionResult& r);

// 12 significant digits, '.' separator.
std::string format_number(double v);

void write_values_csv(std::ostream& os, const FiniteMetricSpace& space, const std::vector<Point>& values);
void write_weights_csv(std::ostream& os, const PartitionOfUnity& pou);

struct ReportRow {
  std::string instance;
  std::string method;
  std::optional<double> n, c;
  double lip_f = 0.0;
  double lip_F = 0.0;
  double bound = 0.0;
  double runtime_ms = 0.0;
};

ReportRow report_row(const std::string& instance, const ExtensionResult& r, double runtime_ms);
void write_report_csv(std::ostream& os, const std::vector<ReportRow>& rows, bool timing);

}  // namespace lipext::tools
