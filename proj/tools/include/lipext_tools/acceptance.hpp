#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace lipext::tools {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;  // 0: no runtime limit
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<std::string(std::uint64_t seed)> body;  // throws on failure, returns a summary
};

std::vector<Criterion> acceptance_criteria();

CriterionResult run_criterion(const Criterion& c, std::uint64_t seed);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::vector<int>& only = {});

// "PASS [3] name (0.42 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace lipext::tools
