#pragma once

// Benchmark driver producing one CSV row per (instance, algorithm).
//
// Config JSON:
//   {"families": [{"name": "uniform", "sizes": [3, 4], "seeds": [1, 2], "max_value": 9}],
//    "algorithms": ["partial-approx", "complete-approx", "fpt", "exact"],
//    "deterministic": false}
// Families: uniform, binary, sparse, identical, example1, example2 (the last
// two ignore sizes). "deterministic" writes wall_ms as 0.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lsa/exact.hpp"

namespace lsa {

struct BenchFamily {
  std::string name;
  std::vector<int> sizes;
  std::vector<std::uint64_t> seeds{0};
  Value max_value = 9;
};

struct BenchConfig {
  std::vector<BenchFamily> families;
  std::vector<std::string> algorithms{"partial-approx", "complete-approx", "fpt", "exact"};
  bool deterministic = false;
  ExactOptions oracle;
};

inline constexpr const char* kBenchHeader = "family,n,seed,algorithm,value,lp_bound,oracle_value,ratio,wall_ms";

BenchConfig bench_config_from_json(const nlohmann::json& j);

// Rows go to `csv`; skipped oracles and similar notes go to `notes`.
void run_bench(const BenchConfig& config, std::ostream& csv, std::ostream& notes);

}  // namespace lsa
