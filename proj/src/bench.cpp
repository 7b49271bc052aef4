#include "lsa/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>

#include "lsa/complete_solver.hpp"
#include "lsa/error.hpp"
#include "lsa/fpt.hpp"
#include "lsa/generators.hpp"
#include "lsa/rounding.hpp"

namespace lsa {

namespace {

const std::vector<std::string> kAlgorithms{"partial-approx", "complete-approx", "fpt", "exact"};

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

struct Case {
  int n;
  std::uint64_t seed;
  Instance inst;
};

std::vector<Case> cases_of(const BenchFamily& f) {
  std::vector<Case> out;
  if (f.name == "example1" || f.name == "example2") {
    for (const auto seed : f.seeds) {
      out.push_back({2, seed, f.name == "example1" ? example_partial_gap() : example_no_fair_complete()});
    }
    return out;
  }
  for (const int n : f.sizes) {
    for (const auto seed : f.seeds) {
      if (f.name == "uniform") {
        out.push_back({n, seed, random_instance(n, f.max_value, seed)});
      } else if (f.name == "binary") {
        out.push_back({n, seed, random_binary(n, 0.5, seed)});
      } else if (f.name == "sparse") {
        out.push_back({n, seed, random_sparse(n, 2, std::max<Value>(1, f.max_value), seed)});
      } else if (f.name == "identical") {
        out.push_back({n, seed, random_identical(n, f.max_value, seed)});
      } else {
        throw InputError("unknown bench family '" + f.name + "'");
      }
    }
  }
  return out;
}

}  // namespace

BenchConfig bench_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("bench config must be a JSON object");
  BenchConfig config;
  try {
    if (j.contains("families")) {
      for (const auto& fj : j.at("families")) {
        BenchFamily f;
        f.name = fj.at("name").get<std::string>();
        if (fj.contains("sizes")) f.sizes = fj.at("sizes").get<std::vector<int>>();
        if (fj.contains("seeds")) f.seeds = fj.at("seeds").get<std::vector<std::uint64_t>>();
        if (fj.contains("max_value")) f.max_value = fj.at("max_value").get<Value>();
        config.families.push_back(std::move(f));
      }
    }
    if (j.contains("algorithms")) config.algorithms = j.at("algorithms").get<std::vector<std::string>>();
    if (j.contains("deterministic")) config.deterministic = j.at("deterministic").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad bench config: ") + e.what());
  }
  for (const auto& a : config.algorithms) {
    if (std::find(kAlgorithms.begin(), kAlgorithms.end(), a) == kAlgorithms.end()) {
      throw InputError("unknown bench algorithm '" + a + "'");
    }
  }
  return config;
}

void run_bench(const BenchConfig& config, std::ostream& csv, std::ostream& notes) {
  csv << kBenchHeader << '\n';
  for (const BenchFamily& family : config.families) {
    for (const Case& c : cases_of(family)) {
      std::optional<Value> partial_oracle;
      std::optional<Value> complete_oracle;
      auto oracle = [&](Mode mode) -> std::optional<Value> {
        auto& slot = mode == Mode::Partial ? partial_oracle : complete_oracle;
        if (!slot) {
          try {
            slot = solve_exact_enumeration(c.inst, Objective::Umax, mode, config.oracle).value;
          } catch (const LimitExceeded& e) {
            notes << family.name << " n=" << c.n << " seed=" << c.seed << ": oracle skipped (" << e.what() << ")\n";
            slot = Value{-1};
          }
        }
        return *slot < 0 ? std::nullopt : slot;
      };

      for (const std::string& algorithm : config.algorithms) {
        const auto start = std::chrono::steady_clock::now();
        Value value = 0;
        std::optional<double> lp_bound;
        Mode mode = Mode::Partial;
        if (algorithm == "partial-approx") {
          const auto r = solve_partial_approx(c.inst, RoundingMode{true, c.seed});
          value = r.outcome.welfare;
          lp_bound = r.lp_bound;
        } else if (algorithm == "complete-approx") {
          const auto r = solve_complete_approx(c.inst, RoundingMode{true, c.seed});
          value = r.welfare;
          lp_bound = r.lp_bound;
          mode = Mode::Complete;
        } else if (algorithm == "fpt") {
          FptOptions options;
          options.seed = c.seed;
          options.exact = config.oracle;
          try {
            value = solve_fpt_value(c.inst, Mode::Partial, options).value;
          } catch (const LimitExceeded& e) {
            notes << family.name << " n=" << c.n << " seed=" << c.seed << ": fpt skipped (" << e.what() << ")\n";
            continue;
          }
        } else {
          try {
            value = solve_exact_enumeration(c.inst, Objective::Umax, Mode::Partial, config.oracle).value;
          } catch (const LimitExceeded& e) {
            notes << family.name << " n=" << c.n << " seed=" << c.seed << ": exact skipped (" << e.what() << ")\n";
            continue;
          }
        }
        const double wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        const auto reference = oracle(mode);

        csv << family.name << ',' << c.n << ',' << c.seed << ',' << algorithm << ',' << value << ',';
        if (lp_bound) csv << fixed(*lp_bound, 9);
        csv << ',';
        if (reference) csv << *reference;
        csv << ',';
        if (reference) {
          if (*reference > 0) {
            csv << fixed(static_cast<double>(value) / static_cast<double>(*reference), 6);
          } else if (value == 0) {
            csv << fixed(1.0, 6);
          }
        }
        csv << ',' << fixed(config.deterministic ? 0.0 : wall_ms, 3) << '\n';
      }
    }
  }
}

}  // namespace lsa
