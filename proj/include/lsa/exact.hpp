#pragma once

// Exact optimum by backtracking over cells (row-major) with Latin-constraint
// bitmasks and admissible bounds. Exponential; guarded by order limits.

#include <string_view>

#include "lsa/instance.hpp"

namespace lsa {

enum class Objective { Umax, Emax };
enum class Mode { Partial, Complete };

Objective parse_objective(std::string_view name);
Mode parse_mode(std::string_view name);
std::string_view to_string(Objective objective);
std::string_view to_string(Mode mode);

struct ExactOptions {
  int limit_partial = 4;
  int limit_complete = 5;
  bool pruning = true;
  int threads = 1;
  double time_limit = 0.0;  // seconds; 0 disables
};

struct ExactResult {
  Allocation allocation;
  Value value = 0;
  long long nodes = 0;
};

// Objective value of an allocation: utilitarian or egalitarian welfare.
Value objective_value(const Instance& inst, const Allocation& a, Objective objective);

// Throws LimitExceeded when n exceeds the limit for `mode` or the time limit
// expires.
ExactResult solve_exact_enumeration(const Instance& inst, Objective objective, Mode mode,
                                    const ExactOptions& options = {});

}  // namespace lsa
