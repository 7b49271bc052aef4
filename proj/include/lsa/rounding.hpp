#pragma once

// Randomized rounding of the configuration LP with contention resolution, and
// its derandomization by conditional expectations.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lsa/config_lp.hpp"
#include "lsa/instance.hpp"

namespace lsa {

struct RoundingOutcome {
  Allocation allocation;
  Value welfare = 0;
  std::optional<std::uint64_t> seed;  // randomized mode only
  // Derandomized mode: conditional expectation before any agent is fixed,
  // then after fixing each agent in turn.
  std::vector<double> expectation_trace;
};

inline constexpr double kWeightTolerance = 1e-6;

// Throws InputError unless every agent's weights sum to 1 within `tolerance`.
void validate_solution(const Instance& inst, const FractionalSolution& sol,
                       double tolerance = kWeightTolerance);

// Awards each cell to the agent of maximum v_ijk among those whose chosen
// bundle contains it; ties go to the smallest agent index.
Allocation resolve_contention(const Instance& inst, std::span<const Bundle> chosen);

RoundingOutcome round_randomized(const Instance& inst, const FractionalSolution& sol,
                                 std::uint64_t seed);

RoundingOutcome round_derandomized(const Instance& inst, const FractionalSolution& sol);

// Expected welfare of contention resolution when agents with fixed[a] set hold
// that bundle and every other agent samples from the solution independently.
double conditional_expectation(const Instance& inst, const FractionalSolution& sol,
                               std::span<const std::optional<Bundle>> fixed);

// Same, with `candidate` fixed for `agent` in addition to `fixed`.
double conditional_expectation(const Instance& inst, const FractionalSolution& sol,
                               std::span<const std::optional<Bundle>> fixed, int agent,
                               const Bundle& candidate);

struct RoundingMode {
  bool derandomize = true;
  std::uint64_t seed = 0;
};

struct PartialApproxResult {
  RoundingOutcome outcome;
  double lp_bound = 0.0;
  int lp_iterations = 0;
  int lp_columns = 0;
};

// LP solve followed by rounding.
PartialApproxResult solve_partial_approx(const Instance& inst, RoundingMode mode,
                                         const LpOptions& lp_options = {});

}  // namespace lsa
