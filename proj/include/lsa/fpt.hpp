#pragma once

// Color-coding solver for the utilitarian problem, parameterized by the
// optimum value. Colorings come from Monte Carlo sampling (or exhaustive
// enumeration when that is cheap), so the answer is optimal with probability
// at least 1 - delta.

#include <cstdint>
#include <vector>

#include "lsa/exact.hpp"
#include "lsa/instance.hpp"

namespace lsa {

struct ColorScheme {
  int s = 1;
  int t = 1;
  std::vector<int> chi;  // per cell (item * n + round), values in [0, s)
  std::vector<int> psi;  // per color, values in [0, t)

  int class_of(int cell) const { return psi[chi[cell]]; }
};

struct FptOptions {
  double delta = 0.05;
  std::uint64_t seed = 0;
  bool deterministic_small = true;  // enumerate colorings when s <= 4 and s^p <= budget
  std::uint64_t coloring_budget = 4096;
  ExactOptions exact;
};

struct FptResult {
  Allocation allocation;
  Value value = 0;
  int s_reached = 0;
  long long colorings = 0;    // colorings examined
  bool enumerated = false;    // fell back to exact enumeration
  bool deterministic = true;  // every coloring family was exhaustive
  double delta = 0.0;
};

// Number of Monte Carlo colorings for a guess s: ceil(e^s * ln(1 / delta_pair)).
std::uint64_t coloring_trials(int s, double delta_pair);

// delta divided by the number of (s, t) guesses the loop can make before the
// enumeration fallback: with S = ceil(n / 2), S (S + 1) / 2.
double pair_failure_bound(int n, double delta);

// Best allocation respecting a scheme: each agent takes a max-weight matching
// inside one color class, classes matched to agents by max-weight matching.
// Only positively valued cells are kept.
Allocation best_for_scheme(const Instance& inst, const ColorScheme& scheme, Value* value = nullptr);

FptResult solve_fpt_value(const Instance& inst, Mode mode, const FptOptions& options = {});

}  // namespace lsa
