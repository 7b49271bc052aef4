#include "lsa/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lsa/rng.hpp"

namespace lsa {

namespace {

// Marginals plus, per cell, the agents in priority order (decreasing value,
// smaller index first on ties).
class ExpectationModel {
 public:
  ExpectationModel(const Instance& inst, const FractionalSolution& sol)
      : inst_(inst), n_(inst.n()), x_(marginals(sol, inst.n())), order_(n_ * n_) {
    for (int j = 0; j < n_; ++j) {
      for (int k = 0; k < n_; ++k) {
        auto& agents = order_[j * n_ + k];
        agents.resize(n_);
        std::iota(agents.begin(), agents.end(), 0);
        std::stable_sort(agents.begin(), agents.end(), [&](int a, int b) {
          return inst.value(a, j, k) > inst.value(b, j, k);
        });
      }
    }
  }

  double evaluate(std::span<const std::optional<Bundle>> fixed) const {
    // holds[a][cell] for fixed agents.
    std::vector<char> holds(static_cast<std::size_t>(n_) * n_ * n_, 0);
    for (int a = 0; a < n_; ++a) {
      if (!fixed[a]) continue;
      for (const Cell& c : *fixed[a]) holds[(static_cast<std::size_t>(a) * n_ + c.item) * n_ + c.round] = 1;
    }
    double total = 0.0;
    for (int j = 0; j < n_; ++j) {
      for (int k = 0; k < n_; ++k) {
        double none_before = 1.0;
        for (const int a : order_[j * n_ + k]) {
          const Value v = inst_.value(a, j, k);
          if (v == 0 || none_before <= 0.0) break;
          const std::size_t idx = (static_cast<std::size_t>(a) * n_ + j) * n_ + k;
          const double p = fixed[a] ? static_cast<double>(holds[idx]) : std::clamp(x_[idx], 0.0, 1.0);
          total += static_cast<double>(v) * p * none_before;
          none_before *= (1.0 - p);
        }
      }
    }
    return total;
  }

 private:
  const Instance& inst_;
  int n_;
  std::vector<double> x_;
  std::vector<std::vector<int>> order_;
};

RoundingOutcome finish(const Instance& inst, const std::vector<Bundle>& chosen) {
  RoundingOutcome out{resolve_contention(inst, chosen), 0, std::nullopt, {}};
  out.welfare = utilitarian_welfare(inst, out.allocation);
  return out;
}

}  // namespace

void validate_solution(const Instance& inst, const FractionalSolution& sol, double tolerance) {
  const int n = inst.n();
  if (sol.n != n) throw DimensionMismatch("fractional solution order differs from the instance");
  std::vector<double> sums(n, 0.0);
  for (const WeightedBundle& col : sol.columns) {
    if (col.agent < 0 || col.agent >= n) throw InputError("column agent out of range");
    if (col.weight < -tolerance) throw InputError("negative column weight");
    if (!is_matching(col.bundle)) throw InputError("column bundle is not an item-round matching");
    sums[col.agent] += col.weight;
  }
  for (int i = 0; i < n; ++i) {
    if (std::abs(sums[i] - 1.0) > tolerance) {
      throw InputError("weights of agent " + std::to_string(i + 1) + " sum to " +
                       std::to_string(sums[i]) + ", expected 1");
    }
  }
}

Allocation resolve_contention(const Instance& inst, std::span<const Bundle> chosen) {
  const int n = inst.n();
  Allocation a(n);
  for (int i = 0; i < n; ++i) {
    for (const Cell& c : chosen[i]) {
      const int holder = a.at(c.item, c.round);
      if (holder == kEmpty || inst.value(i, c.item, c.round) > inst.value(holder, c.item, c.round)) {
        a.assign(c.item, c.round, i);
      }
    }
  }
  return a;
}

RoundingOutcome round_randomized(const Instance& inst, const FractionalSolution& sol,
                                 std::uint64_t seed) {
  validate_solution(inst, sol);
  const int n = inst.n();
  std::vector<Bundle> chosen(n);
  for (int i = 0; i < n; ++i) {
    double total = 0.0;
    for (const WeightedBundle& col : sol.columns) {
      if (col.agent == i) total += col.weight;
    }
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
    const double target = rng.uniform() * total;
    double acc = 0.0;
    const WeightedBundle* pick = nullptr;
    for (const WeightedBundle& col : sol.columns) {
      if (col.agent != i || col.weight <= 0.0) continue;
      pick = &col;
      acc += col.weight;
      if (target < acc) break;
    }
    if (pick) chosen[i] = pick->bundle;
  }
  RoundingOutcome out = finish(inst, chosen);
  out.seed = seed;
  return out;
}

RoundingOutcome round_derandomized(const Instance& inst, const FractionalSolution& sol) {
  validate_solution(inst, sol);
  const int n = inst.n();
  const ExpectationModel model(inst, sol);
  std::vector<std::optional<Bundle>> fixed(n);
  std::vector<double> trace{model.evaluate(fixed)};
  for (int i = 0; i < n; ++i) {
    std::optional<Bundle> best_bundle;
    double best = -1.0;
    for (const WeightedBundle& col : sol.columns) {
      if (col.agent != i || col.weight <= 0.0) continue;
      fixed[i] = col.bundle;
      const double value = model.evaluate(fixed);
      if (value > best + 1e-12) {
        best = value;
        best_bundle = col.bundle;
      }
    }
    if (best_bundle) {
      fixed[i] = std::move(best_bundle);
      trace.push_back(best);
    } else {
      fixed[i] = Bundle{};
      trace.push_back(model.evaluate(fixed));
    }
  }
  std::vector<Bundle> chosen(n);
  for (int i = 0; i < n; ++i) chosen[i] = *fixed[i];
  RoundingOutcome out = finish(inst, chosen);
  out.expectation_trace = std::move(trace);
  return out;
}

double conditional_expectation(const Instance& inst, const FractionalSolution& sol,
                               std::span<const std::optional<Bundle>> fixed) {
  if (static_cast<int>(fixed.size()) != inst.n()) {
    throw DimensionMismatch("fixed bundles must have one entry per agent");
  }
  return ExpectationModel(inst, sol).evaluate(fixed);
}

double conditional_expectation(const Instance& inst, const FractionalSolution& sol,
                               std::span<const std::optional<Bundle>> fixed, int agent,
                               const Bundle& candidate) {
  std::vector<std::optional<Bundle>> all(fixed.begin(), fixed.end());
  if (static_cast<int>(all.size()) != inst.n()) {
    throw DimensionMismatch("fixed bundles must have one entry per agent");
  }
  all[agent] = candidate;
  return ExpectationModel(inst, sol).evaluate(all);
}

PartialApproxResult solve_partial_approx(const Instance& inst, RoundingMode mode,
                                         const LpOptions& lp_options) {
  const LpResult lp = solve_configuration_lp(inst, lp_options);
  return PartialApproxResult{mode.derandomize ? round_derandomized(inst, lp.solution)
                                              : round_randomized(inst, lp.solution, mode.seed),
                             lp.solution.objective, lp.iterations, lp.columns};
}

}  // namespace lsa
