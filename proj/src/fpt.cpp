#include "lsa/fpt.hpp"

#include <cmath>

#include "lsa/error.hpp"
#include "lsa/extension.hpp"
#include "lsa/matching.hpp"
#include "lsa/rng.hpp"

namespace lsa {

std::uint64_t coloring_trials(int s, double delta_pair) {
  if (!(delta_pair > 0.0) || delta_pair >= 1.0) throw InputError("failure probability must lie in (0, 1)");
  return static_cast<std::uint64_t>(std::ceil(std::exp(static_cast<double>(s)) * std::log(1.0 / delta_pair)));
}

double pair_failure_bound(int n, double delta) {
  const double s_max = std::ceil(n / 2.0);
  return delta / std::max(1.0, s_max * (s_max + 1) / 2.0);
}

Allocation best_for_scheme(const Instance& inst, const ColorScheme& scheme, Value* value) {
  const int n = inst.n();
  const int t = scheme.t;
  std::vector<std::vector<Bundle>> q(n, std::vector<Bundle>(t));
  WeightedBipartiteGraph<Value> agents_to_classes(n, t, 0);
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < t; ++l) {
      WeightedBipartiteGraph<Value> g(n, n, 0);
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          if (scheme.class_of(j * n + k) == l) g.at(j, k) = inst.value(i, j, k);
        }
      }
      const auto m = max_weight_matching(g);
      for (const auto& [j, k] : m.pairs) q[i][l].push_back({j, k});
      agents_to_classes.at(i, l) = m.weight;
    }
  }
  const auto mu = max_weight_matching(agents_to_classes);
  Allocation a(n);
  for (const auto& [i, l] : mu.pairs) {
    for (const Cell& c : q[i][l]) {
      if (!a.empty_at(c.item, c.round)) throw InternalError("color classes overlap");
      a.assign(c.item, c.round, i);
    }
  }
  if (!is_feasible(a)) throw InternalError("color-coded allocation is infeasible");
  if (value) *value = mu.weight;
  return a;
}

namespace {

// All maps [s] -> [t], in lexicographic order.
std::vector<std::vector<int>> all_maps(int s, int t) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(s, 0);
  while (true) {
    out.push_back(f);
    int pos = s - 1;
    while (pos >= 0 && ++f[pos] == t) f[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

}  // namespace

FptResult solve_fpt_value(const Instance& inst, Mode mode, const FptOptions& options) {
  const int n = inst.n();
  const int cells = n * n;
  const double delta_pair = pair_failure_bound(n, options.delta);

  std::vector<int> positive;
  for (int c = 0; c < cells; ++c) {
    for (int i = 0; i < n; ++i) {
      if (inst.value(i, c / n, c % n) > 0) {
        positive.push_back(c);
        break;
      }
    }
  }
  const int p = static_cast<int>(positive.size());

  FptResult result{Allocation(n), 0, 0, 0, false, true, options.delta};
  Value u = 0;
  for (int s = 1;; ++s) {
    result.s_reached = s;
    // Exhaustive colorings of the positive cells when s^p fits the budget.
    bool exhaustive = false;
    std::uint64_t count = 1;
    if (options.deterministic_small && s <= 4) {
      exhaustive = true;
      for (int e = 0; e < p && exhaustive; ++e) {
        count *= static_cast<std::uint64_t>(s);
        if (count > options.coloring_budget) exhaustive = false;
      }
    }
    if (!exhaustive) {
      count = coloring_trials(s, delta_pair);
      result.deterministic = false;
    }

    for (int t = 1; t <= s; ++t) {
      const auto maps = all_maps(s, t);
      Rng rng = Rng::stream(options.seed, (static_cast<std::uint64_t>(s) << 32) | static_cast<std::uint64_t>(t));
      ColorScheme scheme{s, t, std::vector<int>(cells, 0), {}};
      for (std::uint64_t trial = 0; trial < count; ++trial) {
        if (exhaustive) {
          std::uint64_t code = trial;
          for (const int c : positive) {
            scheme.chi[c] = static_cast<int>(code % s);
            code /= s;
          }
        } else {
          for (int c = 0; c < cells; ++c) scheme.chi[c] = static_cast<int>(rng.below(s));
        }
        ++result.colorings;
        for (const auto& psi : maps) {
          scheme.psi = psi;
          Value v = 0;
          Allocation a = best_for_scheme(inst, scheme, &v);
          if (v > u) {
            u = v;
            result.allocation = std::move(a);
          }
        }
      }
    }

    if (2 * u >= n) {
      ExactResult exact = solve_exact_enumeration(inst, Objective::Umax, mode, options.exact);
      result.allocation = std::move(exact.allocation);
      result.value = exact.value;
      result.enumerated = true;
      return result;
    }
    if (s > u) break;
  }
  if (mode == Mode::Complete) result.allocation = extend(result.allocation);
  result.value = utilitarian_welfare(inst, result.allocation);
  return result;
}

}  // namespace lsa
