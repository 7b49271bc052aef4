#include "lsa/config_lp.hpp"

#include <algorithm>
#include <set>

#include "lsa/matching.hpp"
#include "simplex.hpp"

namespace lsa {

PricingResult price(const Instance& inst, int agent, const DualPrices& duals) {
  const int n = inst.n();
  WeightedBipartiteGraph<double> g(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      g.at(j, k) = static_cast<double>(inst.value(agent, j, k)) - duals.cell(n, j, k);
    }
  }
  const auto m = max_weight_matching(g);
  PricingResult result;
  for (const auto& [j, k] : m.pairs) result.bundle.push_back({j, k});
  result.reduced_cost = m.weight - duals.p[agent];
  return result;
}

LpResult solve_configuration_lp(const Instance& inst, const LpOptions& options) {
  const int n = inst.n();
  const double eps = options.epsilon;
  const int cap = options.max_rounds > 0 ? options.max_rounds : 10 * n * n * n;

  detail::RestrictedMaster master(n, n * n, eps);
  std::set<std::pair<int, std::vector<int>>> pool;
  for (int i = 0; i < n; ++i) pool.insert({i, {}});

  LpResult result;
  DualPrices duals;
  bool converged = false;
  double upper = 0.0;
  for (int round = 1; round <= cap; ++round) {
    master.solve();
    const auto pi = master.duals();
    duals.p.assign(pi.begin(), pi.begin() + n);
    duals.q.assign(pi.begin() + n, pi.end());
    result.iterations = round;

    int added = 0;
    upper = 0.0;
    for (const double q : duals.q) upper += std::max(q, 0.0);
    for (int i = 0; i < n; ++i) {
      PricingResult priced = price(inst, i, duals);
      upper += duals.p[i] + std::max(priced.reduced_cost, 0.0);
      if (priced.reduced_cost <= eps) continue;
      std::vector<int> cells;
      for (const Cell& c : priced.bundle) cells.push_back(c.item * n + c.round);
      std::sort(cells.begin(), cells.end());
      if (!pool.insert({i, cells}).second) continue;
      master.add_column(i, cells, static_cast<double>(inst.bundle_value(i, priced.bundle)));
      ++added;
    }
    if (added == 0) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw IterationLimitExceeded("column generation hit the limit of " + std::to_string(cap) +
                                     " pricing rounds",
                                 master.objective(), upper);
  }

  const auto y = master.primal();
  FractionalSolution sol;
  sol.n = n;
  for (int c = 0; c < master.num_columns(); ++c) {
    if (y[c] <= 1e-12) continue;
    WeightedBundle col;
    col.agent = master.column_agent(c);
    for (const int cell : master.column_cells(c)) col.bundle.push_back({cell / n, cell % n});
    col.weight = y[c];
    col.value = inst.bundle_value(col.agent, col.bundle);
    sol.objective += col.weight * static_cast<double>(col.value);
    sol.columns.push_back(std::move(col));
  }
  result.columns = master.num_columns();
  result.pivots = master.pivots();
  result.duals = std::move(duals);
  result.solution = std::move(sol);
  return result;
}

std::vector<double> marginals(const FractionalSolution& sol, int n) {
  std::vector<double> x(static_cast<std::size_t>(n) * n * n, 0.0);
  for (const WeightedBundle& col : sol.columns) {
    for (const Cell& c : col.bundle) {
      x[(static_cast<std::size_t>(col.agent) * n + c.item) * n + c.round] += col.weight;
    }
  }
  return x;
}

}  // namespace lsa
