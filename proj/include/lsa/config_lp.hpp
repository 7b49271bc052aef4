#pragma once

// Configuration LP for the partial utilitarian problem, solved by column
// generation. Each column is one agent's bundle (an item-round matching);
// pricing an agent is a maximum-weight matching under v_ijk - q_jk.

#include <vector>

#include "lsa/error.hpp"
#include "lsa/instance.hpp"

namespace lsa {

struct WeightedBundle {
  int agent = 0;
  Bundle bundle;
  double weight = 0.0;  // y_{iS}
  Value value = 0;      // v_i(S)
};

struct FractionalSolution {
  int n = 0;
  std::vector<WeightedBundle> columns;  // support only (weight > 0)
  double objective = 0.0;
};

struct DualPrices {
  std::vector<double> p;  // per agent
  std::vector<double> q;  // per cell, item-major (item * n + round)

  double cell(int n, int item, int round) const { return q[static_cast<std::size_t>(item) * n + round]; }
};

struct PricingResult {
  Bundle bundle;
  double reduced_cost = 0.0;
};

struct LpOptions {
  double epsilon = 1e-9;
  int max_rounds = 0;  // pricing rounds; 0 means 10 * n^3
};

struct LpResult {
  FractionalSolution solution;
  DualPrices duals;
  int iterations = 0;  // pricing rounds
  int columns = 0;     // generated columns, including the empty ones
  long pivots = 0;
};

class IterationLimitExceeded : public LimitExceeded {
 public:
  IterationLimitExceeded(const std::string& what, double lower, double upper)
      : LimitExceeded(what), lower_bound(lower), upper_bound(upper) {}

  double lower_bound;  // restricted master objective
  double upper_bound;  // Lagrangian bound from the last pricing sweep
};

// Bundle maximizing sum_{(j,k) in S} (v_ijk - q_jk); reduced cost subtracts p_i.
PricingResult price(const Instance& inst, int agent, const DualPrices& duals);

LpResult solve_configuration_lp(const Instance& inst, const LpOptions& options = {});

// x*_{ijk} = sum over columns of agent i containing (j,k) of y_{iS}, indexed
// (agent * n + item) * n + round.
std::vector<double> marginals(const FractionalSolution& sol, int n);

}  // namespace lsa
