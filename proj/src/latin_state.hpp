#pragma once

// Incremental Latin-constraint bookkeeping shared by the backtracking
// searches. Agent sets are 64-bit masks, so searches are limited to n <= 64
// (every exhaustive search has a far smaller configured limit).

#include <algorithm>
#include <cstdint>
#include <vector>

#include "lsa/error.hpp"
#include "lsa/instance.hpp"

namespace lsa::detail {

struct LatinState {
  explicit LatinState(int order) : n(order), grid(order), item_mask(order, 0), round_mask(order, 0) {
    if (order > 64) throw LimitExceeded("backtracking search supports n <= 64");
  }

  std::uint64_t full() const { return n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1); }

  // Agents that may still take (item, round).
  std::uint64_t free_agents(int item, int round) const {
    return full() & ~(item_mask[item] | round_mask[round]);
  }

  void place(int item, int round, int agent) {
    grid.assign(item, round, agent);
    item_mask[item] |= std::uint64_t{1} << agent;
    round_mask[round] |= std::uint64_t{1} << agent;
  }

  void remove(int item, int round) {
    const int agent = grid.at(item, round);
    grid.clear(item, round);
    item_mask[item] &= ~(std::uint64_t{1} << agent);
    round_mask[round] &= ~(std::uint64_t{1} << agent);
  }

  bool agent_has_item(int agent, int item) const { return (item_mask[item] >> agent) & 1U; }
  bool agent_has_round(int agent, int round) const { return (round_mask[round] >> agent) & 1U; }

  int n;
  Allocation grid;
  std::vector<std::uint64_t> item_mask;
  std::vector<std::uint64_t> round_mask;
};

// Upper bound on what `agent` can still add, given that cells with flat index
// >= `next_cell` (row-major) are still open: one cell per item row the agent
// does not hold yet, in a round column it does not hold yet.
inline Value remaining_agent_bound(const Instance& inst, const LatinState& st, int agent,
                                   int next_cell) {
  const int n = inst.n();
  Value bound = 0;
  for (int j = 0; j < n; ++j) {
    if (st.agent_has_item(agent, j)) continue;
    Value best = 0;
    for (int k = 0; k < n; ++k) {
      if (j * n + k < next_cell || st.agent_has_round(agent, k)) continue;
      best = std::max(best, inst.value(agent, j, k));
    }
    bound += best;
  }
  return bound;
}

}  // namespace lsa::detail
