#include "lsa/complete_solver.hpp"

#include <numeric>
#include <utility>

#include "lsa/error.hpp"
#include "lsa/extension.hpp"

namespace lsa {

namespace {

bool in_block(int n, int block, int j, int k) {
  if (n % 2 == 0) {
    const int h = n / 2;
    switch (block) {
      case 1: return j < h && k < h;
      case 2: return j < h && k >= h;
      case 3: return j >= h && k < h;
      default: return j >= h && k >= h;
    }
  }
  const int c = (n - 1) / 2;  // 0-based centre
  switch (block) {
    case 1: return j < c && k <= c;
    case 2: return j <= c && k > c;
    case 3: return j >= c && k < c;
    default: return j > c && k >= c;
  }
}

}  // namespace

Allocation block_of(const Allocation& a, int block) {
  if (block < 1 || block > 4) throw InputError("block index must be in 1..4");
  const int n = a.n();
  Allocation out(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (!a.empty_at(j, k) && in_block(n, block, j, k)) out.assign(j, k, a.at(j, k));
    }
  }
  return out;
}

CompleteApproxResult complete_from_partial(const Instance& inst, const Allocation& partial) {
  require_same_order(inst, partial);
  if (!is_feasible(partial)) throw InputError("rounded allocation is infeasible");
  const int n = inst.n();
  const Value partial_welfare = utilitarian_welfare(inst, partial);
  if (partial.is_complete()) {
    return {partial, partial_welfare, 0.0, 0, partial, partial_welfare, partial_welfare};
  }

  std::vector<int> items(n);
  std::vector<int> rounds(n);
  std::iota(items.begin(), items.end(), 0);
  std::iota(rounds.begin(), rounds.end(), 0);
  if (n % 2 == 1) {
    // Move the lexicographically smallest empty cell to the centre.
    const int c = (n - 1) / 2;
    bool found = false;
    for (int j = 0; j < n && !found; ++j) {
      for (int k = 0; k < n && !found; ++k) {
        if (partial.empty_at(j, k)) {
          std::swap(items[j], items[c]);
          std::swap(rounds[k], rounds[c]);
          found = true;
        }
      }
    }
  }
  const Allocation relabeled = relabel(partial, items, rounds);
  const Instance rinst = relabel(inst, items, rounds);

  int best = 0;
  Value best_welfare = -1;
  Value total = 0;
  Allocation best_block(n);
  for (int b = 1; b <= 4; ++b) {
    Allocation blk = block_of(relabeled, b);
    const Value w = utilitarian_welfare(rinst, blk);
    total += w;
    if (w > best_welfare) {
      best_welfare = w;
      best = b;
      best_block = std::move(blk);
    }
  }
  if (total != partial_welfare) throw InternalError("blocks do not partition the rounded allocation");

  const auto used_items = occupied_items(best_block).size();
  const auto used_rounds = occupied_rounds(best_block).size();
  if (static_cast<int>(used_items + used_rounds) > n) {
    throw InternalError("chosen block violates the extension precondition");
  }
  Allocation completed = unrelabel(extend(best_block), items, rounds);
  const Value welfare = utilitarian_welfare(inst, completed);
  if (welfare < best_welfare) throw InternalError("extension lost welfare");
  return {std::move(completed), welfare, 0.0, best, partial, partial_welfare, best_welfare};
}

CompleteApproxResult solve_complete_approx(const Instance& inst, RoundingMode mode,
                                           const LpOptions& lp_options) {
  const PartialApproxResult rounded = solve_partial_approx(inst, mode, lp_options);
  CompleteApproxResult result = complete_from_partial(inst, rounded.outcome.allocation);
  result.lp_bound = rounded.lp_bound;
  return result;
}

}  // namespace lsa
