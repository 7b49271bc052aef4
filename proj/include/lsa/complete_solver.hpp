#pragma once

// Approximation for the complete utilitarian problem: round the configuration
// LP, keep the best of four blocks of the partial allocation, then extend it.

#include "lsa/config_lp.hpp"
#include "lsa/instance.hpp"
#include "lsa/rounding.hpp"

namespace lsa {

struct CompleteApproxResult {
  Allocation allocation;  // complete
  Value welfare = 0;
  double lp_bound = 0.0;
  int block_chosen = 0;  // 1..4, or 0 when the rounded allocation was already complete
  Allocation partial;    // rounded allocation before blocking
  Value partial_welfare = 0;
  Value block_welfare = 0;  // welfare of the chosen block before extension
};

// Block b (1..4) of `a`, in labels where the odd-order pivot already sits at
// the centre cell. Cells outside the block are cleared.
Allocation block_of(const Allocation& a, int block);

CompleteApproxResult complete_from_partial(const Instance& inst, const Allocation& partial);

CompleteApproxResult solve_complete_approx(const Instance& inst, RoundingMode mode,
                                           const LpOptions& lp_options = {});

}  // namespace lsa
