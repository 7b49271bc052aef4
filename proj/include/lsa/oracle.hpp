#pragma once

// Exhaustive ground-truth engines for small orders.

#include <optional>

#include "lsa/exact.hpp"
#include "lsa/instance.hpp"

namespace lsa {

struct FairSearchOptions {
  int limit = 5;
  bool pruning = true;  // fairness bounds plus agent symmetry for identical valuations
};

struct FairSearchResult {
  bool exists = false;
  std::optional<Allocation> witness;
  long long leaves = 0;  // complete allocations tested
};

// Searches complete allocations for one satisfying the notion.
FairSearchResult exists_fair_complete(const Instance& inst, Fairness notion, bool weak = false,
                                      const FairSearchOptions& options = {});

// Partial Emax >= 1 on a binary instance: every agent can be matched to a
// distinct cell it values.
bool binary_partial_emax_positive(const Instance& inst);

ExactResult exact_umax_emax(const Instance& inst, Objective objective, Mode mode,
                            const ExactOptions& options = {});

}  // namespace lsa
