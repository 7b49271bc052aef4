#pragma once

// Small fixed instances and seeded random families.

#include <cstdint>

#include "lsa/instance.hpp"

namespace lsa {

// n = 2; agent 1 values (1,1), agent 2 values (2,2), everything else 0.
Instance example_partial_gap();

// n = 2, identical valuations: 1 on the diagonal, 0 off it.
Instance example_no_fair_complete();

// Values uniform in [0, max_value].
Instance random_instance(int n, Value max_value, std::uint64_t seed);

// Each value is 1 with probability `density`.
Instance random_binary(int n, double density, std::uint64_t seed);

// At most `positive_cells` (agent, cell) entries are positive, values in
// [1, max_value]; entries may coincide.
Instance random_sparse(int n, int positive_cells, Value max_value, std::uint64_t seed);

// One value per cell in [0, max_value], shared by every agent.
Instance random_identical(int n, Value max_value, std::uint64_t seed);

}  // namespace lsa
