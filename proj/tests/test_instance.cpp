#include <doctest.h>

#include "lsa/error.hpp"
#include "lsa/generators.hpp"
#include "lsa/instance.hpp"
#include "lsa/rng.hpp"
#include "oracles.hpp"

using namespace lsa;

TEST_CASE("feasibility follows the three Latin conditions") {
  CHECK(is_feasible(Allocation::from_grid({{0, 1}, {1, 0}})));
  CHECK(is_feasible(Allocation::from_grid({{0, kEmpty}, {kEmpty, kEmpty}})));
  CHECK_FALSE(is_feasible(Allocation::from_grid({{0, 0}, {1, kEmpty}})));  // agent twice in an item row
  CHECK_FALSE(is_feasible(Allocation::from_grid({{0, 1}, {0, kEmpty}})));  // agent twice in a round
  CHECK_THROWS_AS(Allocation::from_grid({{0, 5}, {1, 0}}), InputError);
}

TEST_CASE("feasibility agrees with the naive checker on random grids") {
  Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(3));
    oracle::Grid g(n * n);
    for (int& x : g) x = static_cast<int>(rng.below(n + 1)) - 1;
    CHECK(is_feasible(oracle::to_allocation(g, n)) == oracle::grid_feasible(g, n));
  }
}

TEST_CASE("welfare of the partial-gap example") {
  const Instance inst = example_partial_gap();
  const Allocation partial = Allocation::from_grid({{0, kEmpty}, {kEmpty, 1}});
  CHECK(utilitarian_welfare(inst, partial) == 2);
  CHECK(egalitarian_welfare(inst, partial) == 1);
  const Allocation c1 = Allocation::from_grid({{0, 1}, {1, 0}});
  const Allocation c2 = Allocation::from_grid({{1, 0}, {0, 1}});
  CHECK(utilitarian_welfare(inst, c1) == 1);
  CHECK(egalitarian_welfare(inst, c1) == 0);
  CHECK(utilitarian_welfare(inst, c2) == 1);
  CHECK(egalitarian_welfare(inst, c2) == 0);
  CHECK(inst.is_binary());
  CHECK_FALSE(inst.is_identical());
  CHECK(example_no_fair_complete().is_identical());
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(Instance(2, std::vector<Value>(7, 0)), DimensionMismatch);
  CHECK_THROWS_AS(Instance(2, std::vector<Value>{0, 0, 0, 0, 0, 0, 0, -1}), InputError);
  CHECK_THROWS_AS(Instance(0, {}), InputError);
  CHECK_THROWS_AS(require_same_order(Instance::zeros(2), Allocation(3)), DimensionMismatch);
}

TEST_CASE("fairness on the identical 2x2 diagonal example") {
  const Instance inst = example_no_fair_complete();
  // Both complete allocations give one agent the diagonal (value 2) and the
  // other agent nothing.
  for (const auto& grid : {std::vector<std::vector<int>>{{0, 1}, {1, 0}}, {{1, 0}, {0, 1}}}) {
    const Allocation a = Allocation::from_grid(grid);
    CHECK_FALSE(fairness_check(inst, a, Fairness::EF));
    CHECK_FALSE(fairness_check(inst, a, Fairness::EF1));
    CHECK_FALSE(fairness_check(inst, a, Fairness::EFX));
    CHECK_FALSE(fairness_check(inst, a, Fairness::PROP));
    CHECK_FALSE(fairness_check(inst, a, Fairness::EQ));
    CHECK_FALSE(fairness_check(inst, a, Fairness::EQ1));
    CHECK_FALSE(fairness_check(inst, a, Fairness::EQX));
    // The poorer agent's best and worst goods outside its bundle are both
    // worth 1, so 0 >= 2/2 - 1 holds.
    CHECK(fairness_check(inst, a, Fairness::PROP1));
    CHECK(fairness_check(inst, a, Fairness::PROPX));
    CHECK_FALSE(fairness_check(inst, a, Fairness::EFX, true));
    CHECK_FALSE(fairness_check(inst, a, Fairness::EQX, true));
  }
}

TEST_CASE("up-to-one and up-to-any relaxations differ") {
  // n = 2, agent 0 holds cells worth 3 and 1 to everybody, agent 1 holds
  // zero-valued cells.
  Instance inst = Instance::zeros(2);
  for (int i = 0; i < 2; ++i) {
    inst.set_value(i, 0, 0, 3);
    inst.set_value(i, 1, 1, 1);
  }
  const Allocation a = Allocation::from_grid({{0, 1}, {1, 0}});
  CHECK_FALSE(fairness_check(inst, a, Fairness::EF));
  CHECK_FALSE(fairness_check(inst, a, Fairness::EF1));  // 0 < 4 - 3
  CHECK_FALSE(fairness_check(inst, a, Fairness::EFX));  // 0 < 4 - 1

  inst.set_value(0, 1, 1, 0);
  inst.set_value(1, 1, 1, 0);
  inst.set_value(0, 0, 0, 2);
  inst.set_value(1, 0, 0, 2);
  // Agent 0 now holds {2, 0}. EF1 removes the 2; EFX removes the 0; weak EFX
  // ignores the zero good and removes the 2.
  CHECK(fairness_check(inst, a, Fairness::EF1));
  CHECK_FALSE(fairness_check(inst, a, Fairness::EFX));
  CHECK(fairness_check(inst, a, Fairness::EFX, true));
  CHECK(fairness_check(inst, a, Fairness::EQ1));
  CHECK_FALSE(fairness_check(inst, a, Fairness::EQX));
  CHECK(fairness_check(inst, a, Fairness::EQX, true));
}

TEST_CASE("empty allocation is vacuously up-to-one fair") {
  const Instance inst = random_instance(3, 5, 3);
  const Allocation empty(3);
  CHECK(fairness_check(inst, empty, Fairness::EF));
  CHECK(fairness_check(inst, empty, Fairness::EF1));
  CHECK(fairness_check(inst, empty, Fairness::EQ));
}

TEST_CASE("fairness names parse") {
  for (const Fairness f : kAllFairness) CHECK(parse_fairness(to_string(f)) == f);
  CHECK_THROWS_AS(parse_fairness("EFY"), InputError);
}

TEST_CASE("non-wastefulness") {
  const Instance inst = example_partial_gap();
  CHECK(efficiency_check(inst, Allocation::from_grid({{0, kEmpty}, {kEmpty, 1}}), Efficiency::NonWasteful));
  CHECK_FALSE(efficiency_check(inst, Allocation::from_grid({{0, 1}, {1, 0}}), Efficiency::NonWasteful));
  CHECK_FALSE(efficiency_check(inst, Allocation(2), Efficiency::NonWasteful));
}

TEST_CASE("Pareto optimality compares within the allocation's class") {
  const Instance inst = example_partial_gap();
  const Allocation best = Allocation::from_grid({{0, kEmpty}, {kEmpty, 1}});
  CHECK(efficiency_check(inst, best, Efficiency::ParetoOptimal));
  CHECK_FALSE(efficiency_check(inst, Allocation(2), Efficiency::ParetoOptimal));
  // Each complete allocation gives utilities (1,0) or (0,1): both optimal
  // among complete ones, but dominated by the partial optimum.
  const Allocation c1 = Allocation::from_grid({{0, 1}, {1, 0}});
  CHECK(efficiency_check(inst, c1, Efficiency::ParetoOptimal));
  CHECK_FALSE(efficiency_check(inst, c1, Efficiency::ParetoOptimal, ParetoScope::Partial));
  CHECK_THROWS_AS(efficiency_check(random_instance(5, 3, 1), Allocation(5), Efficiency::ParetoOptimal),
                  LimitExceeded);
}

TEST_CASE("Pareto search agrees with naive domination over all partial allocations") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = random_instance(2, 3, seed);
    oracle::for_each_allocation(2, true, [&](const oracle::Grid& g) {
      const auto mine = oracle::grid_utilities(inst, g);
      bool dominated = false;
      oracle::for_each_allocation(2, true, [&](const oracle::Grid& h) {
        const auto other = oracle::grid_utilities(inst, h);
        bool geq = true;
        bool strict = false;
        for (int i = 0; i < 2; ++i) {
          geq = geq && other[i] >= mine[i];
          strict = strict || other[i] > mine[i];
        }
        dominated = dominated || (geq && strict);
      });
      CHECK(efficiency_check(inst, oracle::to_allocation(g, 2), Efficiency::ParetoOptimal, ParetoScope::Partial) ==
            !dominated);
    });
  }
}
