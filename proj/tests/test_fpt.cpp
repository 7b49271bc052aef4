#include <doctest.h>

#include <cmath>

#include "lsa/error.hpp"
#include "lsa/exact.hpp"
#include "lsa/fpt.hpp"
#include "lsa/generators.hpp"
#include "lsa/rng.hpp"
#include "oracles.hpp"

using namespace lsa;

TEST_CASE("exact search on the partial-gap example") {
  const Instance inst = example_partial_gap();
  CHECK(solve_exact_enumeration(inst, Objective::Umax, Mode::Partial).value == 2);
  CHECK(solve_exact_enumeration(inst, Objective::Emax, Mode::Partial).value == 1);
  CHECK(solve_exact_enumeration(inst, Objective::Umax, Mode::Complete).value == 1);
  CHECK(solve_exact_enumeration(inst, Objective::Emax, Mode::Complete).value == 0);
}

TEST_CASE("exact search on all-zero instances") {
  for (int n = 1; n <= 4; ++n) {
    const Instance inst = Instance::zeros(n);
    for (const auto obj : {Objective::Umax, Objective::Emax}) {
      for (const auto mode : {Mode::Partial, Mode::Complete}) {
        const auto r = solve_exact_enumeration(inst, obj, mode);
        CHECK(r.value == 0);
        CHECK(is_feasible(r.allocation));
        CHECK(r.allocation.is_complete() == (mode == Mode::Complete));
      }
    }
  }
}

TEST_CASE("exact search matches the naive enumerator") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const int n = 2 + static_cast<int>(seed % 2);
    const Instance inst = random_instance(n, seed % 3 == 0 ? 1 : 6, 700 + seed);
    for (const bool emax : {false, true}) {
      for (const bool partial : {true, false}) {
        const auto obj = emax ? Objective::Emax : Objective::Umax;
        const auto mode = partial ? Mode::Partial : Mode::Complete;
        const auto r = solve_exact_enumeration(inst, obj, mode);
        CHECK(r.value == oracle::naive_optimum(inst, emax, partial));
        CHECK(objective_value(inst, r.allocation, obj) == r.value);
        ExactOptions plain;
        plain.pruning = false;
        CHECK(solve_exact_enumeration(inst, obj, mode, plain).value == r.value);
      }
    }
  }
}

TEST_CASE("parallel exact search returns the same value") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Instance inst = random_instance(4, 9, 40 + seed);
    ExactOptions par;
    par.threads = 4;
    for (const auto obj : {Objective::Umax, Objective::Emax}) {
      const auto serial = solve_exact_enumeration(inst, obj, Mode::Complete);
      const auto parallel = solve_exact_enumeration(inst, obj, Mode::Complete, par);
      CHECK(serial.value == parallel.value);
      CHECK(objective_value(inst, parallel.allocation, obj) == parallel.value);
    }
  }
}

TEST_CASE("exact search limits") {
  CHECK_THROWS_AS(solve_exact_enumeration(Instance::zeros(5), Objective::Umax, Mode::Partial), LimitExceeded);
  CHECK_THROWS_AS(solve_exact_enumeration(Instance::zeros(6), Objective::Umax, Mode::Complete), LimitExceeded);
  CHECK_THROWS_AS(parse_objective("max"), InputError);
  CHECK_THROWS_AS(parse_mode("full"), InputError);
}

TEST_CASE("trial counts follow e^s ln(1/delta)") {
  CHECK(coloring_trials(1, std::exp(-1.0)) == 3);
  CHECK(coloring_trials(2, 0.05) == static_cast<std::uint64_t>(std::ceil(std::exp(2.0) * std::log(20.0))));
  CHECK(pair_failure_bound(6, 0.06) == doctest::Approx(0.01));
  CHECK_THROWS_AS(coloring_trials(1, 0.0), InputError);
}

TEST_CASE("scheme allocations are feasible and keep positive cells only") {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(3));
    const Instance inst = random_sparse(n, 6, 4, trial);
    ColorScheme scheme;
    scheme.s = 1 + static_cast<int>(rng.below(3));
    scheme.t = 1 + static_cast<int>(rng.below(scheme.s));
    scheme.chi.resize(n * n);
    for (int& c : scheme.chi) c = static_cast<int>(rng.below(scheme.s));
    scheme.psi.resize(scheme.s);
    for (int& p : scheme.psi) p = static_cast<int>(rng.below(scheme.t));
    Value v = 0;
    const Allocation a = best_for_scheme(inst, scheme, &v);
    CHECK(is_feasible(a));
    CHECK(utilitarian_welfare(inst, a) == v);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!a.empty_at(j, k)) CHECK(inst.value(a.at(j, k), j, k) > 0);
  }
}

TEST_CASE("single positive cell per agent") {
  Instance inst = Instance::zeros(6);
  inst.set_value(0, 0, 1, 1);
  inst.set_value(1, 2, 3, 1);
  const auto r = solve_fpt_value(inst, Mode::Partial);
  CHECK(r.value == 2);
  CHECK_FALSE(r.enumerated);
  CHECK(r.deterministic);
  CHECK(r.s_reached == 3);
}

TEST_CASE("partial-gap example takes the enumeration branch") {
  const auto r = solve_fpt_value(example_partial_gap(), Mode::Partial);
  CHECK(r.value == 2);
  CHECK(r.enumerated);
}

TEST_CASE("sparse instances match the exact optimum and never exceed it") {
  ExactOptions wide;
  wide.limit_partial = 6;
  wide.limit_complete = 6;
  int matches = 0, runs = 0;
  for (std::uint64_t seed = 0; runs < 30; ++seed) {
    const int n = 4 + static_cast<int>(seed % 3);
    const Instance inst = random_sparse(n, 1 + static_cast<int>(seed % 3), 2, 900 + seed);
    const Value exact = solve_exact_enumeration(inst, Objective::Umax, Mode::Partial, wide).value;
    if (2 * exact >= n) continue;
    ++runs;
    FptOptions options;
    options.seed = seed;
    options.exact = wide;
    const auto r = solve_fpt_value(inst, Mode::Partial, options);
    CHECK(r.value <= exact);
    CHECK(is_feasible(r.allocation));
    if (r.value == exact) ++matches;

    const auto c = solve_fpt_value(inst, Mode::Complete, options);
    CHECK(c.allocation.is_complete());
    CHECK(is_feasible(c.allocation));
    CHECK(c.value >= r.value);
  }
  CHECK(matches >= 27);
}

TEST_CASE("Monte Carlo colorings on larger supports") {
  // Enough positive cells that exhaustive colorings exceed the budget.
  ExactOptions wide;
  wide.limit_partial = 6;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Instance inst = Instance::zeros(6);
    Rng rng(seed);
    for (int e = 0; e < 14; ++e) {
      inst.set_value(0, static_cast<int>(rng.below(6)), static_cast<int>(rng.below(6)), 1);
    }
    FptOptions options;
    options.seed = seed;
    options.exact = wide;
    options.coloring_budget = 16;
    const auto r = solve_fpt_value(inst, Mode::Partial, options);
    const Value exact = solve_exact_enumeration(inst, Objective::Umax, Mode::Partial, wide).value;
    CHECK(r.value <= exact);
    if (!r.enumerated) CHECK_FALSE(r.deterministic);
  }
}
