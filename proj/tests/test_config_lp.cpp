#include <doctest.h>

#include <cmath>
#include <functional>
#include <numeric>

#include "lsa/config_lp.hpp"
#include "lsa/error.hpp"
#include "lsa/generators.hpp"
#include "oracles.hpp"

using namespace lsa;

namespace {

// Every item-round matching of an n x n grid, including the empty one.
std::vector<Bundle> all_matchings(int n) {
  std::vector<Bundle> out;
  Bundle current;
  std::vector<char> used_round(n, 0);
  std::function<void(int)> rec = [&](int j) {
    if (j == n) {
      out.push_back(current);
      return;
    }
    rec(j + 1);
    for (int k = 0; k < n; ++k) {
      if (used_round[k]) continue;
      used_round[k] = 1;
      current.push_back({j, k});
      rec(j + 1);
      current.pop_back();
      used_round[k] = 0;
    }
  };
  rec(0);
  return out;
}

// Certifies optimality through primal feasibility, dual feasibility against
// every bundle, and equal objectives.
void check_certificate(const Instance& inst, const LpResult& r) {
  const int n = inst.n();
  const double tol = 1e-6;
  std::vector<double> agent_sum(n, 0.0);
  std::vector<double> cell_sum(static_cast<std::size_t>(n) * n, 0.0);
  double primal = 0.0;
  for (const auto& col : r.solution.columns) {
    CHECK(col.weight > 0.0);
    CHECK(is_matching(col.bundle));
    CHECK(col.value == inst.bundle_value(col.agent, col.bundle));
    agent_sum[col.agent] += col.weight;
    for (const Cell& c : col.bundle) cell_sum[c.item * n + c.round] += col.weight;
    primal += col.weight * static_cast<double>(col.value);
  }
  for (const double s : agent_sum) CHECK(s == doctest::Approx(1.0).epsilon(tol));
  for (const double s : cell_sum) CHECK(s <= 1.0 + tol);
  CHECK(primal == doctest::Approx(r.solution.objective).epsilon(tol));

  double dual = 0.0;
  for (const double p : r.duals.p) dual += p;
  for (const double q : r.duals.q) {
    CHECK(q >= -tol);
    dual += q;
  }
  CHECK(dual == doctest::Approx(r.solution.objective).epsilon(tol));
  for (int i = 0; i < n; ++i) {
    for (const Bundle& s : all_matchings(n)) {
      double lhs = r.duals.p[i];
      for (const Cell& c : s) lhs += r.duals.cell(n, c.item, c.round);
      CHECK(lhs >= static_cast<double>(inst.bundle_value(i, s)) - tol);
    }
  }
}

}  // namespace

TEST_CASE("matching enumeration sizes") {
  CHECK(all_matchings(2).size() == 7);
  CHECK(all_matchings(3).size() == 34);
}

TEST_CASE("LP optimum is certified by its duals") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    const Instance inst = random_instance(n, 9, seed);
    const LpResult r = solve_configuration_lp(inst);
    check_certificate(inst, r);
  }
}

TEST_CASE("LP bound dominates the exact partial optimum") {
  for (std::uint64_t seed = 100; seed < 115; ++seed) {
    const Instance inst = random_instance(2 + static_cast<int>(seed % 2), 5, seed);
    const double bound = solve_configuration_lp(inst).solution.objective;
    CHECK(bound >= static_cast<double>(oracle::naive_optimum(inst, false, true)) - 1e-6);
  }
}

TEST_CASE("LP on small fixed instances") {
  const auto r = solve_configuration_lp(example_partial_gap());
  CHECK(r.solution.objective == doctest::Approx(2.0));
  CHECK(solve_configuration_lp(Instance::zeros(3)).solution.objective == doctest::Approx(0.0));
  // All-ones instance: every cell can be filled, bound n^2.
  Instance ones = Instance::zeros(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) ones.set_value(i, j, k, 1);
  CHECK(solve_configuration_lp(ones).solution.objective == doctest::Approx(9.0));
}

TEST_CASE("pricing returns the best reduced-cost matching") {
  const Instance inst = random_instance(3, 9, 42);
  DualPrices d;
  d.p = {1.0, 2.0, 0.5};
  d.q.assign(9, 0.0);
  for (int c = 0; c < 9; ++c) d.q[c] = 0.5 * (c % 4);
  for (int i = 0; i < 3; ++i) {
    double best = 0.0;
    for (const Bundle& s : all_matchings(3)) {
      double rc = 0.0;
      for (const Cell& c : s) rc += static_cast<double>(inst.value(i, c.item, c.round)) - d.cell(3, c.item, c.round);
      best = std::max(best, rc);
    }
    CHECK(price(inst, i, d).reduced_cost == doctest::Approx(best - d.p[i]));
  }
}

TEST_CASE("iteration cap reports both bounds") {
  const Instance inst = random_instance(4, 9, 9);
  LpOptions options;
  options.max_rounds = 1;
  try {
    solve_configuration_lp(inst, options);
    FAIL("expected the iteration cap to trigger");
  } catch (const IterationLimitExceeded& e) {
    CHECK(e.lower_bound <= e.upper_bound + 1e-9);
    CHECK(e.upper_bound >= solve_configuration_lp(inst).solution.objective - 1e-6);
  }
}

TEST_CASE("marginals sum the columns containing each cell") {
  const Instance inst = random_instance(3, 9, 4);
  const auto r = solve_configuration_lp(inst);
  const auto x = marginals(r.solution, 3);
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      double total = 0.0;
      for (int i = 0; i < 3; ++i) {
        const double v = x[(i * 3 + j) * 3 + k];
        CHECK(v >= -1e-9);
        total += v;
      }
      CHECK(total <= 1.0 + 1e-6);
    }
  }
}
