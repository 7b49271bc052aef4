#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <numeric>

#include "lsa/error.hpp"
#include "lsa/extension.hpp"
#include "lsa/generators.hpp"
#include "lsa/rng.hpp"

using namespace lsa;

namespace {

// Random feasible filling of the leading m x r rectangle; each cell stays
// empty with probability `holes`.
Allocation random_rectangle(int n, int m, int r, double holes, Rng& rng) {
  Allocation a(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < r; ++k) {
      if (rng.uniform() < holes) continue;
      // Random agent not yet in this row or column.
      std::vector<int> options;
      for (int i = 0; i < n; ++i) {
        bool clash = false;
        for (int k2 = 0; k2 < r && !clash; ++k2) clash = a.at(j, k2) == i;
        for (int j2 = 0; j2 < m && !clash; ++j2) clash = a.at(j2, k) == i;
        if (!clash) options.push_back(i);
      }
      if (!options.empty()) a.assign(j, k, options[rng.below(options.size())]);
    }
  }
  return a;
}

Allocation shuffle_labels(const Allocation& a, Rng& rng) {
  const int n = a.n();
  std::vector<int> items(n);
  std::vector<int> rounds(n);
  std::iota(items.begin(), items.end(), 0);
  std::iota(rounds.begin(), rounds.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(items[i], items[rng.below(i + 1)]);
    std::swap(rounds[i], rounds[rng.below(i + 1)]);
  }
  return relabel(a, items, rounds);
}

}  // namespace

TEST_CASE("empty allocation extends to a Latin square") {
  for (int n = 1; n <= 9; ++n) {
    const Allocation full = extend(Allocation(n));
    CHECK(full.is_complete());
    CHECK(is_feasible(full));
  }
}

TEST_CASE("order two with one prefilled cell has a unique completion") {
  const Allocation a = Allocation::from_grid({{0, kEmpty}, {kEmpty, kEmpty}});
  CHECK(extend(a) == Allocation::from_grid({{0, 1}, {1, 0}}));
}

TEST_CASE("random rectangles extend to complete supersets") {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(9));
    const int m = static_cast<int>(rng.below(n + 1));
    const int r = static_cast<int>(rng.below(n - m + 1));
    Allocation a = random_rectangle(n, m, r, trial % 3 == 0 ? 0.3 : 0.0, rng);
    if (trial % 2) a = shuffle_labels(a, rng);
    const Allocation full = extend(a);
    CHECK(full.is_complete());
    CHECK(is_feasible(full));
    CHECK(is_superset(full, a));
  }
}

TEST_CASE("precondition violations name the occupied items and rounds") {
  // n = 3 with items {1,2} and rounds {1,2} occupied: 2 + 2 > 3.
  const Allocation a = Allocation::from_grid({{0, 1, kEmpty}, {1, 0, kEmpty}, {kEmpty, kEmpty, kEmpty}});
  try {
    extend(a);
    FAIL("expected a precondition error");
  } catch (const ExtensionPreconditionError& e) {
    CHECK(e.items == std::vector<int>{0, 1});
    CHECK(e.rounds == std::vector<int>{0, 1});
    CHECK(std::string(e.what()).find("{1,2}") != std::string::npos);
  }
  CHECK_THROWS_AS(extend(Allocation::from_grid({{0, 0}, {kEmpty, kEmpty}})), InputError);
}

TEST_CASE("rectangularize moves occupied rows and columns first") {
  const Allocation rect = Allocation::from_grid({{0, kEmpty, kEmpty}, {kEmpty, kEmpty, kEmpty}, {kEmpty, kEmpty, kEmpty}});
  const auto same = rectangularize(rect);
  CHECK(same.allocation == rect);
  CHECK(same.item_order == std::vector<int>{0, 1, 2});
  CHECK(same.round_order == std::vector<int>{0, 1, 2});

  // Rows {2,3} and columns {1,3} (1-based) occupied.
  const Allocation a = Allocation::from_grid({{kEmpty, kEmpty, kEmpty}, {0, kEmpty, 1}, {1, kEmpty, kEmpty}});
  const auto r = rectangularize(a);
  CHECK(r.item_order == std::vector<int>{1, 2, 0});
  CHECK(r.round_order == std::vector<int>{0, 2, 1});
  CHECK(r.allocation == Allocation::from_grid({{0, 1, kEmpty}, {1, kEmpty, kEmpty}, {kEmpty, kEmpty, kEmpty}}));
  CHECK(unrelabel(r.allocation, r.item_order, r.round_order) == a);
}

TEST_CASE("relabeling the instance preserves welfare") {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = random_instance(4, 9, trial);
    const Allocation a = extend(random_rectangle(4, 2, 2, 0.2, rng));
    const Allocation shuffled = shuffle_labels(a, rng);
    const auto r = rectangularize(shuffled);
    CHECK(unrelabel(r.allocation, r.item_order, r.round_order) == shuffled);
    const Instance rinst = relabel(inst, r.item_order, r.round_order);
    CHECK(utilitarian_welfare(rinst, r.allocation) == utilitarian_welfare(inst, shuffled));
  }
}

TEST_CASE("order 200 extension is fast") {
  Rng rng(1);
  const Allocation a = random_rectangle(200, 100, 100, 0.0, rng);
  const auto start = std::chrono::steady_clock::now();
  const Allocation full = extend(a);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(full.is_complete());
  CHECK(is_feasible(full));
  CHECK(secs < 5.0);
}
