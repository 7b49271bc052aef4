#include "lsa/instance.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "latin_state.hpp"
#include "lsa/error.hpp"

namespace lsa {

bool is_matching(std::span<const Cell> cells) {
  for (std::size_t a = 0; a < cells.size(); ++a) {
    for (std::size_t b = a + 1; b < cells.size(); ++b) {
      if (cells[a].item == cells[b].item || cells[a].round == cells[b].round) return false;
    }
  }
  return true;
}

Instance::Instance(int n, std::vector<Value> values) : n_(n), values_(std::move(values)) {
  if (n < 1) throw InputError("instance order must be >= 1");
  const auto expected = static_cast<std::size_t>(n) * n * n;
  if (values_.size() != expected) {
    throw DimensionMismatch("valuation tensor has " + std::to_string(values_.size()) +
                            " entries, expected n^3 = " + std::to_string(expected));
  }
  if (std::any_of(values_.begin(), values_.end(), [](Value v) { return v < 0; })) {
    throw InputError("valuations must be non-negative");
  }
}

Instance Instance::zeros(int n) {
  if (n < 1) throw InputError("instance order must be >= 1");
  return Instance(n, std::vector<Value>(static_cast<std::size_t>(n) * n * n, 0));
}

void Instance::set_value(int agent, int item, int round, Value v) {
  if (v < 0) throw InputError("valuations must be non-negative");
  values_[index(agent, item, round)] = v;
}

Value Instance::total(int agent) const {
  const auto first = values_.begin() + static_cast<std::ptrdiff_t>(index(agent, 0, 0));
  return std::accumulate(first, first + static_cast<std::ptrdiff_t>(n_) * n_, Value{0});
}

Value Instance::bundle_value(int agent, std::span<const Cell> cells) const {
  Value sum = 0;
  for (const Cell& c : cells) sum += value(agent, c.item, c.round);
  return sum;
}

bool Instance::is_binary() const {
  return std::all_of(values_.begin(), values_.end(), [](Value v) { return v == 0 || v == 1; });
}

bool Instance::is_identical() const {
  for (int i = 1; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      for (int k = 0; k < n_; ++k) {
        if (value(i, j, k) != value(0, j, k)) return false;
      }
    }
  }
  return true;
}

Allocation::Allocation(int n) : n_(n), grid_(static_cast<std::size_t>(n) * n, kEmpty) {
  if (n < 1) throw InputError("allocation order must be >= 1");
}

Allocation Allocation::from_grid(const std::vector<std::vector<int>>& grid) {
  const int n = static_cast<int>(grid.size());
  Allocation a(n);
  for (int j = 0; j < n; ++j) {
    if (static_cast<int>(grid[j].size()) != n) {
      throw DimensionMismatch("allocation grid must be n x n");
    }
    for (int k = 0; k < n; ++k) {
      const int agent = grid[j][k];
      if (agent != kEmpty && (agent < 0 || agent >= n)) {
        throw InputError("allocation grid entry out of range");
      }
      a.grid_[j * n + k] = agent;
    }
  }
  return a;
}

void Allocation::assign(int item, int round, int agent) {
  if (agent != kEmpty && (agent < 0 || agent >= n_)) throw InputError("agent index out of range");
  grid_[item * n_ + round] = agent;
}

std::size_t Allocation::size() const {
  return static_cast<std::size_t>(
      std::count_if(grid_.begin(), grid_.end(), [](int a) { return a != kEmpty; }));
}

bool Allocation::is_complete() const { return size() == grid_.size(); }

Bundle Allocation::bundle(int agent) const {
  Bundle cells;
  for (int j = 0; j < n_; ++j) {
    for (int k = 0; k < n_; ++k) {
      if (at(j, k) == agent) cells.push_back({j, k});
    }
  }
  return cells;
}

std::vector<std::vector<int>> Allocation::grid() const {
  std::vector<std::vector<int>> rows(n_, std::vector<int>(n_));
  for (int j = 0; j < n_; ++j) {
    for (int k = 0; k < n_; ++k) rows[j][k] = at(j, k);
  }
  return rows;
}

bool is_feasible(const Allocation& a) {
  const int n = a.n();
  std::vector<char> seen(n);
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int k = 0; k < n; ++k) {
      const int i = a.at(j, k);
      if (i == kEmpty) continue;
      if (i < 0 || i >= n || seen[i]) return false;
      seen[i] = 1;
    }
  }
  for (int k = 0; k < n; ++k) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      const int i = a.at(j, k);
      if (i == kEmpty) continue;
      if (seen[i]) return false;
      seen[i] = 1;
    }
  }
  return true;
}

bool is_superset(const Allocation& super, const Allocation& sub) {
  if (super.n() != sub.n()) return false;
  for (int j = 0; j < sub.n(); ++j) {
    for (int k = 0; k < sub.n(); ++k) {
      if (!sub.empty_at(j, k) && super.at(j, k) != sub.at(j, k)) return false;
    }
  }
  return true;
}

void require_same_order(const Instance& inst, const Allocation& a) {
  if (inst.n() != a.n()) {
    throw DimensionMismatch("instance has n = " + std::to_string(inst.n()) +
                            " but allocation has n = " + std::to_string(a.n()));
  }
}

std::vector<Value> utilities(const Instance& inst, const Allocation& a) {
  require_same_order(inst, a);
  const int n = inst.n();
  std::vector<Value> u(n, 0);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const int i = a.at(j, k);
      if (i != kEmpty) u[i] += inst.value(i, j, k);
    }
  }
  return u;
}

Value utilitarian_welfare(const Instance& inst, const Allocation& a) {
  const auto u = utilities(inst, a);
  return std::accumulate(u.begin(), u.end(), Value{0});
}

Value egalitarian_welfare(const Instance& inst, const Allocation& a) {
  const auto u = utilities(inst, a);
  return *std::min_element(u.begin(), u.end());
}

namespace {

constexpr std::string_view kFairnessNames[] = {"EF",    "EF1", "EFX", "PROP", "PROP1",
                                               "PROPX", "EQ",  "EQ1", "EQX"};

// Statistics of how `viewer` values the cells of one bundle.
struct BundleView {
  Value sum = 0;
  Value max = 0;
  std::optional<Value> min;           // over all cells of the bundle
  std::optional<Value> min_positive;  // over cells the owner values positively
};

BundleView view_bundle(const Instance& inst, int viewer, int owner, const Bundle& cells) {
  BundleView view;
  for (const Cell& c : cells) {
    const Value v = inst.value(viewer, c.item, c.round);
    view.sum += v;
    view.max = std::max(view.max, v);
    view.min = view.min ? std::min(*view.min, v) : v;
    if (inst.value(owner, c.item, c.round) > 0) {
      view.min_positive = view.min_positive ? std::min(*view.min_positive, v) : v;
    }
  }
  return view;
}

bool envy_condition(const Instance& inst, const std::vector<Bundle>& bundles,
                    const std::vector<Value>& u, Fairness notion, bool weak) {
  const int n = inst.n();
  for (int i = 0; i < n; ++i) {
    for (int other = 0; other < n; ++other) {
      if (i == other) continue;
      const BundleView view = view_bundle(inst, i, other, bundles[other]);
      switch (notion) {
        case Fairness::EF:
          if (u[i] < view.sum) return false;
          break;
        case Fairness::EF1:
          if (!bundles[other].empty() && u[i] < view.sum - view.max) return false;
          break;
        default: {
          const auto removable = weak ? view.min_positive : view.min;
          if (removable && u[i] < view.sum - *removable) return false;
          break;
        }
      }
    }
  }
  return true;
}

bool proportionality_condition(const Instance& inst, const std::vector<Bundle>& bundles,
                               const std::vector<Value>& u, Fairness notion, bool weak) {
  const int n = inst.n();
  for (int i = 0; i < n; ++i) {
    const Value share_times_n = inst.total(i);
    const Value mine_times_n = u[i] * n;
    if (notion == Fairness::PROP) {
      if (mine_times_n < share_times_n) return false;
      continue;
    }
    // Goods outside A_i.
    std::vector<char> mine(static_cast<std::size_t>(n) * n, 0);
    for (const Cell& c : bundles[i]) mine[c.item * n + c.round] = 1;
    std::optional<Value> best;
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (mine[j * n + k]) continue;
        const Value v = inst.value(i, j, k);
        if (notion == Fairness::PROP1) {
          best = best ? std::max(*best, v) : v;
        } else if (!weak || v > 0) {
          best = best ? std::min(*best, v) : v;
        }
      }
    }
    if (best && mine_times_n < share_times_n - n * *best) return false;
  }
  return true;
}

bool equity_condition(const Instance& inst, const std::vector<Bundle>& bundles,
                      const std::vector<Value>& u, Fairness notion, bool weak) {
  const int n = inst.n();
  for (int i = 0; i < n; ++i) {
    for (int other = 0; other < n; ++other) {
      if (i == other) continue;
      if (notion == Fairness::EQ) {
        if (u[i] != u[other]) return false;
        continue;
      }
      const BundleView own = view_bundle(inst, other, other, bundles[other]);
      if (notion == Fairness::EQ1) {
        if (!bundles[other].empty() && u[i] < u[other] - own.max) return false;
      } else {
        const auto removable = weak ? own.min_positive : own.min;
        if (removable && u[i] < u[other] - *removable) return false;
      }
    }
  }
  return true;
}

}  // namespace

Fairness parse_fairness(std::string_view name) {
  for (std::size_t i = 0; i < std::size(kFairnessNames); ++i) {
    if (kFairnessNames[i] == name) return kAllFairness[i];
  }
  throw InputError("unknown fairness notion '" + std::string(name) + "'");
}

std::string_view to_string(Fairness notion) {
  return kFairnessNames[static_cast<std::size_t>(notion)];
}

bool fairness_check(const Instance& inst, const Allocation& a, Fairness notion, bool weak) {
  require_same_order(inst, a);
  const int n = inst.n();
  std::vector<Bundle> bundles(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (!a.empty_at(j, k)) bundles[a.at(j, k)].push_back({j, k});
    }
  }
  const auto u = utilities(inst, a);
  switch (notion) {
    case Fairness::EF:
    case Fairness::EF1:
    case Fairness::EFX:
      return envy_condition(inst, bundles, u, notion, weak);
    case Fairness::PROP:
    case Fairness::PROP1:
    case Fairness::PROPX:
      return proportionality_condition(inst, bundles, u, notion, weak);
    case Fairness::EQ:
    case Fairness::EQ1:
    case Fairness::EQX:
      return equity_condition(inst, bundles, u, notion, weak);
  }
  throw InputError("unknown fairness notion");
}

Efficiency parse_efficiency(std::string_view name) {
  if (name == "non_wasteful" || name == "non-wasteful") return Efficiency::NonWasteful;
  if (name == "pareto_optimal" || name == "pareto-optimal") return Efficiency::ParetoOptimal;
  throw InputError("unknown efficiency notion '" + std::string(name) + "'");
}

namespace {

bool non_wasteful(const Instance& inst, const Allocation& a) {
  const int n = inst.n();
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      bool wanted = false;
      for (int i = 0; i < n && !wanted; ++i) wanted = inst.value(i, j, k) > 0;
      if (!wanted) continue;
      const int holder = a.at(j, k);
      if (holder == kEmpty || inst.value(holder, j, k) == 0) return false;
    }
  }
  return true;
}

class ParetoSearch {
 public:
  ParetoSearch(const Instance& inst, std::vector<Value> target, bool complete)
      : inst_(inst),
        n_(inst.n()),
        target_(std::move(target)),
        target_sum_(std::accumulate(target_.begin(), target_.end(), Value{0})),
        complete_(complete),
        state_(inst.n()),
        current_(inst.n(), 0) {}

  std::optional<Allocation> run() {
    if (search(0)) return state_.grid;
    return std::nullopt;
  }

 private:
  bool dominates() const {
    Value sum = 0;
    for (int i = 0; i < n_; ++i) {
      if (current_[i] < target_[i]) return false;
      sum += current_[i];
    }
    return sum > target_sum_;
  }

  bool search(int cell) {
    const int cells = n_ * n_;
    if (!complete_ && dominates()) return true;
    if (cell == cells) return complete_ && dominates();
    for (int i = 0; i < n_; ++i) {
      if (current_[i] + detail::remaining_agent_bound(inst_, state_, i, cell) < target_[i]) {
        return false;
      }
    }
    const int j = cell / n_;
    const int k = cell % n_;
    const std::uint64_t free = state_.free_agents(j, k);
    for (int i = 0; i < n_; ++i) {
      if (!((free >> i) & 1U)) continue;
      const Value v = inst_.value(i, j, k);
      if (!complete_ && v == 0) continue;
      state_.place(j, k, i);
      current_[i] += v;
      const bool found = search(cell + 1);
      current_[i] -= v;
      if (found) return true;
      state_.remove(j, k);
    }
    return !complete_ && search(cell + 1);
  }

  const Instance& inst_;
  int n_;
  std::vector<Value> target_;
  Value target_sum_;
  bool complete_;
  detail::LatinState state_;
  std::vector<Value> current_;
};

}  // namespace

std::optional<Allocation> find_pareto_improvement(const Instance& inst, const Allocation& a,
                                                  bool complete_class) {
  require_same_order(inst, a);
  return ParetoSearch(inst, utilities(inst, a), complete_class).run();
}

bool efficiency_check(const Instance& inst, const Allocation& a, Efficiency notion,
                      ParetoScope scope, int pareto_limit) {
  require_same_order(inst, a);
  if (notion == Efficiency::NonWasteful) return non_wasteful(inst, a);
  if (inst.n() > pareto_limit) {
    throw LimitExceeded("pareto_optimal check is limited to n <= " + std::to_string(pareto_limit));
  }
  const bool complete = scope == ParetoScope::Complete ||
                        (scope == ParetoScope::SameAsInput && a.is_complete());
  return !find_pareto_improvement(inst, a, complete).has_value();
}

}  // namespace lsa
