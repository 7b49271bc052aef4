#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lsa {

using Value = std::int64_t;

// Marker for an unassigned cell. Agents are 0-based internally.
inline constexpr int kEmpty = -1;

struct Cell {
  int item = 0;
  int round = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// A single agent's bundle: cells forming an item-round matching.
using Bundle = std::vector<Cell>;

bool is_matching(std::span<const Cell> cells);

// Valuation tensor v[agent][item][round] of a Latin square allocation problem
// of order n.
class Instance {
 public:
  // `values` is agent-major: index (agent * n + item) * n + round.
  Instance(int n, std::vector<Value> values);

  static Instance zeros(int n);

  int n() const { return n_; }

  Value value(int agent, int item, int round) const {
    return values_[index(agent, item, round)];
  }
  void set_value(int agent, int item, int round, Value v);

  std::span<const Value> values() const { return values_; }

  // v_i(M x R).
  Value total(int agent) const;
  Value bundle_value(int agent, std::span<const Cell> cells) const;

  bool is_binary() const;
  bool is_identical() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::size_t index(int agent, int item, int round) const {
    return (static_cast<std::size_t>(agent) * n_ + item) * n_ + round;
  }

  int n_;
  std::vector<Value> values_;
};

// An n x n grid over (item, round) holding an agent index or kEmpty. The grid
// itself enforces "one agent per cell"; the remaining Latin conditions are
// checked by is_feasible().
class Allocation {
 public:
  explicit Allocation(int n);

  // Grid indexed [item][round] with 0-based agents or kEmpty.
  static Allocation from_grid(const std::vector<std::vector<int>>& grid);

  int n() const { return n_; }
  int at(int item, int round) const { return grid_[item * n_ + round]; }
  bool empty_at(int item, int round) const { return at(item, round) == kEmpty; }

  void assign(int item, int round, int agent);
  void clear(int item, int round) { grid_[item * n_ + round] = kEmpty; }

  std::size_t size() const;
  bool is_complete() const;
  Bundle bundle(int agent) const;
  std::vector<std::vector<int>> grid() const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  int n_;
  std::vector<int> grid_;
};

// Conditions (i)-(iii): no agent twice in an item row, no agent twice in a
// round column (one agent per cell holds by representation), entries in range.
bool is_feasible(const Allocation& a);

// Every assigned cell of `sub` holds the same agent in `super`.
bool is_superset(const Allocation& super, const Allocation& sub);

// v_i(A_i) for every agent.
std::vector<Value> utilities(const Instance& inst, const Allocation& a);
Value utilitarian_welfare(const Instance& inst, const Allocation& a);
Value egalitarian_welfare(const Instance& inst, const Allocation& a);

enum class Fairness { EF, EF1, EFX, PROP, PROP1, PROPX, EQ, EQ1, EQX };

inline constexpr Fairness kAllFairness[] = {
    Fairness::EF,   Fairness::EF1,   Fairness::EFX, Fairness::PROP, Fairness::PROP1,
    Fairness::PROPX, Fairness::EQ,   Fairness::EQ1, Fairness::EQX};

Fairness parse_fairness(std::string_view name);
std::string_view to_string(Fairness notion);

// Evaluates the quantified definition literally. With `weak`, EFX/EQX/PROPX
// only quantify over goods of positive value; other notions ignore the flag.
bool fairness_check(const Instance& inst, const Allocation& a, Fairness notion,
                    bool weak = false);

enum class Efficiency { NonWasteful, ParetoOptimal };

// Comparison class for Pareto domination.
enum class ParetoScope { SameAsInput, Partial, Complete };

Efficiency parse_efficiency(std::string_view name);

inline constexpr int kParetoLimit = 4;

// Pareto optimality searches for a dominating allocation and is limited to
// n <= pareto_limit.
bool efficiency_check(const Instance& inst, const Allocation& a, Efficiency notion,
                      ParetoScope scope = ParetoScope::SameAsInput,
                      int pareto_limit = kParetoLimit);

// A feasible allocation in the given class that Pareto-dominates `a`, if any.
std::optional<Allocation> find_pareto_improvement(const Instance& inst,
                                                  const Allocation& a,
                                                  bool complete_class);

void require_same_order(const Instance& inst, const Allocation& a);

}  // namespace lsa
