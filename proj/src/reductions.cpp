#include "lsa/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "lsa/error.hpp"
#include "lsa/extension.hpp"

namespace lsa {

Instance from_partial_latin_square(const Allocation& p) {
  if (!is_feasible(p)) throw InputError("partial Latin square is infeasible");
  const int n = p.n();
  Instance inst = Instance::zeros(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (p.empty_at(j, k) || p.at(j, k) == i) inst.set_value(i, j, k, 1);
      }
    }
  }
  return inst;
}

// --- 3SAT -------------------------------------------------------------------

namespace {

// Clause indices of the two occurrences of literal +var or -var (var 1-based).
std::array<int, 2> occurrences(const Formula3SAT& f, int literal) {
  std::array<int, 2> at{-1, -1};
  int count = 0;
  for (int p = 0; p < static_cast<int>(f.clauses.size()); ++p) {
    for (const int lit : f.clauses[p]) {
      if (lit != literal) continue;
      if (count < 2) at[count] = p;
      ++count;
    }
  }
  if (count != 2) {
    throw InputError("literal " + std::to_string(literal) + " occurs " + std::to_string(count) +
                     " times, expected exactly 2");
  }
  if (at[0] == at[1]) {
    throw InputError("literal " + std::to_string(literal) + " occurs twice in one clause");
  }
  return at;
}

}  // namespace

void validate(const Formula3SAT& f) {
  if (f.num_vars < 1) throw InputError("formula needs at least one variable");
  if (3 * static_cast<long long>(f.clauses.size()) != 4LL * f.num_vars) {
    throw InputError("4-occurrence formula needs 3 * clauses = 4 * variables");
  }
  for (const auto& clause : f.clauses) {
    for (const int lit : clause) {
      if (lit == 0 || std::abs(lit) > f.num_vars) {
        throw InputError("literal " + std::to_string(lit) + " out of range");
      }
    }
  }
  for (int k = 1; k <= f.num_vars; ++k) {
    occurrences(f, k);
    occurrences(f, -k);
  }
}

bool satisfies(const Formula3SAT& f, const std::vector<bool>& truth) {
  if (static_cast<int>(truth.size()) != f.num_vars) {
    throw DimensionMismatch("truth assignment has wrong length");
  }
  return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& clause) {
    return std::any_of(clause.begin(), clause.end(), [&](int lit) {
      return truth[std::abs(lit) - 1] == (lit > 0);
    });
  });
}

Cell Sat3Layout::block_cell(int k, int v) const {
  switch (v) {
    case 1: return {2 * k, 2 * k};
    case 2: return {2 * k, 2 * k + 1};
    case 3: return {2 * k + 1, 2 * k + 1};
    case 4: return {2 * k + 1, 2 * k};
    default: throw InputError("transfer agent index must be in 1..4");
  }
}

Cell Sat3Layout::top_cell(int k, int v) const {
  if (v < 1 || v > 4) throw InputError("transfer agent index must be in 1..4");
  if (k > 0) return {0, 4 * k + v - 1};
  static constexpr Cell first[4] = {{1, 2}, {1, 3}, {0, 2}, {0, 3}};
  return first[v - 1];
}

Sat3Layout layout(const Formula3SAT& f) {
  validate(f);
  Sat3Layout l;
  l.lambda = f.num_vars;
  l.mu = static_cast<int>(f.clauses.size());
  l.n = l.mu + 5 * l.lambda;
  return l;
}

Cell bottom_cell(const Formula3SAT& f, int k, int v) {
  const int lambda = f.num_vars;
  const bool positive = v == 1 || v == 3;
  const auto at = occurrences(f, positive ? k + 1 : -(k + 1));
  switch (v) {
    case 1: return {2 * lambda + at[0], 2 * k};
    case 2: return {2 * lambda + at[0], 2 * k + 1};
    case 3: return {2 * lambda + at[1], 2 * k + 1};
    case 4: return {2 * lambda + at[1], 2 * k};
    default: throw InputError("transfer agent index must be in 1..4");
  }
}

Instance from_3sat(const Formula3SAT& f, Variant variant) {
  const Sat3Layout l = layout(f);
  const int n = variant == Variant::Partial ? l.n : 2 * l.n;
  Instance inst = Instance::zeros(n);
  auto set = [&](int agent, Cell c) { inst.set_value(agent, c.item, c.round, 1); };
  for (int k = 0; k < l.lambda; ++k) {
    for (int v = 1; v <= 4; ++v) {
      set(l.variable_agent(k), l.block_cell(k, v));
      set(l.transfer_agent(k, v), l.block_cell(k, v));
      set(l.transfer_agent(k, v), bottom_cell(f, k, v));
      set(l.transfer_agent(k, v), l.top_cell(k, v));
    }
  }
  for (int p = 0; p < l.mu; ++p) {
    for (const int lit : f.clauses[p]) {
      const int k = std::abs(lit) - 1;
      for (const int v : lit > 0 ? std::array{1, 3} : std::array{2, 4}) {
        const Cell c = bottom_cell(f, k, v);
        if (c.item == l.bottom_row(p)) set(l.clause_agent(p), c);
      }
    }
    set(l.clause_agent(p), l.clause_top_cell(p));
  }
  for (int d = l.n; d < n; ++d) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < n; ++k) inst.set_value(d, j, k, 1);
    }
  }
  return inst;
}

Allocation assignment_to_allocation(const Formula3SAT& f, const std::vector<bool>& truth,
                                    Variant variant) {
  const Sat3Layout l = layout(f);
  if (!satisfies(f, truth)) throw InputError("truth assignment does not satisfy the formula");
  Allocation a(l.n);
  auto give = [&](int agent, Cell c) {
    if (!a.empty_at(c.item, c.round)) throw InternalError("3SAT witness assigns a cell twice");
    a.assign(c.item, c.round, agent);
  };
  for (int k = 0; k < l.lambda; ++k) {
    for (int v = 1; v <= 4; ++v) give(l.transfer_agent(k, v), l.top_cell(k, v));
    // True: x_k takes the off-diagonal pair, t^1 and t^3 the diagonal, t^2
    // and t^4 their bottom cells. False: the mirror image.
    const bool value = truth[k];
    give(l.variable_agent(k), l.block_cell(k, value ? 2 : 1));
    give(l.variable_agent(k), l.block_cell(k, value ? 4 : 3));
    for (int v = 1; v <= 4; ++v) {
      const bool keeps_block = (v == 1 || v == 3) == value;
      give(l.transfer_agent(k, v), keeps_block ? l.block_cell(k, v) : bottom_cell(f, k, v));
    }
  }
  for (int p = 0; p < l.mu; ++p) {
    give(l.clause_agent(p), l.clause_top_cell(p));
    int chosen = 0;
    for (const int lit : f.clauses[p]) {
      if (truth[std::abs(lit) - 1] != (lit > 0)) continue;
      if (chosen == 0 || std::abs(lit) < std::abs(chosen)) chosen = lit;
    }
    const int k = std::abs(chosen) - 1;
    // The true literal's transfer agents sit on their block, so the bottom
    // cell in this clause row is free.
    for (const int v : chosen > 0 ? std::array{1, 3} : std::array{2, 4}) {
      const Cell c = bottom_cell(f, k, v);
      if (c.item == l.bottom_row(p)) give(l.clause_agent(p), c);
    }
  }
  if (!is_feasible(a)) throw InternalError("3SAT witness is infeasible");
  if (variant == Variant::Partial) return a;
  Allocation wide(2 * l.n);
  for (int j = 0; j < l.n; ++j) {
    for (int k = 0; k < l.n; ++k) {
      if (!a.empty_at(j, k)) wide.assign(j, k, a.at(j, k));
    }
  }
  return extend(wide);
}

std::vector<bool> allocation_to_assignment(const Formula3SAT& f, const Allocation& a) {
  const Sat3Layout l = layout(f);
  if (a.n() < l.n) throw DimensionMismatch("allocation is smaller than the construction");
  std::vector<bool> truth(l.lambda);
  for (int k = 0; k < l.lambda; ++k) {
    const int x = l.variable_agent(k);
    truth[k] = a.at(2 * k, 2 * k + 1) == x && a.at(2 * k + 1, 2 * k) == x;
  }
  return truth;
}

// --- max-min ----------------------------------------------------------------

void validate(const MaxMinInstance& mm) {
  if (mm.num_agents < 1) throw InputError("max-min instance needs at least one agent");
  if (mm.num_items < mm.num_agents) throw InputError("max-min instance needs at least as many items as agents");
  if (static_cast<int>(mm.utility.size()) != mm.num_agents) {
    throw DimensionMismatch("utility matrix needs one row per agent");
  }
  for (const auto& row : mm.utility) {
    if (static_cast<int>(row.size()) != mm.num_items) throw DimensionMismatch("utility row has wrong length");
    if (std::any_of(row.begin(), row.end(), [](Value u) { return u < 0; })) {
      throw InputError("utilities must be non-negative");
    }
  }
}

namespace {

void validate_owner(const MaxMinInstance& mm, const std::vector<int>& owner) {
  if (static_cast<int>(owner.size()) != mm.num_items) throw DimensionMismatch("partition must cover every item");
  for (const int i : owner) {
    if (i < 0 || i >= mm.num_agents) throw InputError("partition names an unknown agent");
  }
}

}  // namespace

Value min_utility(const MaxMinInstance& mm, const std::vector<int>& owner) {
  validate_owner(mm, owner);
  std::vector<Value> u(mm.num_agents, 0);
  for (int e = 0; e < mm.num_items; ++e) u[owner[e]] += mm.utility[owner[e]][e];
  return *std::min_element(u.begin(), u.end());
}

Value maxmin_optimum(const MaxMinInstance& mm, std::vector<int>* best_owner) {
  validate(mm);
  std::vector<int> owner(mm.num_items, 0);
  Value best = -1;
  while (true) {
    const Value v = min_utility(mm, owner);
    if (v > best) {
      best = v;
      if (best_owner) *best_owner = owner;
    }
    int pos = mm.num_items - 1;
    while (pos >= 0 && ++owner[pos] == mm.num_agents) owner[pos--] = 0;
    if (pos < 0) break;
  }
  return best;
}

Instance from_maxmin(const MaxMinInstance& mm) {
  validate(mm);
  const int m = mm.num_items;
  const int n = 2 * m;
  Value h = -1;
  for (const auto& row : mm.utility) {
    const Value total = std::accumulate(row.begin(), row.end(), Value{0});
    h = h < 0 ? total : std::min(h, total);
  }
  Instance inst = Instance::zeros(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (i >= mm.num_agents) {
          inst.set_value(i, j, k, h);
        } else if (j == k && j < m) {
          inst.set_value(i, j, k, mm.utility[i][j]);
        }
      }
    }
  }
  return inst;
}

Allocation partition_to_allocation(const MaxMinInstance& mm, const std::vector<int>& owner) {
  validate(mm);
  validate_owner(mm, owner);
  Allocation a(2 * mm.num_items);
  for (int e = 0; e < mm.num_items; ++e) a.assign(e, e, owner[e]);
  return extend(a);
}

std::vector<int> allocation_to_partition(const MaxMinInstance& mm, const Allocation& a) {
  validate(mm);
  if (a.n() != 2 * mm.num_items) throw DimensionMismatch("allocation order must be twice the item count");
  std::vector<int> owner(mm.num_items, 0);
  for (int e = 0; e < mm.num_items; ++e) {
    const int i = a.at(e, e);
    if (i != kEmpty && i < mm.num_agents) owner[e] = i;
  }
  return owner;
}

// --- 3-Partition ------------------------------------------------------------

void validate(const ThreePartitionInstance& tp) {
  if (tp.m < 1) throw InputError("3-Partition needs m >= 1");
  if (static_cast<int>(tp.a.size()) != 3 * tp.m) throw DimensionMismatch("3-Partition needs 3m numbers");
  for (const Value x : tp.a) {
    if (!(4 * x > tp.target && 2 * x < tp.target)) {
      throw InputError("3-Partition numbers must satisfy T/4 < a_j < T/2");
    }
  }
  if (std::accumulate(tp.a.begin(), tp.a.end(), Value{0}) != tp.m * tp.target) {
    throw InputError("3-Partition numbers must sum to m * T");
  }
}

Instance from_3partition(const ThreePartitionInstance& tp) {
  validate(tp);
  const int m = tp.m;
  const int n = 6 * m;
  Instance inst = Instance::zeros(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      Value v = 0;
      if (j == k && j < 3 * m) {
        v = tp.a[j];
      } else if (j == 3 * m - 2 && k < 2 * m + 1) {
        v = tp.target;
      } else if (j == 3 * m - 1 && k < 3 * m - 1) {
        v = tp.target;
      }
      for (int i = 0; i < n; ++i) inst.set_value(i, j, k, v);
    }
  }
  return inst;
}

Allocation partition_to_fair_allocation(const ThreePartitionInstance& tp,
                                        const std::vector<std::array<int, 3>>& parts) {
  validate(tp);
  const int m = tp.m;
  if (static_cast<int>(parts.size()) != m) throw DimensionMismatch("need m parts");
  std::vector<char> used(3 * m, 0);
  for (const auto& part : parts) {
    Value sum = 0;
    for (const int j : part) {
      if (j < 0 || j >= 3 * m || used[j]) throw InputError("parts must split the 3m indices");
      used[j] = 1;
      sum += tp.a[j];
    }
    if (sum != tp.target) throw InputError("every part must sum to T");
  }

  Allocation a(6 * m);
  auto give = [&](int j, int k, int agent) {
    if (!a.empty_at(j, k)) {
      throw InputError("witness cells collide at item " + std::to_string(j + 1) + ", round " +
                       std::to_string(k + 1) + " (the construction needs m >= 3)");
    }
    a.assign(j, k, agent);
  };
  for (int i = 0; i < m; ++i) {
    for (const int j : parts[i]) give(j, j, i);
  }
  for (int k = 0; k < 2 * m + 1; ++k) give(3 * m - 2, k, m + k);
  for (int k = 0; k < 3 * m - 1; ++k) give(3 * m - 1, k, 3 * m + 1 + k);
  if (!is_feasible(a)) throw InputError("witness cells violate the Latin conditions");
  return extend(a);
}

std::vector<std::vector<int>> allocation_to_3partition(const ThreePartitionInstance& tp,
                                                       const Allocation& a) {
  validate(tp);
  if (a.n() != 6 * tp.m) throw DimensionMismatch("allocation order must be 6m");
  std::vector<std::vector<int>> by_agent(a.n());
  for (int j = 0; j < 3 * tp.m; ++j) {
    if (!a.empty_at(j, j)) by_agent[a.at(j, j)].push_back(j);
  }
  std::vector<std::vector<int>> parts;
  for (auto& s : by_agent) {
    if (!s.empty()) parts.push_back(std::move(s));
  }
  return parts;
}

}  // namespace lsa
