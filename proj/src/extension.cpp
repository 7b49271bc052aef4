#include "lsa/extension.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lsa/matching.hpp"

namespace lsa {

namespace {

std::string describe(const std::vector<int>& labels) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? "," : "") << labels[i] + 1;
  out << '}';
  return out.str();
}

std::vector<int> complement(const std::vector<int>& used, int n) {
  std::vector<char> mark(n, 0);
  for (const int x : used) mark[x] = 1;
  std::vector<int> rest;
  for (int x = 0; x < n; ++x) {
    if (!mark[x]) rest.push_back(x);
  }
  return rest;
}

void check_permutation(const std::vector<int>& order, int n) {
  if (static_cast<int>(order.size()) != n) throw DimensionMismatch("relabeling has wrong length");
  std::vector<char> seen(n, 0);
  for (const int x : order) {
    if (x < 0 || x >= n || seen[x]) throw InputError("relabeling is not a permutation");
    seen[x] = 1;
  }
}

}  // namespace

std::vector<int> occupied_items(const Allocation& a) {
  std::vector<int> items;
  for (int j = 0; j < a.n(); ++j) {
    for (int k = 0; k < a.n(); ++k) {
      if (!a.empty_at(j, k)) {
        items.push_back(j);
        break;
      }
    }
  }
  return items;
}

std::vector<int> occupied_rounds(const Allocation& a) {
  std::vector<int> rounds;
  for (int k = 0; k < a.n(); ++k) {
    for (int j = 0; j < a.n(); ++j) {
      if (!a.empty_at(j, k)) {
        rounds.push_back(k);
        break;
      }
    }
  }
  return rounds;
}

Allocation extend(const Instance& inst, const Allocation& a) {
  require_same_order(inst, a);
  return extend(a);
}

Allocation extend(const Allocation& a) {
  const int n = a.n();
  if (!is_feasible(a)) throw InputError("cannot extend an infeasible allocation");
  const std::vector<int> items = occupied_items(a);
  const std::vector<int> rounds = occupied_rounds(a);
  const int m = static_cast<int>(items.size());
  const int r = static_cast<int>(rounds.size());
  if (m + r > n) {
    throw ExtensionPreconditionError("extension needs |M'| + |R'| <= n, got M' = " +
                                         describe(items) + ", R' = " + describe(rounds),
                                     items, rounds);
  }

  Allocation out = a;

  // Fill M' x R' row-major with the smallest agent not yet in that item row
  // or round column. At most (r - 1) + (m - 1) < n agents are blocked.
  for (const int j : items) {
    for (const int k : rounds) {
      if (!out.empty_at(j, k)) continue;
      std::vector<char> blocked(n, 0);
      for (const int k2 : rounds) {
        if (!out.empty_at(j, k2)) blocked[out.at(j, k2)] = 1;
      }
      for (const int j2 : items) {
        if (!out.empty_at(j2, k)) blocked[out.at(j2, k)] = 1;
      }
      const auto it = std::find(blocked.begin(), blocked.end(), 0);
      if (it == blocked.end()) throw InternalError("greedy fill found no admissible agent");
      out.assign(j, k, static_cast<int>(it - blocked.begin()));
    }
  }

  // Rounds outside R': agents x items of M', edge (p, q) when p lacks q.
  const std::vector<int> free_rounds = complement(rounds, n);
  {
    BipartiteMultigraph g1{n, m, {}};
    for (int q = 0; q < m; ++q) {
      std::vector<char> present(n, 0);
      for (const int k : rounds) present[out.at(items[q], k)] = 1;
      int degree = 0;
      for (int p = 0; p < n; ++p) {
        if (!present[p]) {
          g1.edges.emplace_back(p, q);
          ++degree;
        }
      }
      if (degree != n - r) throw InternalError("item vertex degree differs from n - |R'|");
    }
    const std::vector<int> color = edge_color(g1, n - r);
    for (std::size_t e = 0; e < g1.edges.size(); ++e) {
      const auto [p, q] = g1.edges[e];
      out.assign(items[q], free_rounds[color[e]], p);
    }
  }

  // Items outside M': agents x rounds, edge (p, q) when p has no item of M'
  // in round q. The graph is (n - m)-regular.
  const std::vector<int> free_items = complement(items, n);
  {
    BipartiteMultigraph g2{n, n, {}};
    std::vector<int> degree(n, 0);
    for (int q = 0; q < n; ++q) {
      std::vector<char> present(n, 0);
      for (const int j : items) {
        if (out.empty_at(j, q)) throw InternalError("row of M' left incomplete");
        present[out.at(j, q)] = 1;
      }
      for (int p = 0; p < n; ++p) {
        if (!present[p]) {
          g2.edges.emplace_back(p, q);
          ++degree[p];
        }
      }
    }
    if (std::any_of(degree.begin(), degree.end(), [&](int d) { return d != n - m; })) {
      throw InternalError("second extension graph is not (n - |M'|)-regular");
    }
    const std::vector<int> color = edge_color(g2, n - m);
    for (std::size_t e = 0; e < g2.edges.size(); ++e) {
      const auto [p, q] = g2.edges[e];
      out.assign(free_items[color[e]], q, p);
    }
  }

  if (!out.is_complete() || !is_feasible(out) || !is_superset(out, a)) {
    throw InternalError("extension produced an invalid allocation");
  }
  return out;
}

Allocation relabel(const Allocation& a, const std::vector<int>& item_order,
                   const std::vector<int>& round_order) {
  const int n = a.n();
  check_permutation(item_order, n);
  check_permutation(round_order, n);
  Allocation out(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) out.assign(j, k, a.at(item_order[j], round_order[k]));
  }
  return out;
}

Allocation unrelabel(const Allocation& relabeled, const std::vector<int>& item_order,
                     const std::vector<int>& round_order) {
  const int n = relabeled.n();
  check_permutation(item_order, n);
  check_permutation(round_order, n);
  Allocation out(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) out.assign(item_order[j], round_order[k], relabeled.at(j, k));
  }
  return out;
}

Instance relabel(const Instance& inst, const std::vector<int>& item_order,
                 const std::vector<int>& round_order) {
  const int n = inst.n();
  check_permutation(item_order, n);
  check_permutation(round_order, n);
  Instance out = Instance::zeros(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) out.set_value(i, j, k, inst.value(i, item_order[j], round_order[k]));
    }
  }
  return out;
}

Rectangularized rectangularize(const Allocation& a) {
  const int n = a.n();
  std::vector<int> items = occupied_items(a);
  std::vector<int> rounds = occupied_rounds(a);
  const auto rest_items = complement(items, n);
  const auto rest_rounds = complement(rounds, n);
  items.insert(items.end(), rest_items.begin(), rest_items.end());
  rounds.insert(rounds.end(), rest_rounds.begin(), rest_rounds.end());
  Allocation relabeled = relabel(a, items, rounds);
  return {std::move(relabeled), std::move(items), std::move(rounds)};
}

}  // namespace lsa
