#pragma once

// Completion of a partial allocation whose occupied items M' and rounds R'
// satisfy |M'| + |R'| <= n: greedy fill of M' x R', then two bipartite edge
// colorings (rounds outside R', then items outside M').

#include <vector>

#include "lsa/error.hpp"
#include "lsa/instance.hpp"

namespace lsa {

class ExtensionPreconditionError : public InputError {
 public:
  ExtensionPreconditionError(const std::string& what, std::vector<int> items_used,
                             std::vector<int> rounds_used)
      : InputError(what), items(std::move(items_used)), rounds(std::move(rounds_used)) {}

  std::vector<int> items;   // M' (0-based)
  std::vector<int> rounds;  // R' (0-based)
};

// Items / rounds holding at least one assigned cell, ascending.
std::vector<int> occupied_items(const Allocation& a);
std::vector<int> occupied_rounds(const Allocation& a);

Allocation extend(const Allocation& a);

// Same as extend(a); the instance only fixes the order and is otherwise unused.
Allocation extend(const Instance& inst, const Allocation& a);

// Relabeling maps new labels to old ones: relabeled(j, k) = a(item_order[j], round_order[k]).
Allocation relabel(const Allocation& a, const std::vector<int>& item_order,
                   const std::vector<int>& round_order);
Allocation unrelabel(const Allocation& relabeled, const std::vector<int>& item_order,
                     const std::vector<int>& round_order);
Instance relabel(const Instance& inst, const std::vector<int>& item_order,
                 const std::vector<int>& round_order);

struct Rectangularized {
  Allocation allocation;
  std::vector<int> item_order;
  std::vector<int> round_order;
};

// Moves occupied items and rounds to the leading positions (stable order).
Rectangularized rectangularize(const Allocation& a);

}  // namespace lsa
