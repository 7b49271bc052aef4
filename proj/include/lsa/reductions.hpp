#pragma once

// Instance generators for four hardness constructions, with maps between
// source certificates and allocations. Agents, items and rounds are 0-based
// here; the source problems keep their own indexing as documented per type.

#include <array>
#include <vector>

#include "lsa/instance.hpp"

namespace lsa {

// Partial Latin square completion: v_ijk = 0 when P(j,k) holds another agent,
// otherwise 1.
Instance from_partial_latin_square(const Allocation& p);

// --- 4-occurrence 3SAT ------------------------------------------------------

// Literals are signed 1-based variable indices (+k for x_k, -k for its
// negation). Every literal must occur exactly twice, in two different clauses.
struct Formula3SAT {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;
};

void validate(const Formula3SAT& f);
bool satisfies(const Formula3SAT& f, const std::vector<bool>& truth);

enum class Variant { Partial, Complete };

// Agent and cell numbering of the 3SAT construction (all 0-based).
struct Sat3Layout {
  int lambda = 0;  // variables
  int mu = 0;      // clauses
  int n = 0;       // agents of the partial construction, mu + 5 lambda

  int clause_agent(int p) const { return p; }                          // clause p
  int variable_agent(int k) const { return mu + 5 * k; }               // variable k
  int transfer_agent(int k, int v) const { return mu + 5 * k + v; }    // v in 1..4
  int bottom_row(int p) const { return 2 * lambda + p; }

  // Cells valued by the transfer agent t_k^v: diagonal block cell, bottom
  // cell, top cell.
  Cell block_cell(int k, int v) const;
  Cell top_cell(int k, int v) const;
  Cell clause_top_cell(int p) const { return {0, 4 * lambda + p}; }
};

Sat3Layout layout(const Formula3SAT& f);

// Bottom cell of t_k^v (v in 1..4): positive literal occurrences feed t^1 and
// t^3, negative ones t^2 and t^4, earlier clause first.
Cell bottom_cell(const Formula3SAT& f, int k, int v);

// Complete variant doubles the order with dummy agents valuing rows 0 and 1.
Instance from_3sat(const Formula3SAT& f, Variant variant = Variant::Partial);

// Every agent receives exactly two valued cells of the partial construction.
// The complete variant extends that allocation.
Allocation assignment_to_allocation(const Formula3SAT& f, const std::vector<bool>& truth,
                                    Variant variant = Variant::Partial);

// Reads x_k = true iff variable agent x_k holds both off-diagonal cells of
// its block.
std::vector<bool> allocation_to_assignment(const Formula3SAT& f, const Allocation& a);

// --- max-min fair allocation ------------------------------------------------

struct MaxMinInstance {
  int num_agents = 0;
  int num_items = 0;
  std::vector<std::vector<Value>> utility;  // [agent][item]
};

void validate(const MaxMinInstance& mm);
Value min_utility(const MaxMinInstance& mm, const std::vector<int>& owner);
// Brute force over all num_agents^num_items partitions.
Value maxmin_optimum(const MaxMinInstance& mm, std::vector<int>* best_owner = nullptr);

// n = 2 * num_items: original agents value their items on the diagonal,
// the remaining agents value every cell at h = min_i u_i(E).
Instance from_maxmin(const MaxMinInstance& mm);

// owner[e] is the agent receiving item e. The diagonal follows the
// partition and the rest is filled by extension.
Allocation partition_to_allocation(const MaxMinInstance& mm, const std::vector<int>& owner);

// Diagonal owners among the original agents; other items go to agent 0.
std::vector<int> allocation_to_partition(const MaxMinInstance& mm, const Allocation& a);

// --- 3-Partition ------------------------------------------------------------

struct ThreePartitionInstance {
  int m = 0;
  std::vector<Value> a;  // 3m numbers
  Value target = 0;      // T
};

void validate(const ThreePartitionInstance& tp);

// Identical valuations on n = 6m: a_j on the diagonal up to 3m, T on row
// 3m-1 (1-based) for rounds up to 2m+1 and on row 3m for rounds up to 3m-1.
// Where the cases overlap the diagonal value is used.
Instance from_3partition(const ThreePartitionInstance& tp);

// parts: m triples of 0-based indices into a, each summing to T. Throws
// InputError when the prescribed cells collide (m <= 2).
Allocation partition_to_fair_allocation(const ThreePartitionInstance& tp,
                                        const std::vector<std::array<int, 3>>& parts);

// Non-empty diagonal owner classes {j < 3m : A(j,j) = i}.
std::vector<std::vector<int>> allocation_to_3partition(const ThreePartitionInstance& tp,
                                                       const Allocation& a);

}  // namespace lsa
