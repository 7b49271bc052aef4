#pragma once

// Hand-transcribed reference layouts for the reduction audits. Rows and
// columns are 1-based here.

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lsa/reductions.hpp"

namespace fixtures {

inline lsa::Formula3SAT monotone_six() {
  lsa::Formula3SAT f;
  f.num_vars = 6;
  f.clauses = {{1, 2, 3},    {1, 2, 4},    {3, 5, 6},    {4, 5, 6},
               {-1, -2, -3}, {-1, -2, -4}, {-3, -5, -6}, {-4, -5, -6}};
  return f;
}

inline const std::vector<bool> kMonotoneSixTruth{true, false, true, true, true, false};

struct RefCell {
  int row, col;
  std::vector<std::string> valued_by;
  std::string held_by;  // owner in the reference assignment, "" if none
};

// Rows 1-20 of the reference; the top cells of row 1 from column 5 on follow
// the same stride and are generated in sat_reference().
inline const std::vector<RefCell> kSatListed{
    {1, 1, {"x1", "t1.1"}, "t1.1"}, {1, 2, {"x1", "t1.2"}, "x1"},
    {1, 3, {"t1.3"}, "t1.3"},       {1, 4, {"t1.4"}, "t1.4"},
    {2, 1, {"x1", "t1.4"}, "x1"},   {2, 2, {"x1", "t1.3"}, "t1.3"},
    {2, 3, {"t1.1"}, "t1.1"},       {2, 4, {"t1.2"}, "t1.2"},
    {3, 3, {"x2", "t2.1"}, "x2"},   {3, 4, {"x2", "t2.2"}, "t2.2"},
    {4, 3, {"x2", "t2.4"}, "t2.4"}, {4, 4, {"x2", "t2.3"}, "x2"},
    {5, 5, {"x3", "t3.1"}, "t3.1"}, {5, 6, {"x3", "t3.2"}, "x3"},
    {6, 5, {"x3", "t3.4"}, "x3"},   {6, 6, {"x3", "t3.3"}, "t3.3"},
    {7, 7, {"x4", "t4.1"}, "t4.1"}, {7, 8, {"x4", "t4.2"}, "x4"},
    {8, 7, {"x4", "t4.4"}, "x4"},   {8, 8, {"x4", "t4.3"}, "t4.3"},
    {9, 9, {"x5", "t5.1"}, "t5.1"}, {9, 10, {"x5", "t5.2"}, "x5"},
    {10, 9, {"x5", "t5.4"}, "x5"},  {10, 10, {"x5", "t5.3"}, "t5.3"},
    {11, 11, {"x6", "t6.1"}, "x6"}, {11, 12, {"x6", "t6.2"}, "t6.2"},
    {12, 11, {"x6", "t6.4"}, "t6.4"}, {12, 12, {"x6", "t6.3"}, "x6"},
    {13, 1, {"t1.1", "C1"}, "C1"},  {13, 3, {"t2.1", "C1"}, "t2.1"},
    {13, 5, {"t3.1", "C1"}, ""},    {14, 2, {"t1.3", "C2"}, "C2"},
    {14, 4, {"t2.3", "C2"}, "t2.3"}, {14, 7, {"t4.1", "C2"}, ""},
    {15, 6, {"t3.3", "C3"}, ""},    {15, 9, {"t5.1", "C3"}, "C3"},
    {15, 11, {"t6.1", "C3"}, "t6.1"}, {16, 8, {"t4.3", "C4"}, ""},
    {16, 10, {"t5.3", "C4"}, "C4"}, {16, 12, {"t6.3", "C4"}, "t6.3"},
    {17, 2, {"t1.2", "C5"}, "t1.2"}, {17, 4, {"t2.2", "C5"}, "C5"},
    {17, 6, {"t3.2", "C5"}, "t3.2"}, {18, 1, {"t1.4", "C6"}, "t1.4"},
    {18, 3, {"t2.4", "C6"}, "C6"},  {18, 8, {"t4.2", "C6"}, "t4.2"},
    {19, 5, {"t3.4", "C7"}, "t3.4"}, {19, 10, {"t5.2", "C7"}, "t5.2"},
    {19, 12, {"t6.2", "C7"}, "C7"}, {20, 7, {"t4.4", "C8"}, "t4.4"},
    {20, 9, {"t5.4", "C8"}, "t5.4"}, {20, 11, {"t6.4", "C8"}, "C8"},
};

// The reference assignment hands C3 and C4 the cells of x5 although x3 and x4
// are true and earlier; the library picks the lowest-indexed true literal.
// Pairs of (reference cell, library cell) for those clause agents.
inline const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> kClauseCellSwaps{
    {{15, 9}, {15, 6}}, {{16, 10}, {16, 8}}};

inline std::vector<RefCell> sat_reference() {
  std::vector<RefCell> cells = kSatListed;
  for (int k = 2; k <= 6; ++k) {
    for (int v = 1; v <= 4; ++v) {
      const std::string name = "t" + std::to_string(k) + "." + std::to_string(v);
      cells.push_back({1, 4 * k - 4 + v, {name}, name});
    }
  }
  for (int p = 1; p <= 8; ++p) {
    const std::string name = "C" + std::to_string(p);
    cells.push_back({1, 24 + p, {name}, name});
  }
  return cells;
}

inline int agent_by_name(const lsa::Sat3Layout& l, const std::string& name) {
  if (name[0] == 'C') return l.clause_agent(std::stoi(name.substr(1)) - 1);
  if (name[0] == 'x') return l.variable_agent(std::stoi(name.substr(1)) - 1);
  const auto dot = name.find('.');
  return l.transfer_agent(std::stoi(name.substr(1, dot - 1)) - 1, std::stoi(name.substr(dot + 1)));
}

// Differences between the generated tensor and the reference on rows 1-20,
// all columns. Empty means identical.
inline std::vector<std::string> sat_pattern_mismatches(const lsa::Instance& inst,
                                                       const lsa::Formula3SAT& f) {
  const lsa::Sat3Layout l = lsa::layout(f);
  std::map<std::pair<int, int>, std::set<int>> expected;
  for (const RefCell& c : sat_reference()) {
    for (const auto& name : c.valued_by) expected[{c.row, c.col}].insert(agent_by_name(l, name));
  }
  std::vector<std::string> out;
  for (int r = 1; r <= 20; ++r) {
    for (int c = 1; c <= inst.n(); ++c) {
      std::set<int> got;
      for (int i = 0; i < inst.n(); ++i) {
        const lsa::Value v = inst.value(i, r - 1, c - 1);
        if (v != 0 && v != 1) out.push_back("non-binary value at " + std::to_string(r) + "," + std::to_string(c));
        if (v > 0) got.insert(i);
      }
      const auto it = expected.find({r, c});
      const std::set<int> want = it == expected.end() ? std::set<int>{} : it->second;
      if (got != want) out.push_back("cell " + std::to_string(r) + "," + std::to_string(c));
    }
  }
  return out;
}

// Differences between an allocation of the partial construction and the
// reference assignment, after applying kClauseCellSwaps.
inline std::vector<std::string> sat_witness_mismatches(const lsa::Allocation& a,
                                                       const lsa::Formula3SAT& f) {
  const lsa::Sat3Layout l = lsa::layout(f);
  std::map<std::pair<int, int>, int> expected;
  for (const RefCell& c : sat_reference()) {
    if (!c.held_by.empty()) expected[{c.row, c.col}] = agent_by_name(l, c.held_by);
  }
  for (const auto& [listed, chosen] : kClauseCellSwaps) {
    expected[chosen] = expected.at(listed);
    expected.erase(listed);
  }
  std::vector<std::string> out;
  for (int r = 1; r <= a.n(); ++r) {
    for (int c = 1; c <= a.n(); ++c) {
      const auto it = expected.find({r, c});
      const int want = it == expected.end() ? lsa::kEmpty : it->second;
      if (a.at(r - 1, c - 1) != want) out.push_back("cell " + std::to_string(r) + "," + std::to_string(c));
    }
  }
  return out;
}

// Valuation layout for m = 1, T = 12, a = (4, 4, 4); identical for all agents.
inline const std::vector<std::vector<lsa::Value>> kThreePartitionM1{
    {4, 0, 0, 0, 0, 0},   {12, 4, 12, 0, 0, 0}, {12, 12, 4, 0, 0, 0},
    {0, 0, 0, 0, 0, 0},   {0, 0, 0, 0, 0, 0},   {0, 0, 0, 0, 0, 0},
};

inline lsa::ThreePartitionInstance three_partition_m1() { return {1, {4, 4, 4}, 12}; }

// m = 3 with T = 12: three triples of 4 (indices 0..8 in order).
inline lsa::ThreePartitionInstance three_partition_m3() {
  return {3, std::vector<lsa::Value>(9, 4), 12};
}

inline std::string join(const std::vector<std::string>& items, std::size_t max = 5) {
  std::ostringstream os;
  for (std::size_t i = 0; i < items.size() && i < max; ++i) os << (i ? "; " : "") << items[i];
  if (items.size() > max) os << "; ...";
  return os.str();
}

}  // namespace fixtures
