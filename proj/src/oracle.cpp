#include "lsa/oracle.hpp"

#include <algorithm>
#include <bit>

#include "latin_state.hpp"
#include "lsa/error.hpp"
#include "lsa/matching.hpp"

namespace lsa {

namespace {

class FairSearch {
 public:
  FairSearch(const Instance& inst, Fairness notion, bool weak, bool pruning)
      : inst_(inst),
        n_(inst.n()),
        notion_(notion),
        weak_(weak),
        pruning_(pruning),
        symmetric_(pruning && inst.is_identical()),
        st_(inst.n()),
        util_(inst.n(), 0),
        total_(inst.n(), 0) {
    for (int i = 0; i < n_; ++i) total_[i] = inst.total(i);
  }

  bool dfs(int cell) {
    if (cell == n_ * n_) {
      ++leaves_;
      if (fairness_check(inst_, st_.grid, notion_, weak_)) {
        witness_ = st_.grid;
        return true;
      }
      return false;
    }
    if (pruning_ && hopeless(cell)) return false;
    const int j = cell / n_;
    const int k = cell % n_;
    std::uint64_t mask = st_.free_agents(j, k);
    if (symmetric_ && j == 0) mask &= std::uint64_t{1} << k;  // first row fixed to 0..n-1
    while (mask) {
      const int i = std::countr_zero(mask);
      mask &= mask - 1;
      st_.place(j, k, i);
      util_[i] += inst_.value(i, j, k);
      const bool found = dfs(cell + 1);
      util_[i] -= inst_.value(i, j, k);
      st_.remove(j, k);
      if (found) return true;
    }
    return false;
  }

  long long leaves() const { return leaves_; }
  const std::optional<Allocation>& witness() const { return witness_; }

 private:
  // Exact notions only: PROP needs n * v_i(A_i) >= v_i(M x R); EQ needs all
  // utilities equal, so the largest current utility must stay reachable by
  // every agent.
  bool hopeless(int cell) const {
    if (notion_ != Fairness::PROP && notion_ != Fairness::EQ) return false;
    std::vector<Value> reach(n_);
    for (int i = 0; i < n_; ++i) reach[i] = util_[i] + detail::remaining_agent_bound(inst_, st_, i, cell);
    if (notion_ == Fairness::PROP) {
      for (int i = 0; i < n_; ++i) {
        if (reach[i] * n_ < total_[i]) return true;
      }
      return false;
    }
    const Value top = *std::max_element(util_.begin(), util_.end());
    return std::any_of(reach.begin(), reach.end(), [&](Value r) { return r < top; });
  }

  const Instance& inst_;
  int n_;
  Fairness notion_;
  bool weak_;
  bool pruning_;
  bool symmetric_;
  detail::LatinState st_;
  std::vector<Value> util_;
  std::vector<Value> total_;
  std::optional<Allocation> witness_;
  long long leaves_ = 0;
};

}  // namespace

FairSearchResult exists_fair_complete(const Instance& inst, Fairness notion, bool weak,
                                      const FairSearchOptions& options) {
  if (inst.n() > options.limit) {
    throw LimitExceeded("fairness search is limited to n <= " + std::to_string(options.limit) +
                        ", got n = " + std::to_string(inst.n()));
  }
  FairSearch search(inst, notion, weak, options.pruning);
  const bool found = search.dfs(0);
  return {found, search.witness(), search.leaves()};
}

bool binary_partial_emax_positive(const Instance& inst) {
  if (!inst.is_binary()) throw InputError("binary Emax check needs 0/1 valuations");
  const int n = inst.n();
  std::vector<std::vector<int>> adjacency(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (inst.value(i, j, k) == 1) adjacency[i].push_back(j * n + k);
      }
    }
  }
  const std::vector<int> partner = max_cardinality_matching(n, n * n, adjacency);
  return std::none_of(partner.begin(), partner.end(), [](int r) { return r < 0; });
}

ExactResult exact_umax_emax(const Instance& inst, Objective objective, Mode mode,
                            const ExactOptions& options) {
  return solve_exact_enumeration(inst, objective, mode, options);
}

}  // namespace lsa
