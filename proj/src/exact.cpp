#include "lsa/exact.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <optional>
#include <thread>

#include "latin_state.hpp"
#include "lsa/error.hpp"
#include "lsa/matching.hpp"

namespace lsa {

Objective parse_objective(std::string_view name) {
  if (name == "umax") return Objective::Umax;
  if (name == "emax") return Objective::Emax;
  throw InputError("unknown objective '" + std::string(name) + "' (expected umax or emax)");
}

Mode parse_mode(std::string_view name) {
  if (name == "partial") return Mode::Partial;
  if (name == "complete") return Mode::Complete;
  throw InputError("unknown mode '" + std::string(name) + "' (expected partial or complete)");
}

std::string_view to_string(Objective objective) {
  return objective == Objective::Umax ? "umax" : "emax";
}

std::string_view to_string(Mode mode) { return mode == Mode::Partial ? "partial" : "complete"; }

Value objective_value(const Instance& inst, const Allocation& a, Objective objective) {
  return objective == Objective::Umax ? utilitarian_welfare(inst, a) : egalitarian_welfare(inst, a);
}

namespace {

using Clock = std::chrono::steady_clock;

struct Shared {
  std::atomic<Value> best{-1};
  std::optional<Clock::time_point> deadline;
};

class Search {
 public:
  Search(const Instance& inst, Objective objective, Mode mode, bool pruning, Shared& shared)
      : inst_(inst),
        n_(inst.n()),
        objective_(objective),
        partial_(mode == Mode::Partial),
        pruning_(pruning),
        shared_(shared),
        st_(inst.n()),
        util_(inst.n(), 0),
        cell_max_suffix_(static_cast<std::size_t>(inst.n()) * inst.n() + 1, 0) {
    for (int c = n_ * n_ - 1; c >= 0; --c) {
      Value best = 0;
      for (int i = 0; i < n_; ++i) best = std::max(best, inst.value(i, c / n_, c % n_));
      cell_max_suffix_[c] = cell_max_suffix_[c + 1] + best;
    }
  }

  // Candidate agents for a cell in search order; kEmpty stands for leaving it
  // unassigned.
  std::vector<int> candidates(int cell) const {
    const int j = cell / n_;
    const int k = cell % n_;
    std::vector<int> out;
    std::uint64_t mask = st_.free_agents(j, k);
    while (mask) {
      const int i = std::countr_zero(mask);
      mask &= mask - 1;
      if (!partial_ || inst_.value(i, j, k) > 0) out.push_back(i);
    }
    std::stable_sort(out.begin(), out.end(), [&](int a, int b) {
      return inst_.value(a, j, k) > inst_.value(b, j, k);
    });
    if (partial_) out.push_back(kEmpty);
    return out;
  }

  void place(int cell, int agent) {
    if (agent == kEmpty) return;
    st_.place(cell / n_, cell % n_, agent);
    util_[agent] += inst_.value(agent, cell / n_, cell % n_);
    sum_ += inst_.value(agent, cell / n_, cell % n_);
  }

  void unplace(int cell, int agent) {
    if (agent == kEmpty) return;
    st_.remove(cell / n_, cell % n_);
    util_[agent] -= inst_.value(agent, cell / n_, cell % n_);
    sum_ -= inst_.value(agent, cell / n_, cell % n_);
  }

  void dfs(int cell) {
    if ((++nodes_ & 0xFFF) == 0 && shared_.deadline && Clock::now() > *shared_.deadline) {
      throw LimitExceeded("exact search exceeded the time limit");
    }
    if (partial_ || cell == n_ * n_) offer();
    if (cell == n_ * n_) return;
    if (pruning_ && bound(cell) <= incumbent()) return;
    for (const int agent : candidates(cell)) {
      place(cell, agent);
      dfs(cell + 1);
      unplace(cell, agent);
    }
  }

  long long nodes() const { return nodes_; }
  Value best() const { return best_; }
  const std::optional<Allocation>& best_allocation() const { return best_alloc_; }

 private:
  Value current() const {
    if (objective_ == Objective::Umax) return sum_;
    return *std::min_element(util_.begin(), util_.end());
  }

  Value incumbent() const { return std::max(best_, shared_.best.load(std::memory_order_relaxed)); }

  void offer() {
    const Value v = current();
    if (v <= best_) return;
    best_ = v;
    best_alloc_ = st_.grid;
    Value seen = shared_.best.load(std::memory_order_relaxed);
    while (v > seen && !shared_.best.compare_exchange_weak(seen, v, std::memory_order_relaxed)) {
    }
  }

  Value bound(int cell) const {
    if (objective_ == Objective::Emax) {
      Value worst = std::numeric_limits<Value>::max();
      for (int i = 0; i < n_; ++i) {
        worst = std::min(worst, util_[i] + detail::remaining_agent_bound(inst_, st_, i, cell));
      }
      return worst;
    }
    const Value loose = sum_ + cell_max_suffix_[cell];
    if (loose <= incumbent()) return loose;
    return sum_ + row_matching_bound(cell);
  }

  // Each open item row gives at most one cell per agent and per round, so a
  // max-weight agent/round matching per row bounds what the row can add.
  Value row_matching_bound(int cell) const {
    Value total = 0;
    for (int j = cell / n_; j < n_; ++j) {
      WeightedBipartiteGraph<Value> g(n_, n_, 0);
      for (int k = 0; k < n_; ++k) {
        if (j * n_ + k < cell) continue;
        std::uint64_t mask = st_.free_agents(j, k);
        while (mask) {
          const int i = std::countr_zero(mask);
          mask &= mask - 1;
          g.at(i, k) = inst_.value(i, j, k);
        }
      }
      total += max_weight_matching(g).weight;
    }
    return total;
  }

  const Instance& inst_;
  int n_;
  Objective objective_;
  bool partial_;
  bool pruning_;
  Shared& shared_;
  detail::LatinState st_;
  std::vector<Value> util_;
  Value sum_ = 0;
  std::vector<Value> cell_max_suffix_;
  Value best_ = -1;
  std::optional<Allocation> best_alloc_;
  long long nodes_ = 0;
};

}  // namespace

ExactResult solve_exact_enumeration(const Instance& inst, Objective objective, Mode mode,
                                    const ExactOptions& options) {
  const int n = inst.n();
  const int limit = mode == Mode::Partial ? options.limit_partial : options.limit_complete;
  if (n > limit) {
    throw LimitExceeded("exact " + std::string(to_string(mode)) + " search is limited to n <= " +
                        std::to_string(limit) + ", got n = " + std::to_string(n));
  }
  Shared shared;
  if (options.time_limit > 0) {
    shared.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                         std::chrono::duration<double>(options.time_limit));
  }

  Search root(inst, objective, mode, options.pruning, shared);
  const std::vector<int> first = root.candidates(0);
  const int threads = std::min<int>(std::max(1, options.threads), static_cast<int>(first.size()));

  ExactResult result{Allocation(n), -1, 0};
  if (threads <= 1) {
    root.dfs(0);
    result.allocation = *root.best_allocation();
    result.value = root.best();
    result.nodes = root.nodes();
  } else {
    // Workers take first-cell choices in order; the earliest choice wins ties.
    std::vector<std::optional<Search>> workers(first.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t idx; (idx = next.fetch_add(1)) < first.size();) {
          try {
            Search& s = workers[idx].emplace(inst, objective, mode, options.pruning, shared);
            s.place(0, first[idx]);
            s.dfs(1);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    for (auto& w : workers) {
      result.nodes += w->nodes();
      if (w->best_allocation() && w->best() > result.value) {
        result.value = w->best();
        result.allocation = *w->best_allocation();
      }
    }
  }
  if (result.value < 0) throw InternalError("exact search found no allocation");
  return result;
}

}  // namespace lsa
