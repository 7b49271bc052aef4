#pragma once

// Bipartite kernels: maximum-weight matching (assignment with potentials) and
// proper edge coloring of bipartite multigraphs with Delta colors.

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace lsa {

// Complete bipartite graph stored as a dense left x right weight matrix.
// Missing edges carry `absent()`, which is below any valuation.
template <class W>
struct WeightedBipartiteGraph {
  int left_size = 0;
  int right_size = 0;
  std::vector<W> weights;  // row-major, left_size * right_size

  WeightedBipartiteGraph(int left, int right, W fill = W{0})
      : left_size(left), right_size(right),
        weights(static_cast<std::size_t>(left) * right, fill) {}

  static constexpr W absent() { return std::numeric_limits<W>::lowest() / 4; }

  W& at(int l, int r) { return weights[static_cast<std::size_t>(l) * right_size + r]; }
  W at(int l, int r) const { return weights[static_cast<std::size_t>(l) * right_size + r]; }
};

template <class W>
struct MatchingResult {
  std::vector<std::pair<int, int>> pairs;  // (left, right), sorted by left
  W weight{};
};

// Maximum total weight over all matchings (not necessarily perfect). Edges
// whose weight is <= `threshold` are never part of the result, so an
// all-negative graph yields the empty matching of weight 0.
MatchingResult<std::int64_t> max_weight_matching(const WeightedBipartiteGraph<std::int64_t>& g,
                                                 std::int64_t threshold = 0);
MatchingResult<double> max_weight_matching(const WeightedBipartiteGraph<double>& g,
                                           double threshold = 0.0);

// Maximum-cardinality matching; adjacency lists map left vertices to right
// vertices. Returns the right partner of each left vertex or -1.
std::vector<int> max_cardinality_matching(int left_size, int right_size,
                                          const std::vector<std::vector<int>>& adjacency);

struct BipartiteMultigraph {
  int left_size = 0;
  int right_size = 0;
  std::vector<std::pair<int, int>> edges;  // (left, right); duplicates allowed

  int max_degree() const;
};

// Proper edge coloring with colors in [0, num_colors). Requires
// num_colors >= max_degree(); throws InputError otherwise.
std::vector<int> edge_color(const BipartiteMultigraph& g, int num_colors);

}  // namespace lsa
