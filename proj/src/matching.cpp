#include "lsa/matching.hpp"

#include <algorithm>

#include "lsa/error.hpp"

namespace lsa {

namespace {

// Hungarian method on a padded square cost matrix (minimization), with
// row/column potentials. Costs are the negated positive parts of the weights,
// so padding and dropped edges cost 0.
template <class W>
MatchingResult<W> hungarian_max(const WeightedBipartiteGraph<W>& g, W threshold) {
  const int size = std::max(g.left_size, g.right_size);
  MatchingResult<W> result;
  if (size == 0) return result;

  auto cost = [&](int l, int r) -> W {
    if (l >= g.left_size || r >= g.right_size) return W{0};
    const W w = g.at(l, r);
    return w > threshold ? -w : W{0};
  };

  const W inf = std::numeric_limits<W>::max() / 4;
  // 1-based arrays as in the classical formulation; column 0 is a sentinel.
  std::vector<W> u(size + 1, W{0}), v(size + 1, W{0});
  std::vector<int> owner(size + 1, 0), way(size + 1, 0);
  std::vector<W> min_slack(size + 1);
  std::vector<char> used(size + 1);

  for (int row = 1; row <= size; ++row) {
    owner[0] = row;
    int col0 = 0;
    std::fill(min_slack.begin(), min_slack.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[col0] = 1;
      const int row0 = owner[col0];
      W delta = inf;
      int col1 = 0;
      for (int col = 1; col <= size; ++col) {
        if (used[col]) continue;
        const W cur = cost(row0 - 1, col - 1) - u[row0] - v[col];
        if (cur < min_slack[col]) {
          min_slack[col] = cur;
          way[col] = col0;
        }
        if (min_slack[col] < delta) {
          delta = min_slack[col];
          col1 = col;
        }
      }
      for (int col = 0; col <= size; ++col) {
        if (used[col]) {
          u[owner[col]] += delta;
          v[col] -= delta;
        } else {
          min_slack[col] -= delta;
        }
      }
      col0 = col1;
    } while (owner[col0] != 0);
    do {
      const int col1 = way[col0];
      owner[col0] = owner[col1];
      col0 = col1;
    } while (col0 != 0);
  }

  for (int col = 1; col <= size; ++col) {
    const int l = owner[col] - 1;
    const int r = col - 1;
    if (l < g.left_size && r < g.right_size && g.at(l, r) > threshold) {
      result.pairs.emplace_back(l, r);
      result.weight += g.at(l, r);
    }
  }
  std::sort(result.pairs.begin(), result.pairs.end());
  return result;
}

}  // namespace

MatchingResult<std::int64_t> max_weight_matching(const WeightedBipartiteGraph<std::int64_t>& g,
                                                 std::int64_t threshold) {
  return hungarian_max(g, threshold);
}

MatchingResult<double> max_weight_matching(const WeightedBipartiteGraph<double>& g,
                                           double threshold) {
  return hungarian_max(g, threshold);
}

std::vector<int> max_cardinality_matching(int left_size, int right_size,
                                          const std::vector<std::vector<int>>& adjacency) {
  std::vector<int> match_left(left_size, -1), match_right(right_size, -1);
  std::vector<int> visited(right_size, -1);

  // Iterative augmenting-path search (Kuhn) from a free left vertex.
  auto augment = [&](int root) {
    struct Frame {
      int left;
      std::size_t next;
    };
    std::vector<Frame> stack{{root, 0}};
    std::vector<int> via_right;  // right vertex used to reach stack[d + 1]
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next == adjacency[top.left].size()) {
        stack.pop_back();
        if (!via_right.empty()) via_right.pop_back();
        continue;
      }
      const int r = adjacency[top.left][top.next++];
      if (visited[r] == root) continue;
      visited[r] = root;
      if (match_right[r] == -1) {
        // Flip the path root -> ... -> top.left -> r.
        via_right.push_back(r);
        for (std::size_t d = 0; d < stack.size(); ++d) {
          const int l = stack[d].left;
          const int rr = via_right[d];
          match_left[l] = rr;
          match_right[rr] = l;
        }
        return true;
      }
      via_right.push_back(r);
      stack.push_back({match_right[r], 0});
    }
    return false;
  };

  for (int l = 0; l < left_size; ++l) augment(l);
  return match_left;
}

int BipartiteMultigraph::max_degree() const {
  std::vector<int> left(left_size, 0), right(right_size, 0);
  int best = 0;
  for (const auto& [l, r] : edges) {
    best = std::max({best, ++left[l], ++right[r]});
  }
  return best;
}

std::vector<int> edge_color(const BipartiteMultigraph& g, int num_colors) {
  for (const auto& [l, r] : g.edges) {
    if (l < 0 || l >= g.left_size || r < 0 || r >= g.right_size) {
      throw InputError("edge endpoint out of range");
    }
  }
  const int delta = g.max_degree();
  if (num_colors < delta) {
    throw InputError("edge coloring needs at least " + std::to_string(delta) + " colors, got " +
                     std::to_string(num_colors));
  }
  const int vertices = g.left_size + g.right_size;
  const auto slot = [num_colors](int vertex, int color) {
    return static_cast<std::size_t>(vertex) * num_colors + color;
  };
  // incident[vertex][color] = edge id or -1.
  std::vector<int> incident(static_cast<std::size_t>(vertices) * std::max(num_colors, 1), -1);
  std::vector<int> color(g.edges.size(), -1);

  const auto free_color = [&](int vertex) {
    for (int c = 0; c < num_colors; ++c) {
      if (incident[slot(vertex, c)] == -1) return c;
    }
    throw InternalError("no free color at a vertex of degree < num_colors");
  };
  const auto other_end = [&](int edge, int vertex) {
    const int a = g.edges[edge].first;
    const int b = g.left_size + g.edges[edge].second;
    return vertex == a ? b : a;
  };

  std::vector<int> path;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const int u = g.edges[e].first;
    const int w = g.left_size + g.edges[e].second;
    const int alpha = free_color(u);
    if (incident[slot(w, alpha)] != -1) {
      // alpha is taken at w: swap alpha/beta along the alternating path that
      // starts at w. In a bipartite graph this path cannot end at u.
      const int beta = free_color(w);
      path.clear();
      int vertex = w;
      int c = alpha;
      while (incident[slot(vertex, c)] != -1) {
        const int edge = incident[slot(vertex, c)];
        path.push_back(edge);
        vertex = other_end(edge, vertex);
        c = (c == alpha) ? beta : alpha;
      }
      for (const int edge : path) {
        const int a = g.edges[edge].first;
        const int b = g.left_size + g.edges[edge].second;
        incident[slot(a, color[edge])] = -1;
        incident[slot(b, color[edge])] = -1;
      }
      for (const int edge : path) {
        color[edge] = (color[edge] == alpha) ? beta : alpha;
        const int a = g.edges[edge].first;
        const int b = g.left_size + g.edges[edge].second;
        incident[slot(a, color[edge])] = edge;
        incident[slot(b, color[edge])] = edge;
      }
    }
    color[e] = alpha;
    incident[slot(u, alpha)] = static_cast<int>(e);
    incident[slot(w, alpha)] = static_cast<int>(e);
  }
  return color;
}

}  // namespace lsa
