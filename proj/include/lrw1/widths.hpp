#pragma once

#include <optional>
#include <vector>

#include "lrw1/graph.hpp"

namespace lrw1 {

/// A vertex ordering; the prefix cuts of the order are the edge cuts of the
/// caterpillar decomposition with leaves attached to the spine in this order.
struct LinearOrder {
  std::vector<int> order;

  bool is_permutation_of(int n) const;
  friend bool operator==(const LinearOrder&, const LinearOrder&) = default;
};

/// Max cutrank over the proper prefixes of `order`. Throws
/// std::invalid_argument unless `order` is a permutation of V(g) and n >= 2.
int order_width(const Graph& g, const LinearOrder& order);

struct LinearWidthResult {
  int width;
  /// Lexicographically smallest optimal order (identity order when n <= 1).
  LinearOrder witness;
};

LinearWidthResult lrw_exact(const Graph& g);

/// Lexicographically smallest order of width <= k, if any.
std::optional<LinearOrder> is_lrw_at_most(const Graph& g, int k);

/// Tree on nodes 0..node_count-1 whose leaves carry graph vertices and whose
/// internal nodes have degree 3.
struct RankDecomposition {
  int node_count = 0;
  std::vector<std::pair<int, int>> tree_edges;
  /// leaf_vertex[node] is the vertex at that leaf, or -1 for internal nodes.
  std::vector<int> leaf_vertex;

  /// Leaf-vertex set on the side of `tree_edges[e]` containing its first node.
  VertexSet side(int e) const;
  /// Checks cubic shape, acyclicity and that leaves biject onto 0..n-1.
  bool is_valid_for(int n) const;
};

int decomposition_width(const Graph& g, const RankDecomposition& d);

struct RankWidthResult {
  int width;
  RankDecomposition witness;
};

inline constexpr int kMaxRankWidthOrder = 8;

/// Exhaustive search over cubic trees built by leaf insertion. Throws
/// std::invalid_argument for n > 8.
RankWidthResult rw_exact(const Graph& g);

}  // namespace lrw1
