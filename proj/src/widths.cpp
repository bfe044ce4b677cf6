#include "lrw1/widths.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "lrw1/gf2.hpp"

namespace lrw1 {

bool LinearOrder::is_permutation_of(int n) const {
  if (static_cast<int>(order.size()) != n) return false;
  VertexSet seen;
  for (int v : order) {
    if (v < 0 || v >= n || seen.contains(v)) return false;
    seen.insert(v);
  }
  return true;
}

int order_width(const Graph& g, const LinearOrder& order) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("order width needs at least two vertices");
  if (!order.is_permutation_of(n)) throw std::invalid_argument("order is not a permutation of the vertex set");
  int width = 0;
  VertexSet prefix;
  for (int k = 0; k + 1 < n; ++k) {
    prefix.insert(order.order[k]);
    width = std::max(width, cutrank(g, prefix));
  }
  return width;
}

namespace {

LinearOrder identity_order(int n) {
  LinearOrder o;
  o.order.resize(n);
  std::iota(o.order.begin(), o.order.end(), 0);
  return o;
}

// Depth-first search over prefix sets in increasing vertex order. A prefix's
// cutrank depends only on its set, so sets proven dead are never re-entered;
// the first completed order is therefore the lexicographically smallest one
// of width <= k.
class PrefixSearch {
 public:
  PrefixSearch(const Graph& g, int k) : g_(g), k_(k), full_(g.vertices()) {
    if (g.order() <= 24) dead_bits_.assign(std::size_t{1} << g.order(), false);
  }

  std::optional<LinearOrder> run() {
    LinearOrder out;
    out.order.reserve(g_.order());
    if (!extend(VertexSet(), out.order)) return std::nullopt;
    return out;
  }

 private:
  bool is_dead(VertexSet s) const {
    return dead_bits_.empty() ? dead_.contains(s.bits()) : static_cast<bool>(dead_bits_[s.bits()]);
  }
  void mark_dead(VertexSet s) {
    if (dead_bits_.empty())
      dead_.insert(s.bits());
    else
      dead_bits_[s.bits()] = true;
  }

  bool extend(VertexSet prefix, std::vector<int>& order) {
    if (prefix == full_) return true;
    if (is_dead(prefix)) return false;
    for (int v : full_ - prefix) {
      const VertexSet next = prefix | VertexSet::single(v);
      if (next != full_ && cutrank(g_, next) > k_) continue;
      order.push_back(v);
      if (extend(next, order)) return true;
      order.pop_back();
    }
    mark_dead(prefix);
    return false;
  }

  const Graph& g_;
  int k_;
  VertexSet full_;
  std::vector<bool> dead_bits_;
  std::unordered_set<std::uint32_t> dead_;
};

}  // namespace

std::optional<LinearOrder> is_lrw_at_most(const Graph& g, int k) {
  if (k < 0) return std::nullopt;
  if (g.order() <= 1) return identity_order(g.order());
  return PrefixSearch(g, k).run();
}

LinearWidthResult lrw_exact(const Graph& g) {
  if (g.order() <= 1) return {0, identity_order(g.order())};
  for (int k = 0;; ++k)
    if (auto order = is_lrw_at_most(g, k)) return {k, std::move(*order)};
}

VertexSet RankDecomposition::side(int e) const {
  std::vector<std::vector<int>> adj(node_count);
  for (auto [a, b] : tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  const auto [root, blocked] = tree_edges.at(e);
  VertexSet leaves;
  std::vector<int> stack{root};
  std::vector<bool> seen(node_count, false);
  seen[root] = seen[blocked] = true;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    if (leaf_vertex[x] >= 0) leaves.insert(leaf_vertex[x]);
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
  }
  return leaves;
}

bool RankDecomposition::is_valid_for(int n) const {
  if (n < 2) return node_count == 0 && tree_edges.empty();
  if (node_count < 2 || static_cast<int>(leaf_vertex.size()) != node_count) return false;
  if (static_cast<int>(tree_edges.size()) != node_count - 1) return false;
  std::vector<int> degree(node_count, 0);
  for (auto [a, b] : tree_edges) {
    if (a < 0 || b < 0 || a >= node_count || b >= node_count || a == b) return false;
    ++degree[a];
    ++degree[b];
  }
  VertexSet leaves;
  for (int x = 0; x < node_count; ++x) {
    if (degree[x] == 1) {
      const int v = leaf_vertex[x];
      if (v < 0 || v >= n || leaves.contains(v)) return false;
      leaves.insert(v);
    } else if (degree[x] != 3 || leaf_vertex[x] != -1) {
      return false;
    }
  }
  if (leaves != VertexSet::full(n)) return false;
  // With node_count - 1 edges, connected means acyclic.
  std::vector<std::vector<int>> adj(node_count);
  for (auto [a, b] : tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(node_count, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 0;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    ++reached;
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
  }
  return reached == node_count;
}

int decomposition_width(const Graph& g, const RankDecomposition& d) {
  int width = 0;
  for (int e = 0; e < static_cast<int>(d.tree_edges.size()); ++e) width = std::max(width, cutrank(g, d.side(e)));
  return width;
}

namespace {

// Leaf-insertion enumeration: the cubic trees with leaves 0..k arise exactly
// once each by subdividing an edge of a tree with leaves 0..k-1 and hanging
// leaf k from the new node. Edge widths over G[{0..k}] never drop when more
// leaves are inserted, so partial trees at least as wide as the best are cut.
class CubicTreeSearch {
 public:
  explicit CubicTreeSearch(const Graph& g) : g_(g), n_(g.order()) {}

  RankWidthResult run() {
    RankDecomposition start;
    start.node_count = 2;
    start.leaf_vertex = {0, 1};
    start.tree_edges = {{0, 1}};
    best_width_ = std::numeric_limits<int>::max();
    grow(start, 2);
    return {best_width_, best_};
  }

 private:
  int partial_width(const RankDecomposition& d, int placed) const {
    const std::uint32_t universe = VertexSet::full(placed).bits();
    int width = 0;
    for (int e = 0; e < static_cast<int>(d.tree_edges.size()); ++e) {
      const VertexSet x = d.side(e);
      std::array<std::uint32_t, kMaxVertices> rows{};
      int k = 0;
      for (int v : x) rows[k++] = g_.row(v) & universe & ~x.bits();
      width = std::max(width, gf2_rank(std::span<const std::uint32_t>(rows.data(), k)));
    }
    return width;
  }

  void grow(const RankDecomposition& d, int placed) {
    const int width = partial_width(d, placed);
    if (width >= best_width_) return;
    if (placed == n_) {
      best_width_ = width;
      best_ = d;
      return;
    }
    for (std::size_t e = 0; e < d.tree_edges.size(); ++e) {
      RankDecomposition next = d;
      const auto [a, b] = d.tree_edges[e];
      const int mid = next.node_count++;
      const int leaf = next.node_count++;
      next.leaf_vertex.push_back(-1);
      next.leaf_vertex.push_back(placed);
      next.tree_edges[e] = {a, mid};
      next.tree_edges.emplace_back(mid, b);
      next.tree_edges.emplace_back(mid, leaf);
      grow(next, placed + 1);
    }
  }

  const Graph& g_;
  int n_;
  int best_width_ = 0;
  RankDecomposition best_;
};

}  // namespace

RankWidthResult rw_exact(const Graph& g) {
  if (g.order() > kMaxRankWidthOrder)
    throw std::invalid_argument("rw_exact is limited to " + std::to_string(kMaxRankWidthOrder) + " vertices, got " +
                                std::to_string(g.order()));
  if (g.order() <= 1) return {0, {}};
  return CubicTreeSearch(g).run();
}

}  // namespace lrw1
