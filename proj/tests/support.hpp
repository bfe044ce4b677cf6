// Fixtures and independent oracles shared by the unit and acceptance suites.
// Nothing here calls the search routines it is used to check.
#pragma once

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "lrw1/canonical.hpp"
#include "lrw1/gf2.hpp"
#include "lrw1/graph.hpp"
#include "lrw1/widths.hpp"

namespace lrw1::testing {

// Drawings of the locally equivalent classes, vertices numbered
// a'=0, a=1, x=2, y=3, b=4, b'=5 where the drawings use those names.
inline std::vector<Graph> c5_orbit_figures() {
  return {graphs::cycle(5),
          Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}}),
          Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {2, 4}})};
}

inline std::vector<Graph> net_orbit_figures() {
  return {graphs::net(),
          Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 4}, {4, 5}, {3, 1}, {3, 2}, {3, 4}}),
          Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 4}, {4, 5}, {3, 1}, {3, 4}, {0, 2}, {0, 3}}),
          Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 4}, {4, 5}, {3, 1}, {3, 4}, {3, 2}, {0, 2}, {0, 3}, {5, 2},
                                    {5, 3}}),
          Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}, {5, 4}})};
}

inline std::vector<Graph> half_cube_orbit_figures() {
  return {Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 4}, {4, 5}, {3, 1}, {3, 4}}),
          Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 4}, {4, 5}, {3, 1}, {1, 4}, {3, 4}}),
          Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 4}, {4, 5}, {3, 1}, {3, 4}, {2, 3}, {0, 2}, {0, 3}}),
          Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 4}, {4, 5}, {3, 1}, {3, 4}, {0, 2}, {0, 3}, {5, 2}, {5, 3}}),
          Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}, {5, 0}, {5, 1},
                                    {5, 2}, {5, 3}})};
}

/// The thread-block drawing: a=0, a'=1, v=2, u=3, b'=4, b=5.
inline Graph thread_block_figure() {
  return Graph::from_edge_list(6, {{1, 0}, {0, 5}, {5, 4}, {3, 2}, {2, 5}, {0, 3}, {3, 5}});
}

inline Graph random_graph(std::mt19937& rng, int n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Graph with the given upper-triangle bitmask (bit k = k-th pair in row order).
inline Graph labeled_graph(int n, std::uint64_t mask) {
  Graph g(n);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if ((mask >> k) & 1u) g.add_edge(i, j);
  return g;
}

/// Minimum labeled encoding over all n! relabelings.
inline CanonicalForm brute_force_canonical(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalForm best = encode_labeled(g);
  do {
    best = std::min(best, encode_labeled(relabel(g, perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Number of isomorphism classes among all 2^(n choose 2) labeled graphs.
inline std::size_t bucketed_class_count(int n, const std::function<CanonicalForm(const Graph&)>& key) {
  std::set<CanonicalForm> buckets;
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) buckets.insert(key(labeled_graph(n, mask)));
  return buckets.size();
}

/// min over all n! orders of the max proper-prefix cutrank.
inline int brute_force_lrw(const Graph& g) {
  if (g.order() <= 1) return 0;
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  int best = g.order();
  do {
    VertexSet prefix;
    int width = 0;
    for (int k = 0; k + 1 < g.order() && width < best; ++k) {
      prefix.insert(perm[k]);
      width = std::max(width, cutrank(g, prefix));
    }
    best = std::min(best, width);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Rankwidth by the subset recursion: a set is buildable at width k when its
/// cut has rank <= k and it is a single vertex or splits into two buildable
/// halves. rw <= k iff V splits into two buildable halves.
inline int subset_dp_rankwidth(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  const std::uint32_t full = VertexSet::full(n).bits();
  for (int k = 0;; ++k) {
    std::vector<char> ok(std::size_t{1} << n, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
      if (cutrank(g, VertexSet(s)) > k && s != full) continue;
      if (std::popcount(s) == 1) {
        ok[s] = 1;
        continue;
      }
      // Split s into a part containing its lowest vertex and the rest.
      const std::uint32_t low = s & (~s + 1);
      const std::uint32_t rest = s & ~low;
      for (std::uint32_t t = rest;; t = (t - 1) & rest) {
        const std::uint32_t a = t | low, b = s & ~a;
        if (b && ok[a] && ok[b]) {
          ok[s] = 1;
          break;
        }
        if (t == 0) break;
      }
    }
    if (ok[full]) return k;
  }
}

/// Every cubic tree with leaves 0..n-1, as (node count, edges, leaf labels).
inline std::vector<RankDecomposition> all_cubic_trees(int n) {
  std::vector<RankDecomposition> out;
  RankDecomposition start;
  start.node_count = 2;
  start.leaf_vertex = {0, 1};
  start.tree_edges = {{0, 1}};
  std::function<void(const RankDecomposition&, int)> grow = [&](const RankDecomposition& d, int placed) {
    if (placed == n) {
      out.push_back(d);
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
  };
  if (n >= 2) grow(start, 2);
  return out;
}

/// Removing all leaves leaves a path (or nothing).
inline bool is_caterpillar(const RankDecomposition& d) {
  std::vector<int> degree(d.node_count, 0);
  for (auto [a, b] : d.tree_edges) {
    ++degree[a];
    ++degree[b];
  }
  std::vector<int> inner_degree(d.node_count, 0);
  for (auto [a, b] : d.tree_edges)
    if (degree[a] > 1 && degree[b] > 1) {
      ++inner_degree[a];
      ++inner_degree[b];
    }
  for (int x = 0; x < d.node_count; ++x)
    if (degree[x] > 1 && inner_degree[x] > 2) return false;
  return true;
}

inline std::vector<Graph> all_classes_up_to(int n_max, int n_min = 1) {
  std::vector<Graph> out;
  for (int n = n_min; n <= n_max; ++n) {
    auto batch = enumerate_graphs(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

}  // namespace lrw1::testing
