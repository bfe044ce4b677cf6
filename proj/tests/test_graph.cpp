#include <doctest.h>

#include "lrw1/graph.hpp"
#include "support.hpp"

using namespace lrw1;

TEST_CASE("from_edge_list builds the listed edges") {
  const Graph c5 = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(c5.edge_count() == 5);
  CHECK(c5 == graphs::cycle(5));
  CHECK(Graph::from_edge_list(1, {}).edge_count() == 0);
  CHECK(Graph::from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}}).edge_count() == 1);

  const Graph net = Graph::from_edge_list(6, {{0, 3}, {0, 1}, {1, 2}, {2, 0}, {1, 4}, {2, 5}});
  CHECK(net == graphs::net());
  CHECK(pendant_vertices(net) == VertexSet{3, 4, 5});
}

TEST_CASE("from_edge_list rejects bad input") {
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{-1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(33), std::invalid_argument);
  const std::uint32_t asym[2] = {0b10, 0b00};
  CHECK_THROWS_AS(Graph::from_rows(2, asym), std::invalid_argument);
  const std::uint32_t loop[1] = {0b1};
  CHECK_THROWS_AS(Graph::from_rows(1, loop), std::invalid_argument);
}

TEST_CASE("induced subgraphs and deletion") {
  const Graph c5 = graphs::cycle(5);
  CHECK(induced_subgraph(c5, {0, 1, 2}) == graphs::path(3));
  CHECK(induced_subgraph(c5, c5.vertices()) == c5);
  CHECK(induced_subgraph(graphs::net(), {0, 1, 2}) == graphs::complete(3));
  for (int v = 0; v < 5; ++v) {
    const Graph p = delete_vertex(c5, v);
    CHECK(p.order() == 4);
    CHECK(p.edge_count() == 3);
    CHECK(are_isomorphic(p, graphs::path(4)));
  }
  CHECK(delete_vertex(graphs::complete(2), 0).order() == 1);
  const Graph n3 = delete_vertex(graphs::net(), 3);
  CHECK(n3.edge_count() == 5);
  CHECK(pendant_vertices(n3).size() == 2);
  CHECK_THROWS(delete_vertex(c5, 5));
}

TEST_CASE("components and distances") {
  CHECK(connected_components(graphs::cycle(5)).size() == 1);
  CHECK(connected_components(Graph(0)).empty());
  CHECK_FALSE(is_connected(Graph(0)));
  const Graph k2k3 = disjoint_union(graphs::complete(2), graphs::complete(3));
  CHECK(connected_components(k2k3) == std::vector<VertexSet>{{0, 1}, {2, 3, 4}});

  CHECK(bfs_distances(graphs::cycle(5), 0) == std::vector<int>{0, 1, 2, 2, 1});
  const Graph k2k1 = disjoint_union(graphs::complete(2), Graph(1));
  CHECK(bfs_distances(k2k1, 0) == std::vector<int>{0, 1, kUnreachable});
  const auto d = bfs_distances(graphs::net(), 3);
  CHECK(d[0] == 1);
  CHECK(d[1] == 2);
  CHECK(d[2] == 2);
  CHECK(d[4] == 3);
  CHECK(d[5] == 3);
}

TEST_CASE("block-cut tree examples") {
  const BlockCutTree net = block_cut_tree(graphs::net());
  CHECK(net.blocks.size() == 4);
  CHECK(net.cut_vertices == VertexSet{0, 1, 2});
  int triangle = -1;
  for (int b = 0; b < 4; ++b)
    if (net.blocks[b].size() == 3) triangle = b;
  REQUIRE(triangle >= 0);
  CHECK(net.block_degree(triangle) == 3);
  for (int b = 0; b < 4; ++b)
    if (b != triangle) CHECK(net.block_degree(b) == 1);

  const BlockCutTree k2 = block_cut_tree(graphs::complete(2));
  CHECK(k2.blocks.size() == 1);
  CHECK(k2.cut_vertices.empty());

  const BlockCutTree p5 = block_cut_tree(graphs::path(5));
  CHECK(p5.blocks.size() == 4);
  CHECK(p5.cut_vertices.size() == 3);
  CHECK(p5.edges.size() == 6);

  CHECK_THROWS(block_cut_tree(disjoint_union(graphs::complete(2), Graph(1))));
  CHECK_THROWS(block_cut_tree(Graph(1)));
}

TEST_CASE("split pairs") {
  const auto k3 = split_pairs(graphs::complete(3));
  CHECK(k3.size() == 3);
  for (const auto& s : k3) CHECK(s.kind == SplitKind::Strong);

  const auto c4 = split_pairs(graphs::cycle(4));
  CHECK(c4 == std::vector<SplitPair>{{0, 2, SplitKind::Weak}, {1, 3, SplitKind::Weak}});

  // Brute force over all pairs of C5.
  const Graph c5 = graphs::cycle(5);
  int found = 0;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) {
      const VertexSet nu = c5.neighbors(u) - VertexSet::single(v);
      const VertexSet nv = c5.neighbors(v) - VertexSet::single(u);
      if (nu == nv) ++found;
    }
  CHECK(found == 0);
  CHECK(split_pairs(c5).empty());

  CHECK(pendant_vertices(graphs::cycle(5)).empty());
  CHECK(pendant_vertices(graphs::complete(2)) == VertexSet{0, 1});
}

TEST_CASE("graph invariants on random graphs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 9;
    const Graph g = testing::random_graph(rng, n, 0.4);
    int degrees = 0;
    for (int v = 0; v < n; ++v) degrees += g.degree(v);
    CHECK(degrees == 2 * g.edge_count());

    for (int v = 0; v < n; ++v) {
      const Graph h = delete_vertex(g, v);
      CHECK(h.order() == n - 1);
      CHECK(h == Graph::from_rows(h.order(), h.rows()));
    }

    const VertexSet x(static_cast<std::uint32_t>(rng()) & VertexSet::full(n).bits());
    const Graph sub = induced_subgraph(g, x);
    CHECK(induced_subgraph(sub, sub.vertices()) == sub);

    if (!is_connected(g) || n < 2) continue;
    const BlockCutTree t = block_cut_tree(g);
    CHECK(t.cut_vertices == cut_vertices(g));
    for (auto [u, v] : g.edges()) {
      int holders = 0;
      for (const auto& b : t.blocks) holders += b.contains(u) && b.contains(v);
      CHECK(holders == 1);
    }
    for (std::size_t a = 0; a < t.blocks.size(); ++a)
      for (std::size_t b = a + 1; b < t.blocks.size(); ++b) {
        const VertexSet common = t.blocks[a] & t.blocks[b];
        CHECK(common.size() <= 1);
        if (common.size() == 1) CHECK(t.cut_vertices.contains(common.first()));
      }
    for (const auto& b : t.blocks) {
      if (b.size() >= 3) CHECK(is_two_connected(induced_subgraph(g, b)));
      if (b.size() == 2) CHECK(g.adjacent(b.first(), (b - VertexSet::single(b.first())).first()));
    }
    // Bipartite incidence graph is a tree.
    CHECK(t.edges.size() == t.blocks.size() + t.cut_vertices.size() - 1);
    for (int u : pendant_vertices(g)) {
      bool k2_block = false;
      for (const auto& b : t.blocks) k2_block |= b.size() == 2 && b.contains(u);
      CHECK(k2_block);
    }
  }
}
