#include <doctest.h>

#include "lrw1/canonical.hpp"
#include "lrw1/io.hpp"
#include "support.hpp"

using namespace lrw1;

TEST_CASE("canonical form basics") {
  const Graph c5 = graphs::cycle(5);
  const int shift[5] = {2, 3, 4, 0, 1};
  CHECK(canonical_form(c5) == canonical_form(relabel(c5, shift)));
  CHECK(canonical_form(c5) != canonical_form(graphs::path(5)));
  CHECK(are_isomorphic(c5, relabel(c5, shift)));
  CHECK_FALSE(are_isomorphic(graphs::net(), graphs::half_cube()));
  CHECK(are_isomorphic(Graph(1), Graph(1)));
  CHECK(canonical_form(Graph(0)).order() == 0);
  CHECK(canonical_form(c5).graph().order() == 5);
  CHECK(are_isomorphic(canonical_form(c5).graph(), c5));
}

TEST_CASE("canonical labeling maps the graph onto its form") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_graph(rng, 1 + trial % 10);
    const auto lab = canonical_labeling(g);
    CHECK(encode_labeled(relabel(g, lab.order)) == lab.form);
  }
}

TEST_CASE("canonical form equals the brute-force minimum labeling") {
  // The refinement search must land on the same minimum as trying every
  // permutation, which makes the form an isomorphism invariant by construction.
  std::mt19937 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::random_graph(rng, 1 + trial % 7, 0.2 + 0.1 * (trial % 6));
    CHECK(canonical_form(g) == testing::brute_force_canonical(g));
  }
}

TEST_CASE("class counts from bucketing all labeled graphs") {
  // Known values 1, 1, 2, 4, 11, 34, 156; recomputed here from two keys.
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156};
  for (int n = 0; n <= 6; ++n) {
    CAPTURE(n);
    const std::size_t fast = testing::bucketed_class_count(n, [](const Graph& g) { return canonical_form(g); });
    CHECK(fast == expected[n]);
    CHECK(enumerate_graphs(n).size() == fast);
    if (n <= 5) CHECK(testing::bucketed_class_count(n, testing::brute_force_canonical) == fast);
  }
  CHECK(enumerate_graphs(7).size() == 1044);
}

TEST_CASE("enumerated graphs are canonical, distinct and sorted") {
  for (int n = 0; n <= 7; ++n) {
    const auto gs = enumerate_graphs(n);
    std::set<CanonicalForm> forms;
    for (const Graph& g : gs) {
      CHECK(g.order() == n);
      CHECK(Graph::from_rows(n, g.rows()) == g);
      CHECK(canonical_form(g).graph() == g);
      forms.insert(canonical_form(g));
    }
    CHECK(forms.size() == gs.size());
    for (std::size_t i = 1; i < gs.size(); ++i) CHECK(canonical_form(gs[i - 1]) < canonical_form(gs[i]));
  }
  CHECK(enumerate_graphs(0).front() == Graph(0));
  CHECK_THROWS_AS(enumerate_graphs(9), std::invalid_argument);
}

TEST_CASE("canonical form invariance under random relabelings") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + trial % 12;
    const Graph g = testing::random_graph(rng, n, 0.15 + 0.7 * (trial % 5) / 4.0);
    const auto perm = testing::random_permutation(rng, n);
    CHECK(canonical_form(g) == canonical_form(relabel(g, perm)));
  }
}

TEST_CASE("regular graphs with many automorphisms") {
  // Petersen graph and its relabelings; refinement alone does not split it.
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  const Graph petersen = Graph::from_edge_list(10, e);
  std::mt19937 rng(29);
  for (int trial = 0; trial < 20; ++trial)
    CHECK(canonical_form(relabel(petersen, testing::random_permutation(rng, 10))) == canonical_form(petersen));
  // Prism C3 x K2 versus K3,3: both 3-regular on 6 vertices.
  const Graph prism = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  const Graph k33 = Graph::from_edge_list(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  CHECK_FALSE(are_isomorphic(prism, k33));
  CHECK(canonical_form(prism) == testing::brute_force_canonical(prism));
  CHECK(canonical_form(k33) == testing::brute_force_canonical(k33));
  const Graph c3c3 = disjoint_union(graphs::cycle(3), graphs::cycle(3));
  CHECK_FALSE(are_isomorphic(c3c3, graphs::cycle(6)));
}
