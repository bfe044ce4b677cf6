#include "lrw1/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace lrw1 {

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for (int v : *this) out.push_back(v);
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("vertex count " + std::to_string(n) + " outside 0..32");
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    g.add_edge(u, v);
  }
  return g;
}

Graph Graph::from_rows(int n, std::span<const std::uint32_t> rows) {
  Graph g(n);
  if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("row count does not match n");
  const std::uint32_t mask = VertexSet::full(n).bits();
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~mask) throw std::invalid_argument("row bits beyond n");
    if ((rows[v] >> v) & 1u) throw std::invalid_argument("loop at vertex " + std::to_string(v));
    g.rows_[v] = rows[v];
  }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.adjacent(u, v) != g.adjacent(v, u)) throw std::invalid_argument("asymmetric rows");
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v : VertexSet(rows_[u] & ~VertexSet::full(u + 1).bits())) out.emplace_back(u, v);
  return out;
}

void Graph::add_edge(int u, int v) {
  rows_[u] |= std::uint32_t{1} << v;
  rows_[v] |= std::uint32_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  rows_[u] &= ~(std::uint32_t{1} << v);
  rows_[v] &= ~(std::uint32_t{1} << u);
}

void Graph::toggle_edge(int u, int v) {
  rows_[u] ^= std::uint32_t{1} << v;
  rows_[v] ^= std::uint32_t{1} << u;
}

Graph induced_subgraph(const Graph& g, VertexSet x) {
  if (!(x - g.vertices()).empty()) throw std::invalid_argument("vertex set not contained in graph");
  const std::vector<int> keep = x.to_vector();
  return relabel(g, keep);
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  VertexSet rest = g.vertices();
  rest.erase(v);
  return induced_subgraph(g, rest);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int m = static_cast<int>(perm.size());
  Graph out(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.adjacent(perm[i], perm[j])) out.add_edge(i, j);
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out(g.order() + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(u + g.order(), v + g.order());
  return out;
}

namespace {

VertexSet reach(const Graph& g, int source, VertexSet allowed) {
  VertexSet seen = VertexSet::single(source);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next = (next & allowed) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  return reach(g, 0, g.vertices()) == g.vertices();
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> parts;
  VertexSet rest = g.vertices();
  while (!rest.empty()) {
    VertexSet part = reach(g, rest.first(), rest);
    parts.push_back(part);
    rest = rest - part;
  }
  return parts;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  if (source < 0 || source >= g.order()) throw std::invalid_argument("source out of range");
  std::vector<int> dist(g.order(), kUnreachable);
  dist[source] = 0;
  VertexSet seen = VertexSet::single(source);
  VertexSet frontier = seen;
  for (int d = 1; !frontier.empty(); ++d) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next = next - seen;
    for (int v : next) dist[v] = d;
    seen |= next;
    frontier = next;
  }
  return dist;
}

int BlockCutTree::block_degree(int block) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(),
                                        [block](const auto& e) { return e.second == block; }));
}

BlockCutTree block_cut_tree(const Graph& g) {
  const int n = g.order();
  if (n < 2 || !is_connected(g))
    throw std::invalid_argument("block-cut tree needs a connected graph with at least two vertices");

  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> stack;
  BlockCutTree tree;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (int w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[w] == -1) {
        ++children;
        stack.emplace_back(v, w);
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          if (parent != -1 || children > 1) tree.cut_vertices.insert(v);
          VertexSet block;
          while (true) {
            auto [a, b] = stack.back();
            stack.pop_back();
            block.insert(a);
            block.insert(b);
            if (a == v && b == w) break;
          }
          tree.blocks.push_back(block);
        }
      } else if (disc[w] < disc[v]) {
        low[v] = std::min(low[v], disc[w]);
        stack.emplace_back(v, w);
      }
    }
  };
  dfs(0, -1);

  std::sort(tree.blocks.begin(), tree.blocks.end(),
            [](VertexSet a, VertexSet b) { return a.first() != b.first() ? a.first() < b.first() : a < b; });
  for (int c : tree.cut_vertices)
    for (int i = 0; i < static_cast<int>(tree.blocks.size()); ++i)
      if (tree.blocks[i].contains(c)) tree.edges.emplace_back(c, i);
  return tree;
}

VertexSet cut_vertices(const Graph& g) {
  VertexSet out;
  const int base = static_cast<int>(connected_components(g).size());
  for (int v = 0; v < g.order(); ++v)
    if (static_cast<int>(connected_components(delete_vertex(g, v)).size()) > base) out.insert(v);
  return out;
}

bool is_two_connected(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && cut_vertices(g).empty();
}

VertexSet pendant_vertices(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) out.insert(v);
  return out;
}

std::vector<SplitPair> split_pairs(const Graph& g) {
  std::vector<SplitPair> out;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      const VertexSet nu = g.neighbors(u), nv = g.neighbors(v);
      if (g.adjacent(u, v)) {
        if (nu - VertexSet::single(v) == nv - VertexSet::single(u)) out.push_back({u, v, SplitKind::Strong});
      } else if (nu == nv) {
        out.push_back({u, v, SplitKind::Weak});
      }
    }
  return out;
}

std::string to_edge_list_text(const Graph& g) {
  std::ostringstream out;
  const auto es = g.edges();
  out << g.order() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
  return out.str();
}

namespace graphs {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph net() { return Graph::from_edge_list(6, {{0, 3}, {0, 1}, {1, 2}, {2, 0}, {1, 4}, {2, 5}}); }

Graph half_cube() { return Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {5, 2}}); }

}  // namespace graphs

}  // namespace lrw1
