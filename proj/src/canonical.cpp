#include "lrw1/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace lrw1 {

namespace {

// Upper-triangle bits of g relabeled by `order`, packed MSB first into bytes
// behind the order byte.
std::string encode(const Graph& g, std::span<const int> order) {
  const int n = static_cast<int>(order.size());
  const int bits = n * (n - 1) / 2;
  std::string out(1 + (bits + 7) / 8, '\0');
  out[0] = static_cast<char>(n);
  int k = 0;
  for (int j = 1; j < n; ++j) {
    const std::uint32_t row = g.row(order[j]);
    for (int i = 0; i < j; ++i, ++k)
      if ((row >> order[i]) & 1u) out[1 + k / 8] = static_cast<char>(out[1 + k / 8] | (0x80 >> (k % 8)));
  }
  return out;
}

// Places vertices one canonical position at a time. Column j of the
// encoding is the adjacency of position j to positions 0..j-1, so a prefix of
// the encoding is fixed by the first j+1 placements; only placements whose
// column ties the least one survive. Two partial placements whose unplaced
// vertices see the same positions have identical continuations and merge.
struct Partial {
  std::vector<int> order;
  // seen[v]: positions adjacent to unplaced v, position i at bit 31 - i.
  std::array<std::uint32_t, kMaxVertices> seen{};
  std::uint32_t placed = 0;
};

std::vector<int> least_order(const Graph& g) {
  const int n = g.order();
  std::vector<Partial> level(1);
  for (int j = 0; j < n; ++j) {
    std::uint32_t best = ~std::uint32_t{0};
    for (const Partial& p : level)
      for (int w : g.vertices() - VertexSet(p.placed)) best = std::min(best, p.seen[w]);
    std::map<std::vector<std::uint32_t>, Partial> next;
    for (const Partial& p : level)
      for (int w : g.vertices() - VertexSet(p.placed)) {
        if (p.seen[w] != best) continue;
        Partial q = p;
        q.order.push_back(w);
        q.placed |= std::uint32_t{1} << w;
        q.seen[w] = 0;
        for (int x : g.neighbors(w) - VertexSet(q.placed)) q.seen[x] |= std::uint32_t{1} << (31 - j);
        std::vector<std::uint32_t> key(q.seen.begin(), q.seen.begin() + n);
        key.push_back(q.placed);
        next.try_emplace(std::move(key), std::move(q));
      }
    level.clear();
    for (auto& [key, p] : next) level.push_back(std::move(p));
  }
  return level.front().order;
}

}  // namespace

Graph CanonicalForm::graph() const {
  const int n = order();
  Graph g(n);
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (static_cast<unsigned char>(bytes_[1 + k / 8]) & (0x80 >> (k % 8))) g.add_edge(i, j);
  return g;
}

CanonicalForm encode_labeled(const Graph& g) {
  std::vector<int> identity(g.order());
  for (int i = 0; i < g.order(); ++i) identity[i] = i;
  return CanonicalForm::from_bytes(encode(g, identity));
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  std::vector<int> order = least_order(g);
  return {CanonicalForm::from_bytes(encode(g, order)), std::move(order)};
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g) == canonical_form(h);
}

namespace {

std::vector<Graph> extend_by_one_vertex(const std::vector<Graph>& smaller, int n) {
  // Every graph on n vertices extends some class on n-1 vertices by one
  // vertex; filter the extensions by canonical form.
  std::set<CanonicalForm> seen;
  for (const Graph& base : smaller) {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (n - 1)); ++mask) {
      Graph g(n);
      for (auto [u, v] : base.edges()) g.add_edge(u, v);
      for (int u : VertexSet(mask)) g.add_edge(u, n - 1);
      seen.insert(canonical_form(g));
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (const auto& f : seen) out.push_back(f.graph());
  return out;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 0 || n > kMaxEnumerationOrder)
    throw std::invalid_argument("enumerate_graphs supports 0 <= n <= " + std::to_string(kMaxEnumerationOrder));
  static std::mutex mutex;
  static std::vector<std::vector<Graph>> levels{{Graph(0)}};
  std::lock_guard lock(mutex);
  while (static_cast<int>(levels.size()) <= n)
    levels.push_back(extend_by_one_vertex(levels.back(), static_cast<int>(levels.size())));
  return levels[n];
}

}  // namespace lrw1
