#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lrw1 {

inline constexpr int kMaxVertices = 32;

/// Subset of {0, ..., n-1} stored as one machine word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint32_t{1} << v); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  /// Smallest member; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }

  void insert(int v) { bits_ |= std::uint32_t{1} << v; }
  void erase(int v) { bits_ &= ~(std::uint32_t{1} << v); }

  std::vector<int> to_vector() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

  // Iterates members in increasing order.
  class iterator {
   public:
    constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }
   private:
    std::uint32_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint32_t bits_ = 0;
};

using Edge = std::pair<int, int>;

/// Simple undirected graph on at most 32 vertices. Row v is the neighborhood
/// bit vector of v, so the rows double as the GF(2) adjacency matrix.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Throws std::invalid_argument on out-of-range endpoints or loops.
  static Graph from_edge_list(int n, std::span<const Edge> edges);
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Builds from raw rows; throws if symmetry, irreflexivity or range fails.
  static Graph from_rows(int n, std::span<const std::uint32_t> rows);

  int order() const { return n_; }
  int edge_count() const;
  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet neighbors(int v) const { return VertexSet(rows_[v]); }
  std::uint32_t row(int v) const { return rows_[v]; }
  std::span<const std::uint32_t> rows() const { return {rows_.data(), static_cast<std::size_t>(n_)}; }
  int degree(int v) const { return std::popcount(rows_[v]); }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }
  std::vector<Edge> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void toggle_edge(int u, int v);

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v)
      if (a.rows_[v] != b.rows_[v]) return false;
    return true;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<std::uint32_t, kMaxVertices> rows_{};
};

/// Vertices of X relabeled 0..|X|-1 in increasing original order.
Graph induced_subgraph(const Graph& g, VertexSet x);
Graph delete_vertex(const Graph& g, int v);
/// Vertex i of the result is vertex perm[i] of g.
Graph relabel(const Graph& g, std::span<const int> perm);
/// Vertices of h are shifted past those of g.
Graph disjoint_union(const Graph& g, const Graph& h);

bool is_connected(const Graph& g);
/// Parts ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

inline constexpr int kUnreachable = std::numeric_limits<int>::max();
std::vector<int> bfs_distances(const Graph& g, int source);

struct BlockCutTree {
  VertexSet cut_vertices;
  std::vector<VertexSet> blocks;
  /// (cut vertex, block index) incidences.
  std::vector<std::pair<int, int>> edges;

  int block_degree(int block) const;
};

/// Biconnected components by the lowpoint DFS. Requires a connected graph
/// with at least two vertices.
BlockCutTree block_cut_tree(const Graph& g);
VertexSet cut_vertices(const Graph& g);
/// At least three vertices, connected and no cut vertex.
bool is_two_connected(const Graph& g);

VertexSet pendant_vertices(const Graph& g);

enum class SplitKind { Strong, Weak };
struct SplitPair {
  int u;
  int v;
  SplitKind kind;
  friend bool operator==(const SplitPair&, const SplitPair&) = default;
};
std::vector<SplitPair> split_pairs(const Graph& g);

/// "n m" followed by m "u v" lines.
std::string to_edge_list_text(const Graph& g);

namespace graphs {
Graph cycle(int n);
Graph path(int n);
Graph complete(int n);
/// Triangle 0,1,2 with pendants 3-0, 4-1, 5-2.
Graph net();
/// 4-cycle 0-1-2-3 with pendants 4-0 and 5-2.
Graph half_cube();
}  // namespace graphs

}  // namespace lrw1
