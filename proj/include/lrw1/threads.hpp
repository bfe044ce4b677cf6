#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lrw1/graph.hpp"
#include "lrw1/widths.hpp"

namespace lrw1 {

enum class ThreadLabel : std::uint8_t { L = 1, R = 2, LR = 3 };

constexpr bool looks_left(ThreadLabel l) { return static_cast<std::uint8_t>(l) & 1u; }
constexpr bool looks_right(ThreadLabel l) { return static_cast<std::uint8_t>(l) & 2u; }
const char* to_string(ThreadLabel l);

/// Thread block on its own vertex labels. For positions i < j of the
/// ordering, v_i ~ v_j exactly when v_i looks right and v_j looks left.
struct ThreadBlock {
  Graph graph;
  std::pair<int, int> thread_edge;
  LinearOrder ordering;
  /// Indexed by vertex of `graph`.
  std::vector<ThreadLabel> labels;
};

/// Checks the thread edge, the endpoint labels and every pair of the
/// edge rule.
bool validate_thread_block(const ThreadBlock& block);

struct AssembledThreadGraph {
  Graph graph;
  std::vector<int> thread;
};

/// Glues b_i to a_{i+1}. Block 0 keeps its labels; each later block's
/// non-glued vertices get fresh labels in increasing local order. Throws
/// std::invalid_argument on an empty sequence or an invalid block.
AssembledThreadGraph assemble(std::span<const ThreadBlock> blocks);

/// A block placed inside a host graph: host[x] is the host vertex of local x.
struct PlacedThreadBlock {
  ThreadBlock block;
  std::vector<int> host;

  int first() const { return host[block.ordering.order.front()]; }
  int last() const { return host[block.ordering.order.back()]; }
};

/// Decomposition of one connected component of a host graph.
struct ThreadDecomposition {
  std::vector<PlacedThreadBlock> blocks;
  /// The component when it is a single vertex (blocks empty), else -1.
  int single_vertex = -1;

  /// a_1, ..., b_m in host labels.
  std::vector<int> thread() const;
  VertexSet vertices() const;
};

/// One decomposition per connected component, ordered by smallest vertex.
struct ThreadCertificate {
  int host_order = 0;
  std::vector<ThreadDecomposition> components;
};

/// Rebuilds the host graph, rejecting blocks that overlap other than at
/// consecutive glue vertices or that leave host vertices uncovered.
Graph assemble(const ThreadCertificate& certificate);

/// Cuts an order of width <= 1 into thread blocks at the vertices whose
/// processed neighborhood is exactly themselves.
std::optional<ThreadCertificate> recognize_thread_graph(const Graph& g);

/// Permutes positions i..j (inclusive, 0-based) of an L-constant interval;
/// perm is a permutation of 0..j-i. Throws std::invalid_argument otherwise.
ThreadBlock permute_constant_interval(const ThreadBlock& block, int i, int j, std::span<const int> perm);

/// Single-block witness with thread edge (a, b) on all of g, if one exists.
std::optional<ThreadBlock> find_thread_block(const Graph& g, int a, int b);

struct ThreadPropertiesReport {
  bool cut_vertices_on_thread = true;
  bool two_connected_single_edge = true;
  bool intervals_induced = true;
  bool thread_induced_path = true;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Checks d against the component of host graph g that it covers.
ThreadPropertiesReport thread_properties_check(const Graph& g, const ThreadDecomposition& d);

/// One line per component and per block, blocks listing "vertex:label" in
/// thread order, e.g. `block 1: 0:R 3:L 1:L`.
std::string to_text(const ThreadCertificate& certificate);

}  // namespace lrw1
