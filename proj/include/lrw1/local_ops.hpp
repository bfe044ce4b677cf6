#pragma once

#include <optional>
#include <set>
#include <vector>

#include "lrw1/canonical.hpp"
#include "lrw1/graph.hpp"

namespace lrw1 {

/// G*v: toggles every pair inside N(v).
Graph local_complement(const Graph& g, int v);

struct VmStep {
  enum class Kind { Complement, Delete };
  Kind kind;
  /// Label in the graph current at this step; deletions compact later labels.
  int vertex;
  friend bool operator==(const VmStep&, const VmStep&) = default;
};

struct VmSequence {
  std::vector<VmStep> steps;
};

/// Throws std::invalid_argument when a step's vertex is out of range.
Graph apply_sequence(const Graph& g, const VmSequence& seq);

/// Same steps with every vertex reported by its label in the source graph.
std::vector<VmStep> steps_in_source_labels(int source_order, const VmSequence& seq);

/// Canonical forms of all graphs locally equivalent to g.
std::set<CanonicalForm> orbit(const Graph& g);
bool is_locally_equivalent(const Graph& g, const Graph& h);

/// Breadth-first search over canonical forms of graphs reachable by single
/// local complementations and single deletions (deletions only while the
/// result keeps at least |V(h)| vertices). Returns a shortest sequence whose
/// replay from g yields a graph isomorphic to h.
std::optional<VmSequence> contains_vertex_minor(const Graph& g, const Graph& h);

}  // namespace lrw1
