#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrw1/graph.hpp"

namespace lrw1 {

struct EliminationStep {
  enum class Reason { Pendant, StrongTwin, WeakTwin };
  /// Vertex removed, in the input graph's labels.
  int vertex;
  Reason reason;
  /// Neighbor of a pendant, or the twin kept in the graph.
  int partner;
};

struct EliminationSequence {
  std::vector<EliminationStep> steps;
};

const char* to_string(EliminationStep::Reason r);

inline constexpr int kMaxDistanceOracleOrder = 8;

/// Literal definition: every connected induced subgraph preserves all
/// pairwise distances. Throws std::invalid_argument for n > 8.
bool is_distance_hereditary_oracle(const Graph& g);

/// Pendant and twin pruning, lowest eligible vertex first, inside each
/// component until one vertex per component is left.
std::optional<EliminationSequence> is_distance_hereditary(const Graph& g);

enum class ObstructionShape { NetGraph, TwoConnected, OneWhisker, TwoWhiskers, NotClassified };
const char* to_string(ObstructionShape s);

ObstructionShape classify_obstruction_shape(const Graph& g);

/// Two disjoint split pairs, a split pair with a pendant outside it, or two
/// pendants.
bool has_split_pendant_trichotomy(const Graph& g);

}  // namespace lrw1
