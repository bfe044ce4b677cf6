#include "lrw1/structure.hpp"

#include <stdexcept>

#include "lrw1/canonical.hpp"

namespace lrw1 {

const char* to_string(EliminationStep::Reason r) {
  switch (r) {
    case EliminationStep::Reason::Pendant: return "pendant";
    case EliminationStep::Reason::StrongTwin: return "strong-twin";
    case EliminationStep::Reason::WeakTwin: return "weak-twin";
  }
  return "?";
}

const char* to_string(ObstructionShape s) {
  switch (s) {
    case ObstructionShape::NetGraph: return "NetGraph";
    case ObstructionShape::TwoConnected: return "TwoConnected";
    case ObstructionShape::OneWhisker: return "OneWhisker";
    case ObstructionShape::TwoWhiskers: return "TwoWhiskers";
    case ObstructionShape::NotClassified: return "NotClassified";
  }
  return "?";
}

bool is_distance_hereditary_oracle(const Graph& g) {
  const int n = g.order();
  if (n > kMaxDistanceOracleOrder)
    throw std::invalid_argument("distance-hereditary oracle is limited to 8 vertices");
  std::vector<std::vector<int>> dist_g(n);
  for (int v = 0; v < n; ++v) dist_g[v] = bfs_distances(g, v);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const VertexSet x(mask);
    const Graph h = induced_subgraph(g, x);
    if (!is_connected(h)) continue;
    const std::vector<int> members = x.to_vector();
    for (int i = 0; i < h.order(); ++i) {
      const std::vector<int> dist_h = bfs_distances(h, i);
      for (int j = 0; j < h.order(); ++j)
        if (dist_h[j] != dist_g[members[i]][members[j]]) return false;
    }
  }
  return true;
}

std::optional<EliminationSequence> is_distance_hereditary(const Graph& g) {
  EliminationSequence seq;
  for (VertexSet comp : connected_components(g)) {
    VertexSet alive = comp;
    while (alive.size() > 1) {
      bool removed = false;
      for (int v : alive) {
        const VertexSet nv = g.neighbors(v) & alive;
        // A final K2 counts as a pair of strong twins.
        if (nv.size() == 1 && alive.size() > 2) {
          seq.steps.push_back({v, EliminationStep::Reason::Pendant, nv.first()});
          removed = true;
        } else {
          for (int w : alive - VertexSet::single(v)) {
            const VertexSet nw = g.neighbors(w) & alive;
            if (g.adjacent(v, w) && nv - VertexSet::single(w) == nw - VertexSet::single(v)) {
              seq.steps.push_back({v, EliminationStep::Reason::StrongTwin, w});
              removed = true;
            } else if (!g.adjacent(v, w) && nv == nw) {
              seq.steps.push_back({v, EliminationStep::Reason::WeakTwin, w});
              removed = true;
            }
            if (removed) break;
          }
        }
        if (removed) {
          alive.erase(v);
          break;
        }
      }
      if (!removed) return std::nullopt;
    }
  }
  return seq;
}

ObstructionShape classify_obstruction_shape(const Graph& g) {
  if (are_isomorphic(g, graphs::net())) return ObstructionShape::NetGraph;
  if (is_two_connected(g)) return ObstructionShape::TwoConnected;
  const VertexSet pendants = pendant_vertices(g);
  for (int u : pendants)
    if (is_two_connected(delete_vertex(g, u))) return ObstructionShape::OneWhisker;
  for (int u : pendants)
    for (int v : pendants) {
      if (v <= u) continue;
      const VertexSet nu = g.neighbors(u), nv = g.neighbors(v);
      if (!(nu & nv).empty() || nu.contains(v)) continue;
      if (is_two_connected(induced_subgraph(g, g.vertices() - VertexSet{u, v}))) return ObstructionShape::TwoWhiskers;
    }
  return ObstructionShape::NotClassified;
}

bool has_split_pendant_trichotomy(const Graph& g) {
  const VertexSet pendants = pendant_vertices(g);
  if (pendants.size() >= 2) return true;
  const auto pairs = split_pairs(g);
  for (const auto& p : pairs) {
    const VertexSet pair{p.u, p.v};
    if (!(pendants - pair).empty()) return true;
    for (const auto& q : pairs)
      if ((pair & VertexSet{q.u, q.v}).empty()) return true;
  }
  return false;
}

}  // namespace lrw1
