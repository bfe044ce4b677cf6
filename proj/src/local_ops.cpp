#include "lrw1/local_ops.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace lrw1 {

Graph local_complement(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  const std::uint32_t nbhd = g.row(v);
  std::vector<std::uint32_t> rows(g.rows().begin(), g.rows().end());
  for (int x : VertexSet(nbhd)) rows[x] ^= nbhd & ~(std::uint32_t{1} << x);
  return Graph::from_rows(g.order(), rows);
}

Graph apply_sequence(const Graph& g, const VmSequence& seq) {
  Graph cur = g;
  for (const VmStep& step : seq.steps)
    cur = step.kind == VmStep::Kind::Complement ? local_complement(cur, step.vertex) : delete_vertex(cur, step.vertex);
  return cur;
}

std::vector<VmStep> steps_in_source_labels(int source_order, const VmSequence& seq) {
  std::vector<int> label(source_order);
  for (int i = 0; i < source_order; ++i) label[i] = i;
  std::vector<VmStep> out;
  for (const VmStep& step : seq.steps) {
    if (step.vertex < 0 || step.vertex >= static_cast<int>(label.size()))
      throw std::invalid_argument("sequence step out of range");
    out.push_back({step.kind, label[step.vertex]});
    if (step.kind == VmStep::Kind::Delete) label.erase(label.begin() + step.vertex);
  }
  return out;
}

std::set<CanonicalForm> orbit(const Graph& g) {
  std::set<CanonicalForm> seen{canonical_form(g)};
  std::deque<CanonicalForm> queue{*seen.begin()};
  while (!queue.empty()) {
    const Graph cur = queue.front().graph();
    queue.pop_front();
    for (int v = 0; v < cur.order(); ++v) {
      CanonicalForm next = canonical_form(local_complement(cur, v));
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return seen;
}

bool is_locally_equivalent(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return false;
  return orbit(g).contains(canonical_form(h));
}

std::optional<VmSequence> contains_vertex_minor(const Graph& g, const Graph& h) {
  if (h.order() > g.order()) return std::nullopt;
  const CanonicalForm target = canonical_form(h);

  // Each visited class keeps the concrete graph actually reached from g and
  // the step that reached it, so the witness replays exactly.
  struct Node {
    Graph graph;
    int parent;
    VmStep step;
  };
  std::vector<Node> nodes{{g, -1, {}}};
  std::unordered_map<CanonicalForm, int> index{{canonical_form(g), 0}};
  std::size_t head = 0;

  auto witness = [&](int at) {
    VmSequence seq;
    for (int i = at; nodes[i].parent >= 0; i = nodes[i].parent) seq.steps.push_back(nodes[i].step);
    std::reverse(seq.steps.begin(), seq.steps.end());
    return seq;
  };
  if (g.order() == h.order() && index.begin()->first == target) return witness(0);

  while (head < nodes.size()) {
    const int at = static_cast<int>(head++);
    const Graph cur = nodes[at].graph;
    auto visit = [&](Graph next, VmStep step) -> bool {
      CanonicalForm key = canonical_form(next);
      if (index.contains(key)) return false;
      const bool hit = key == target;
      index.emplace(std::move(key), static_cast<int>(nodes.size()));
      nodes.push_back({std::move(next), at, step});
      return hit;
    };
    for (int v = 0; v < cur.order(); ++v)
      if (visit(local_complement(cur, v), {VmStep::Kind::Complement, v})) return witness(static_cast<int>(nodes.size()) - 1);
    if (cur.order() > h.order())
      for (int v = 0; v < cur.order(); ++v)
        if (visit(delete_vertex(cur, v), {VmStep::Kind::Delete, v})) return witness(static_cast<int>(nodes.size()) - 1);
  }
  return std::nullopt;
}

}  // namespace lrw1
