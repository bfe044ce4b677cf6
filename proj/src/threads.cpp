#include "lrw1/threads.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lrw1/gf2.hpp"

namespace lrw1 {

const char* to_string(ThreadLabel l) {
  switch (l) {
    case ThreadLabel::L: return "L";
    case ThreadLabel::R: return "R";
    case ThreadLabel::LR: return "LR";
  }
  return "?";
}

bool validate_thread_block(const ThreadBlock& block) {
  const Graph& g = block.graph;
  const auto& v = block.ordering.order;
  const int n = g.order();
  if (n < 2 || !block.ordering.is_permutation_of(n) || static_cast<int>(block.labels.size()) != n) return false;
  const auto [a, b] = block.thread_edge;
  if (v.front() != a || v.back() != b || !g.adjacent(a, b)) return false;
  if (block.labels[a] != ThreadLabel::R || block.labels[b] != ThreadLabel::L) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const bool expected = looks_right(block.labels[v[i]]) && looks_left(block.labels[v[j]]);
      if (g.adjacent(v[i], v[j]) != expected) return false;
    }
  return true;
}

AssembledThreadGraph assemble(std::span<const ThreadBlock> blocks) {
  if (blocks.empty()) throw std::invalid_argument("assemble needs at least one block");
  int total = 0;
  for (const auto& b : blocks) {
    if (!validate_thread_block(b)) throw std::invalid_argument("assemble: invalid thread block");
    total += b.graph.order();
  }
  total -= static_cast<int>(blocks.size()) - 1;
  if (total > kMaxVertices) throw std::invalid_argument("assembled graph exceeds 32 vertices");

  Graph out(total);
  AssembledThreadGraph result{Graph(0), {}};
  int next_label = 0;
  int glue = -1;
  for (const auto& b : blocks) {
    std::vector<int> host(b.graph.order(), -1);
    if (glue >= 0) host[b.thread_edge.first] = glue;
    for (int x = 0; x < b.graph.order(); ++x)
      if (host[x] < 0) host[x] = next_label++;
    for (auto [x, y] : b.graph.edges()) out.add_edge(host[x], host[y]);
    if (result.thread.empty()) result.thread.push_back(host[b.thread_edge.first]);
    glue = host[b.thread_edge.second];
    result.thread.push_back(glue);
  }
  result.graph = out;
  return result;
}

std::vector<int> ThreadDecomposition::thread() const {
  if (blocks.empty()) return single_vertex >= 0 ? std::vector<int>{single_vertex} : std::vector<int>{};
  std::vector<int> out{blocks.front().first()};
  for (const auto& b : blocks) out.push_back(b.last());
  return out;
}

VertexSet ThreadDecomposition::vertices() const {
  VertexSet out;
  if (single_vertex >= 0) out.insert(single_vertex);
  for (const auto& b : blocks)
    for (int h : b.host) out.insert(h);
  return out;
}

Graph assemble(const ThreadCertificate& certificate) {
  Graph out(certificate.host_order);
  VertexSet covered;
  for (const auto& comp : certificate.components) {
    VertexSet comp_vertices;
    if (comp.blocks.empty()) {
      if (comp.single_vertex < 0 || comp.single_vertex >= certificate.host_order)
        throw std::invalid_argument("degenerate component without a valid vertex");
      comp_vertices.insert(comp.single_vertex);
    }
    for (std::size_t i = 0; i < comp.blocks.size(); ++i) {
      const auto& pb = comp.blocks[i];
      if (!validate_thread_block(pb.block)) throw std::invalid_argument("invalid thread block");
      if (static_cast<int>(pb.host.size()) != pb.block.graph.order())
        throw std::invalid_argument("block host map has the wrong size");
      VertexSet mine;
      for (int h : pb.host) {
        if (h < 0 || h >= certificate.host_order || mine.contains(h))
          throw std::invalid_argument("block host map is not injective into the host");
        mine.insert(h);
      }
      VertexSet allowed = i > 0 ? VertexSet::single(comp.blocks[i - 1].last()) : VertexSet();
      if (i > 0 && pb.first() != comp.blocks[i - 1].last())
        throw std::invalid_argument("consecutive blocks are not glued at the thread vertex");
      if (!((mine & comp_vertices) - allowed).empty())
        throw std::invalid_argument("thread blocks overlap outside the glue vertex");
      comp_vertices |= mine;
      for (auto [x, y] : pb.block.graph.edges()) out.add_edge(pb.host[x], pb.host[y]);
    }
    if (!(comp_vertices & covered).empty()) throw std::invalid_argument("components overlap");
    covered |= comp_vertices;
  }
  if (covered != out.vertices()) throw std::invalid_argument("certificate does not cover every host vertex");
  return out;
}

namespace {

// Labels a connected graph from an order of width <= 1, processing one
// vertex at a time against the set P of already processed vertices. With
// cross = neighbors of P outside P, the next vertex v is
//   in cross, cross == {v}   -> a thread vertex: it closes the current block
//   in cross, cross != {v}   -> {L}, or {L,R} if it has unprocessed neighbors
//   not in cross             -> {R}
std::vector<PlacedThreadBlock> cut_into_blocks(const Graph& h, const LinearOrder& order, std::span<const int> host) {
  const int n = h.order();
  const auto& ord = order.order;
  std::vector<ThreadLabel> within(n, ThreadLabel::R);
  std::vector<PlacedThreadBlock> blocks;
  int start = 0;
  VertexSet processed = VertexSet::single(ord[0]);

  auto close_block = [&](int end) {
    std::vector<int> members(ord.begin() + start, ord.begin() + end + 1);
    VertexSet set;
    for (int v : members) set.insert(v);
    PlacedThreadBlock pb;
    pb.block.graph = induced_subgraph(h, set);
    const std::vector<int> sorted = set.to_vector();
    std::vector<int> local(n, -1);
    for (int x = 0; x < static_cast<int>(sorted.size()); ++x) local[sorted[x]] = x;
    pb.block.labels.assign(sorted.size(), ThreadLabel::R);
    for (int v : members) {
      pb.block.ordering.order.push_back(local[v]);
      pb.block.labels[local[v]] = within[v];
    }
    pb.block.labels[local[ord[start]]] = ThreadLabel::R;
    pb.block.labels[local[ord[end]]] = ThreadLabel::L;
    pb.block.thread_edge = {local[ord[start]], local[ord[end]]};
    for (int v : sorted) pb.host.push_back(host[v]);
    if (!validate_thread_block(pb.block)) throw std::logic_error("derived thread block fails validation");
    blocks.push_back(std::move(pb));
    start = end;
  };

  for (int k = 1; k < n; ++k) {
    const int v = ord[k];
    VertexSet cross;
    for (int u : processed) cross |= h.neighbors(u);
    cross = cross - processed;
    const bool later_neighbors = !(h.neighbors(v) - processed - VertexSet::single(v)).empty();
    if (cross == VertexSet::single(v)) {
      within[v] = ThreadLabel::L;
      close_block(k);
    } else if (cross.contains(v)) {
      within[v] = later_neighbors ? ThreadLabel::LR : ThreadLabel::L;
    } else if (!cross.empty() && later_neighbors) {
      within[v] = ThreadLabel::R;
    } else {
      throw std::logic_error("adjacency pattern outside the width-1 cases");
    }
    processed.insert(v);
  }
  return blocks;
}

}  // namespace

std::optional<ThreadCertificate> recognize_thread_graph(const Graph& g) {
  ThreadCertificate cert;
  cert.host_order = g.order();
  for (VertexSet comp : connected_components(g)) {
    ThreadDecomposition d;
    if (comp.size() == 1) {
      d.single_vertex = comp.first();
      cert.components.push_back(std::move(d));
      continue;
    }
    const Graph h = induced_subgraph(g, comp);
    auto order = is_lrw_at_most(h, 1);
    if (!order) return std::nullopt;
    const std::vector<int> host = comp.to_vector();
    d.blocks = cut_into_blocks(h, *order, host);
    cert.components.push_back(std::move(d));
  }
  return cert;
}

ThreadBlock permute_constant_interval(const ThreadBlock& block, int i, int j, std::span<const int> perm) {
  const int n = block.graph.order();
  if (i < 0 || j >= n || i > j) throw std::invalid_argument("interval out of range");
  const auto& v = block.ordering.order;
  for (int p = i; p <= j; ++p)
    if (block.labels[v[p]] != block.labels[v[i]]) throw std::invalid_argument("interval is not L-constant");
  LinearOrder check{std::vector<int>(perm.begin(), perm.end())};
  if (!check.is_permutation_of(j - i + 1)) throw std::invalid_argument("perm is not a permutation of the interval");

  ThreadBlock out = block;
  for (int p = i; p <= j; ++p) out.ordering.order[p] = v[i + perm[p - i]];
  out.thread_edge = {out.ordering.order.front(), out.ordering.order.back()};
  return out;
}

std::optional<ThreadBlock> find_thread_block(const Graph& g, int a, int b) {
  const int n = g.order();
  if (a < 0 || b < 0 || a >= n || b >= n || a == b || !g.adjacent(a, b)) return std::nullopt;

  // In a thread block a vertex looks left iff it has an earlier neighbor and
  // right iff it has a later one (every vertex sees a or b), so only the
  // ordering needs searching.
  std::vector<int> order{a};
  VertexSet used = VertexSet::single(a) | VertexSet::single(b);
  std::optional<ThreadBlock> found;

  auto try_complete = [&]() {
    ThreadBlock blk;
    blk.graph = g;
    blk.thread_edge = {a, b};
    blk.ordering.order = order;
    blk.ordering.order.push_back(b);
    blk.labels.assign(n, ThreadLabel::R);
    VertexSet before;
    for (int x : blk.ordering.order) {
      const bool left = !(g.neighbors(x) & before).empty();
      const bool right = !(g.neighbors(x) - before - VertexSet::single(x)).empty();
      blk.labels[x] = left && right ? ThreadLabel::LR : left ? ThreadLabel::L : ThreadLabel::R;
      before.insert(x);
    }
    blk.labels[a] = ThreadLabel::R;
    blk.labels[b] = ThreadLabel::L;
    if (validate_thread_block(blk)) found = std::move(blk);
  };

  auto extend = [&](auto& self, VertexSet prefix) -> void {
    if (found) return;
    if (static_cast<int>(order.size()) == n - 1) {
      try_complete();
      return;
    }
    for (int x : g.vertices() - used) {
      const VertexSet next = prefix | VertexSet::single(x);
      if (cutrank(g, next) > 1) continue;
      used.insert(x);
      order.push_back(x);
      self(self, next);
      order.pop_back();
      used.erase(x);
      if (found) return;
    }
  };
  extend(extend, VertexSet::single(a));
  return found;
}

ThreadPropertiesReport thread_properties_check(const Graph& g, const ThreadDecomposition& d) {
  ThreadPropertiesReport report;
  const std::vector<int> thread = d.thread();
  VertexSet on_thread;
  for (int t : thread) on_thread.insert(t);

  // Other components of the host play no part.
  const VertexSet component = d.vertices();
  Graph restricted(g.order());
  for (auto [x, y] : g.edges())
    if (component.contains(x) && component.contains(y)) restricted.add_edge(x, y);

  const VertexSet cuts = cut_vertices(restricted);
  VertexSet interior;
  for (std::size_t i = 1; i + 1 < thread.size(); ++i) interior.insert(thread[i]);
  if (!(cuts - on_thread).empty() || !(interior - cuts).empty()) {
    report.cut_vertices_on_thread = false;
    report.failures.push_back("cut vertices are not sandwiched by the thread");
  }

  if (is_two_connected(induced_subgraph(g, component)) && d.blocks.size() != 1) {
    report.two_connected_single_edge = false;
    report.failures.push_back("2-connected thread graph with a thread longer than one edge");
  }

  const std::size_t m = d.blocks.size();
  for (std::size_t s = 0; s < m && report.intervals_induced; ++s)
    for (std::size_t t = s; t < m; ++t) {
      VertexSet u;
      Graph sub_edges(g.order());
      for (std::size_t i = s; i <= t; ++i) {
        const auto& pb = d.blocks[i];
        for (int h : pb.host) u.insert(h);
        for (auto [x, y] : pb.block.graph.edges()) sub_edges.add_edge(pb.host[x], pb.host[y]);
      }
      bool good = is_connected(induced_subgraph(g, u));
      for (int x : u)
        if ((g.neighbors(x) & u) != sub_edges.neighbors(x)) good = false;
      VertexSet sub_thread = VertexSet::single(d.blocks[s].first());
      for (std::size_t i = s; i <= t; ++i) sub_thread.insert(d.blocks[i].last());
      if (sub_thread != (on_thread & u)) good = false;
      if (!good) {
        report.intervals_induced = false;
        report.failures.push_back("block interval " + std::to_string(s + 1) + ".." + std::to_string(t + 1) +
                                  " is not a connected induced subgraph with thread P intersected");
        break;
      }
    }

  bool path = static_cast<int>(thread.size()) == on_thread.size();
  for (std::size_t i = 0; path && i < thread.size(); ++i)
    for (std::size_t j = i + 1; j < thread.size(); ++j)
      if (g.adjacent(thread[i], thread[j]) != (j == i + 1)) path = false;
  if (!path) {
    report.thread_induced_path = false;
    report.failures.push_back("thread is not an induced path");
  }
  return report;
}

std::string to_text(const ThreadCertificate& certificate) {
  std::ostringstream out;
  out << "components " << certificate.components.size() << '\n';
  for (std::size_t c = 0; c < certificate.components.size(); ++c) {
    const auto& d = certificate.components[c];
    out << "component " << c + 1 << ": thread";
    for (int t : d.thread()) out << ' ' << t;
    out << '\n';
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
      const auto& pb = d.blocks[i];
      out << "block " << i + 1 << ':';
      for (int x : pb.block.ordering.order) out << ' ' << pb.host[x] << ':' << to_string(pb.block.labels[x]);
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace lrw1
