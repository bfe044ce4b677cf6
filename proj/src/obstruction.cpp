#include "lrw1/obstruction.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "lrw1/io.hpp"
#include "lrw1/local_ops.hpp"
#include "lrw1/widths.hpp"

namespace lrw1 {

bool lrw_at_most_one(const Graph& g) { return is_lrw_at_most(g, 1).has_value(); }

bool rw_at_most_one(const Graph& g) { return rw_exact(g).width <= 1; }

namespace {

#ifndef NDEBUG
void check_invariance(const Graph& g, const ClassPredicate& member, bool expected) {
  std::mt19937 rng(0x5eed + static_cast<unsigned>(g.order()));
  std::vector<int> perm(g.order());
  for (int round = 0; round < 2; ++round) {
    for (int i = 0; i < g.order(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    if (member(relabel(g, perm)) != expected)
      throw std::logic_error("class predicate is not invariant under relabeling");
  }
}
#endif

// Memoizes the predicate by canonical form.
class MemberCache {
 public:
  explicit MemberCache(const ClassPredicate& member) : member_(member) {}

  bool operator()(const CanonicalForm& f) {
    if (auto it = cache_.find(f); it != cache_.end()) return it->second;
    const Graph g = f.graph();
    const bool value = member_(g);
#ifndef NDEBUG
    check_invariance(g, member_, value);
#endif
    cache_.emplace(f, value);
    return value;
  }

 private:
  const ClassPredicate& member_;
  std::unordered_map<CanonicalForm, bool> cache_;
};

// Outside the class, every single deletion inside it.
bool minimally_excluded(const Graph& g, MemberCache& member) {
  if (member(canonical_form(g))) return false;
  for (int v = 0; v < g.order(); ++v)
    if (!member(canonical_form(delete_vertex(g, v)))) return false;
  return true;
}

bool obstruction_with_orbit(const Graph& g, MemberCache& member, const std::set<CanonicalForm>& orb) {
  if (!minimally_excluded(g, member)) return false;
  for (const auto& f : orb)
    if (!minimally_excluded(f.graph(), member)) return false;
  return true;
}

}  // namespace

bool is_obstruction(const Graph& g, const ClassPredicate& member) {
  MemberCache cache(member);
  if (!minimally_excluded(g, cache)) return false;
  return obstruction_with_orbit(g, cache, orbit(g));
}

std::vector<ObstructionOrbit> find_obstructions(int n_max, const ClassPredicate& member) {
  if (n_max < 0 || n_max > kMaxVerifyOrder) throw std::invalid_argument("n_max must be in 0..8");
  MemberCache cache(member);
  std::vector<ObstructionOrbit> found;
  std::set<CanonicalForm> claimed;
  for (int n = 1; n <= n_max; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const CanonicalForm f = canonical_form(g);
      if (claimed.contains(f) || !minimally_excluded(g, cache)) continue;
      std::set<CanonicalForm> orb = orbit(g);
      claimed.insert(orb.begin(), orb.end());
      if (!obstruction_with_orbit(g, cache, orb)) continue;
      found.push_back({*orb.begin(), std::move(orb)});
    }
  std::sort(found.begin(), found.end(),
            [](const ObstructionOrbit& a, const ObstructionOrbit& b) { return a.representative < b.representative; });
  return found;
}

const std::vector<Pattern>& main_theorem_patterns() {
  static const std::vector<Pattern> patterns{
      {"C5", graphs::cycle(5)}, {"N", graphs::net()}, {"Q", graphs::half_cube()}};
  return patterns;
}

VertexMinorMemo::VertexMinorMemo(std::vector<Graph> patterns) : results_(patterns.size()) {
  for (const Graph& p : patterns) patterns_.push_back({p.order(), orbit(p)});
}

const std::set<CanonicalForm>& VertexMinorMemo::orbit_of(const CanonicalForm& f) {
  auto it = orbit_cache_.find(f);
  if (it != orbit_cache_.end()) return it->second;
  return orbit_cache_.emplace(f, orbit(f.graph())).first->second;
}

bool VertexMinorMemo::contains(const Graph& g, std::size_t pattern) { return contains(canonical_form(g), pattern); }

bool VertexMinorMemo::contains(const CanonicalForm& f, std::size_t pattern) {
  const PatternInfo& info = patterns_.at(pattern);
  if (f.order() < info.order) return false;
  auto& memo = results_[pattern];
  if (auto it = memo.find(f); it != memo.end()) return it->second;

  const std::set<CanonicalForm>& orb = orbit_of(f);
  bool found = false;
  if (f.order() == info.order) {
    found = info.orbit.contains(f);
  } else {
    for (auto m = orb.begin(); m != orb.end() && !found; ++m) {
      const Graph g = m->graph();
      for (int v = 0; v < g.order() && !found; ++v) found = contains(canonical_form(delete_vertex(g, v)), pattern);
    }
  }
  for (const auto& m : orb) memo.emplace(m, found);
  return found;
}

namespace {

struct ClassResult {
  int lrw = 0;
  std::vector<std::string> hits;
};

std::string hits_field(const std::vector<std::string>& hits) {
  if (hits.empty()) return "-";
  std::string out;
  for (const auto& h : hits) out += (out.empty() ? "" : ",") + h;
  return out;
}

std::map<CanonicalForm, ClassResult> load_checkpoint(const std::string& path) {
  std::map<CanonicalForm, ClassResult> done;
  std::ifstream in(path);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream fields(line);
    std::string g6, hits;
    ClassResult r;
    if (!(fields >> g6 >> r.lrw >> hits)) {
      // A torn final line from an interrupted run is dropped.
      if (in.peek() == EOF) break;
      throw ParseError(number, "malformed checkpoint entry");
    }
    if (hits != "-") {
      std::stringstream parts(hits);
      std::string h;
      while (std::getline(parts, h, ',')) r.hits.push_back(h);
    }
    done.emplace(canonical_form(from_graph6(g6)), std::move(r));
  }
  return done;
}

// Short-circuits on the first pattern found unless `all` is set.
ClassResult evaluate(const Graph& g, VertexMinorMemo& memo, bool all) {
  ClassResult r;
  r.lrw = lrw_exact(g).width;
  const auto& patterns = main_theorem_patterns();
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    if (memo.contains(g, p)) {
      r.hits.push_back(patterns[p].name);
      if (!all) break;
    }
  }
  return r;
}

bool disagrees(const ClassResult& r) { return (r.lrw <= 1) != r.hits.empty(); }

std::vector<Graph> patterns_graphs() {
  std::vector<Graph> out;
  for (const auto& p : main_theorem_patterns()) out.push_back(p.graph);
  return out;
}

}  // namespace

ObstructionReport verify_main_theorem(int n_max, const VerifyOptions& options) {
  if (n_max < 1 || n_max > kMaxVerifyOrder) throw std::invalid_argument("n_max must be in 1..8");
  const int jobs = std::max(1, options.jobs);

  ObstructionReport report;
  report.n_max = n_max;
  report.classes_per_order.push_back(1);
  std::vector<Graph> classes;
  for (int n = 1; n <= n_max; ++n) {
    auto batch = enumerate_graphs(n);
    report.classes_per_order.push_back(static_cast<long>(batch.size()));
    classes.insert(classes.end(), batch.begin(), batch.end());
  }
  report.graphs_checked = static_cast<long>(classes.size());

  std::map<CanonicalForm, ClassResult> done;
  std::ofstream checkpoint;
  if (!options.checkpoint_path.empty()) {
    done = load_checkpoint(options.checkpoint_path);
    checkpoint.open(options.checkpoint_path, std::ios::app);
    if (!checkpoint) throw std::runtime_error("cannot open checkpoint file " + options.checkpoint_path);
  }

  // Worker w takes classes w, w + jobs, ...; each slot is written once.
  std::vector<ClassResult> results(classes.size());
  std::mutex checkpoint_mutex;
  auto work = [&](int w) {
    VertexMinorMemo memo(patterns_graphs());
    for (std::size_t i = w; i < classes.size(); i += jobs) {
      if (auto it = done.find(canonical_form(classes[i])); it != done.end()) {
        results[i] = it->second;
        continue;
      }
      results[i] = evaluate(classes[i], memo, false);
      if (checkpoint.is_open()) {
        std::lock_guard lock(checkpoint_mutex);
        checkpoint << to_graph6(classes[i]) << ' ' << results[i].lrw << ' ' << hits_field(results[i].hits)
                   << std::endl;
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
  }

  VertexMinorMemo memo(patterns_graphs());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (!disagrees(results[i])) continue;
    ClassResult full = evaluate(classes[i], memo, true);
    report.counterexamples.push_back({canonical_form(classes[i]), full.lrw, std::move(full.hits)});
  }

  report.obstructions_found = find_obstructions(n_max, lrw_at_most_one);
  return report;
}

std::string format_report_text(const ObstructionReport& report) {
  std::ostringstream out;
  out << "max-n " << report.n_max << '\n';
  for (int n = 1; n < static_cast<int>(report.classes_per_order.size()); ++n)
    out << "classes n=" << n << ": " << report.classes_per_order[n] << '\n';
  out << "graphs checked: " << report.graphs_checked << '\n';
  for (const auto& c : report.counterexamples)
    out << "counterexample " << to_graph6(c.form.graph()) << " lrw=" << c.lrw << " hits=" << hits_field(c.vm_hits)
        << '\n';
  for (const auto& o : report.obstructions_found)
    out << "obstruction " << to_graph6(o.representative.graph()) << " n=" << o.representative.order()
        << " orbit-size=" << o.members.size() << '\n';
  const std::size_t orbits = report.obstructions_found.size();
  out << report.counterexamples.size() << " counterexamples, " << orbits << " obstruction orbit"
      << (orbits == 1 ? "" : "s") << '\n';
  return out.str();
}

std::string format_report_json(const ObstructionReport& report) {
  nlohmann::json j;
  j["n_max"] = report.n_max;
  j["graphs_checked"] = report.graphs_checked;
  j["classes_per_order"] = report.classes_per_order;
  j["counterexamples"] = nlohmann::json::array();
  for (const auto& c : report.counterexamples)
    j["counterexamples"].push_back({{"graph6", to_graph6(c.form.graph())}, {"lrw", c.lrw}, {"vm_hits", c.vm_hits}});
  j["obstructions"] = nlohmann::json::array();
  for (const auto& o : report.obstructions_found)
    j["obstructions"].push_back({{"graph6", to_graph6(o.representative.graph())},
                                 {"order", o.representative.order()},
                                 {"orbit_size", o.members.size()}});
  return j.dump(2) + "\n";
}

}  // namespace lrw1
