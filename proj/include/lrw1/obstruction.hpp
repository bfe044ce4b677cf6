#pragma once

#include <functional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "lrw1/canonical.hpp"
#include "lrw1/graph.hpp"

namespace lrw1 {

/// Membership test for a vertex-minor-closed class. Callers guarantee it is
/// isomorphism invariant; debug builds spot-check this on relabelings.
using ClassPredicate = std::function<bool(const Graph&)>;

bool lrw_at_most_one(const Graph& g);
bool rw_at_most_one(const Graph& g);

/// Every H in the local-equivalence orbit of g is outside the class while
/// each H \ v is inside it.
bool is_obstruction(const Graph& g, const ClassPredicate& member);

struct ObstructionOrbit {
  /// Least canonical form of the orbit.
  CanonicalForm representative;
  std::set<CanonicalForm> members;
};

inline constexpr int kMaxVerifyOrder = 8;

/// Obstructions with at most n_max vertices, one entry per local-equivalence
/// orbit, sorted by representative.
std::vector<ObstructionOrbit> find_obstructions(int n_max, const ClassPredicate& member);

/// The three excluded vertex-minors, tested in this order.
struct Pattern {
  std::string name;
  Graph graph;
};
const std::vector<Pattern>& main_theorem_patterns();

/// Memoized vertex-minor test against fixed patterns. A graph of the
/// pattern's order contains it iff it lies in the pattern's orbit; a larger
/// graph contains it iff some deletion of some orbit member does. Results are
/// stored per canonical form and shared across the whole orbit. Not thread
/// safe; use one instance per worker.
class VertexMinorMemo {
 public:
  explicit VertexMinorMemo(std::vector<Graph> patterns);

  bool contains(const Graph& g, std::size_t pattern);
  bool contains(const CanonicalForm& f, std::size_t pattern);
  std::size_t pattern_count() const { return patterns_.size(); }

 private:
  const std::set<CanonicalForm>& orbit_of(const CanonicalForm& f);

  struct PatternInfo {
    int order;
    std::set<CanonicalForm> orbit;
  };
  std::vector<PatternInfo> patterns_;
  std::unordered_map<CanonicalForm, std::set<CanonicalForm>> orbit_cache_;
  std::vector<std::unordered_map<CanonicalForm, bool>> results_;
};

struct Counterexample {
  CanonicalForm form;
  int lrw;
  /// Names of the patterns found as vertex-minors.
  std::vector<std::string> vm_hits;
};

struct ObstructionReport {
  int n_max = 0;
  long graphs_checked = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<ObstructionOrbit> obstructions_found;
  /// classes_per_order[n] for n = 0..n_max (n = 0 is not checked).
  std::vector<long> classes_per_order;
};

struct VerifyOptions {
  int jobs = 1;
  /// Append-only file of finished classes; existing entries are reused.
  std::string checkpoint_path;
};

/// Compares lrw(G) <= 1 against "no pattern is a vertex-minor of G" for
/// every class with 1..n_max vertices, and collects the lrw <= 1
/// obstructions. Throws std::invalid_argument for n_max outside 1..8.
ObstructionReport verify_main_theorem(int n_max, const VerifyOptions& options = {});

std::string format_report_text(const ObstructionReport& report);
std::string format_report_json(const ObstructionReport& report);

}  // namespace lrw1
