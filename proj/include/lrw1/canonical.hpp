#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "lrw1/graph.hpp"

namespace lrw1 {

/// Isomorphism-invariant key: byte 0 is n, followed by the upper triangle of
/// the canonically relabeled adjacency matrix (column order x(0,1), x(0,2),
/// x(1,2), x(0,3), ...) packed most significant bit first.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  /// Trusts that `bytes` came from bytes() of another form.
  static CanonicalForm from_bytes(std::string bytes) {
    CanonicalForm f;
    f.bytes_ = std::move(bytes);
    return f;
  }

  int order() const { return bytes_.empty() ? 0 : static_cast<unsigned char>(bytes_[0]); }
  const std::string& bytes() const { return bytes_; }
  /// The canonical representative graph.
  Graph graph() const;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    return a.bytes_ <=> b.bytes_;
  }

 private:
  std::string bytes_;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// Canonical position i holds original vertex order[i].
  std::vector<int> order;
};

/// Minimum encoding over all relabelings, found position by position with
/// prefix pruning and merging of placements that have equal continuations.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
bool are_isomorphic(const Graph& g, const Graph& h);

/// Bytes of the fixed-length encoding of g under its current labels.
CanonicalForm encode_labeled(const Graph& g);

inline constexpr int kMaxEnumerationOrder = 8;

/// One representative per isomorphism class on n vertices, sorted by
/// canonical form; every representative is its own canonical graph.
std::vector<Graph> enumerate_graphs(int n);

}  // namespace lrw1

template <>
struct std::hash<lrw1::CanonicalForm> {
  std::size_t operator()(const lrw1::CanonicalForm& f) const noexcept { return std::hash<std::string>{}(f.bytes()); }
};
