#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lrw1/graph.hpp"

namespace lrw1 {

/// Dense matrix over GF(2); row r occupies words [r*stride, (r+1)*stride).
class BitMatrix {
 public:
  BitMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool get(int r, int c) const { return (words_[index(r, c)] >> (c % 64)) & 1u; }
  void set(int r, int c, bool value);

  std::span<std::uint64_t> row_words(int r) { return {words_.data() + r * stride_, static_cast<std::size_t>(stride_)}; }
  std::span<const std::uint64_t> row_words(int r) const {
    return {words_.data() + r * stride_, static_cast<std::size_t>(stride_)};
  }

  /// M(G)[X, Y] with rows and columns in increasing vertex order.
  static BitMatrix submatrix(const Graph& g, VertexSet rows, VertexSet cols);

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * stride_ + c / 64; }

  int rows_;
  int cols_;
  int stride_;
  std::vector<std::uint64_t> words_;
};

int gf2_rank(const BitMatrix& m);

/// Rank of up to 32 packed 32-bit rows.
int gf2_rank(std::span<const std::uint32_t> rows);

/// rank(M(G)[X, V \ X]).
int cutrank(const Graph& g, VertexSet x);

}  // namespace lrw1
