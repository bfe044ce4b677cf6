#include "lrw1/gf2.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace lrw1 {

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), stride_(std::max(1, (cols + 63) / 64)), words_(static_cast<std::size_t>(rows) * stride_) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

void BitMatrix::set(int r, int c, bool value) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  if (value)
    words_[index(r, c)] |= bit;
  else
    words_[index(r, c)] &= ~bit;
}

BitMatrix BitMatrix::submatrix(const Graph& g, VertexSet rows, VertexSet cols) {
  BitMatrix m(rows.size(), cols.size());
  int r = 0;
  for (int u : rows) {
    int c = 0;
    for (int v : cols) {
      if (g.adjacent(u, v)) m.set(r, c, true);
      ++c;
    }
    ++r;
  }
  return m;
}

int gf2_rank(const BitMatrix& m) {
  // Row reduction on a private copy; pivot column advances left to right.
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    auto w = m.row_words(r);
    rows.emplace_back(w.begin(), w.end());
  }
  int rank = 0;
  for (int c = 0; c < m.cols() && rank < static_cast<int>(rows.size()); ++c) {
    const std::size_t word = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const auto& row) { return row[word] & bit; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || !(rows[r][word] & bit)) continue;
      for (std::size_t k = 0; k < rows[r].size(); ++k) rows[r][k] ^= rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

int gf2_rank(std::span<const std::uint32_t> rows) {
  // XOR basis indexed by leading bit.
  std::array<std::uint32_t, 32> basis{};
  int rank = 0;
  for (std::uint32_t x : rows) {
    while (x) {
      const int top = 31 - std::countl_zero(x);
      if (!basis[top]) {
        basis[top] = x;
        ++rank;
        break;
      }
      x ^= basis[top];
    }
  }
  return rank;
}

int cutrank(const Graph& g, VertexSet x) {
  const std::uint32_t outside = (g.vertices() - x).bits();
  std::array<std::uint32_t, kMaxVertices> rows{};
  int k = 0;
  for (int v : x) rows[k++] = g.row(v) & outside;
  return gf2_rank(std::span<const std::uint32_t>(rows.data(), k));
}

}  // namespace lrw1
