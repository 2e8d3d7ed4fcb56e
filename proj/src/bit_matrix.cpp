#include "qgprng/bit_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qgprng {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * stride_, 0) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("BitMatrix needs at least one row and column");
}

BitMatrix BitMatrix::from_words(std::span<const std::uint32_t> words, unsigned bits) {
  if (bits == 0 || bits > 32) throw std::invalid_argument("from_words: bits must be in 1..32");
  BitMatrix m(words.size(), bits);
  for (std::size_t r = 0; r < words.size(); ++r) {
    const std::uint32_t top = words[r] >> (32 - bits);
    // column c <- bit (bits-1-c) of `top`
    std::uint64_t row = 0;
    for (unsigned c = 0; c < bits; ++c) row |= std::uint64_t{(top >> (bits - 1 - c)) & 1u} << c;
    m.data_[r] = row;
  }
  return m;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r, true);
    }
  }
  return t;
}

std::size_t gf2_rank(BitMatrix m) {
  const std::size_t stride = m.stride_;
  auto row = [&](std::size_t r) { return m.data_.begin() + static_cast<std::ptrdiff_t>(r * stride); };

  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols_ && rank < m.rows_; ++c) {
    const std::size_t word = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < m.rows_ && !(row(pivot)[word] & mask)) ++pivot;
    if (pivot == m.rows_) continue;
    if (pivot != rank) std::swap_ranges(row(pivot), row(pivot) + stride, row(rank));
    for (std::size_t r = pivot + 1; r < m.rows_; ++r) {
      if (row(r)[word] & mask) {
        // columns below `word` are already zero in the pivot row
        for (std::size_t k = word; k < stride; ++k) row(r)[k] ^= row(rank)[k];
      }
    }
    ++rank;
  }
  return rank;
}

std::array<double, 4> rank_class_probabilities(std::size_t n) {
  if (n < 10) throw std::invalid_argument("rank_class_probabilities: n must be at least 10");
  const auto probability = [n](std::size_t r) {
    double product = 1.0;
    for (std::size_t i = 0; i < r; ++i) {
      const double row = 1.0 - std::ldexp(1.0, static_cast<int>(i) - static_cast<int>(n));
      const double col = 1.0 - std::ldexp(1.0, static_cast<int>(i) - static_cast<int>(r));
      product *= row * row / col;
    }
    // r(2n - r) - n² = -(n - r)²
    const int deficit = static_cast<int>(n - r);
    return std::ldexp(product, -deficit * deficit);
  };
  std::array<double, 4> classes{probability(n), probability(n - 1), probability(n - 2), 0.0};
  for (std::size_t r = 0; r + 3 <= n; ++r) classes[3] += probability(r);
  return classes;
}

}  // namespace qgprng
