#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qgprng {

/// r×c matrix over GF(2). Each row is packed into 64-bit words, column 0 in
/// the least significant bit of the first word.
class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols);

  /// Row i takes the `bits` most significant bits of words[i]; the leftmost
  /// of them becomes column 0.
  static BitMatrix from_words(std::span<const std::uint32_t> words, unsigned bits);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const noexcept {
    return (data_[r * stride_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) noexcept {
    auto& word = data_[r * stride_ + c / 64];
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    word = v ? (word | mask) : (word & ~mask);
  }

  BitMatrix transpose() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  friend std::size_t gf2_rank(BitMatrix m);

  std::size_t rows_;
  std::size_t cols_;
  std::size_t stride_;
  std::vector<std::uint64_t> data_;
};

/// Rank over GF(2) by Gaussian elimination with word-wide row XOR.
std::size_t gf2_rank(BitMatrix m);

/// P(rank = n), P(rank = n-1), P(rank = n-2), P(rank <= n-3) for a uniformly
/// random n×n bit matrix:
///   P(r) = 2^{r(2n-r)-n²} · ∏_{i<r} (1 - 2^{i-n})² / (1 - 2^{i-r}).
/// The last class is summed term by term. Requires n >= 10.
std::array<double, 4> rank_class_probabilities(std::size_t n);

}  // namespace qgprng
