#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qgprng {

/// A quasigroup symbol. Symbols are 1-based ({1..n}) everywhere outside this
/// class; the table itself is stored 0-based.
using Symbol = std::uint32_t;

/// Largest order the library accepts. Cells are stored in 16 bits.
inline constexpr std::size_t kMaxOrder = 1u << 16;

class LatinSquareError : public std::runtime_error {
 public:
  enum class Kind {
    NotSquare,
    SymbolOutOfRange,
    DuplicateInRow,
    DuplicateInColumn,
    OrderTooSmall,
  };

  // row/col are 1-based; 0 means "not applicable".
  LatinSquareError(Kind kind, std::size_t row, std::size_t col, const std::string& what)
      : std::runtime_error(what), kind_(kind), row_(row), col_(col) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  Kind kind_;
  std::size_t row_;
  std::size_t col_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An order-n Latin square over {1..n}: every row and every column is a
/// permutation of the symbol set. Immutable once constructed; the only ways
/// to obtain one are validate(), random_latin_square() and parse_text().
class LatinSquare {
 public:
  /// Checks a candidate grid and returns it as a LatinSquare. Violations are
  /// reported for the first offending cell, scanning rows top to bottom, then
  /// columns left to right.
  static LatinSquare validate(const std::vector<std::vector<std::int64_t>>& grid);

  std::size_t order() const noexcept { return order_; }

  /// x · y, the symbol at row x, column y.
  Symbol lookup(Symbol x, Symbol y) const;

  /// x \ z: the unique y with x · y = z.
  Symbol left_divide(Symbol x, Symbol z) const;

  /// z / y: the unique x with x · y = z.
  Symbol right_divide(Symbol z, Symbol y) const;

  /// Row-major 0-based cells, length order()².
  std::span<const std::uint16_t> cells() const noexcept { return cells_; }

  std::vector<std::vector<std::int64_t>> rows() const;

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

 private:
  LatinSquare(std::size_t order, std::vector<std::uint16_t> cells)
      : order_(order), cells_(std::move(cells)) {}

  friend LatinSquare random_latin_square(std::size_t n, std::uint64_t seed);

  void check_symbol(Symbol s, std::size_t row, std::size_t col) const;

  std::size_t order_;
  std::vector<std::uint16_t> cells_;
};

/// SplitMix64; the seed expander behind random_latin_square. The output
/// sequence is fixed so that squares are reproducible across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

/// Seeded isotope of the cyclic square: C[i][j] = ((i + j) mod n), with rows,
/// columns and symbols each permuted by a Fisher-Yates shuffle drawn from
/// SplitMix64(seed). Deterministic in (n, seed). Throws OrderTooSmall for n < 2.
LatinSquare random_latin_square(std::size_t n, std::uint64_t seed);

/// Text form: order on the first line, then one row per line of
/// space-separated 1-based symbols. Lines starting with '#' are comments.
std::string to_text(const LatinSquare& square);

/// Inverse of to_text. Throws ParseError for malformed text and
/// LatinSquareError when the grid is well-formed but not a Latin square.
LatinSquare parse_text(std::string_view text);

}  // namespace qgprng
