#include "qgprng/latin_square.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <utility>

namespace qgprng {

namespace {

using Kind = LatinSquareError::Kind;

std::string cell_name(std::size_t row, std::size_t col) {
  return "(" + std::to_string(row) + ", " + std::to_string(col) + ")";
}

std::vector<std::size_t> shuffled_identity(std::size_t n, SplitMix64& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n - 1; i > 0; --i) {
    std::swap(perm[i], perm[rng.below(i + 1)]);
  }
  return perm;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

LatinSquare LatinSquare::validate(const std::vector<std::vector<std::int64_t>>& grid) {
  const std::size_t n = grid.size();
  if (n == 0) {
    throw LatinSquareError(Kind::NotSquare, 0, 0, "grid is empty");
  }
  if (n > kMaxOrder) {
    throw LatinSquareError(Kind::NotSquare, 0, 0,
                           "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (grid[i].size() != n) {
      throw LatinSquareError(Kind::NotSquare, i + 1, 0,
                             "row " + std::to_string(i + 1) + " has " +
                                 std::to_string(grid[i].size()) + " entries, expected " +
                                 std::to_string(n));
    }
  }

  std::vector<std::uint16_t> cells(n * n);
  std::vector<bool> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    seen.assign(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t v = grid[i][j];
      if (v < 1 || static_cast<std::uint64_t>(v) > n) {
        throw LatinSquareError(Kind::SymbolOutOfRange, i + 1, j + 1,
                               "symbol " + std::to_string(v) + " at " + cell_name(i + 1, j + 1) +
                                   " is outside 1.." + std::to_string(n));
      }
      const auto s = static_cast<std::size_t>(v - 1);
      if (seen[s]) {
        throw LatinSquareError(Kind::DuplicateInRow, i + 1, j + 1,
                               "symbol " + std::to_string(v) + " repeats in row " +
                                   std::to_string(i + 1));
      }
      seen[s] = true;
      cells[i * n + j] = static_cast<std::uint16_t>(s);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    seen.assign(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t s = cells[i * n + j];
      if (seen[s]) {
        throw LatinSquareError(Kind::DuplicateInColumn, i + 1, j + 1,
                               "symbol " + std::to_string(s + 1) + " repeats in column " +
                                   std::to_string(j + 1));
      }
      seen[s] = true;
    }
  }
  return LatinSquare(n, std::move(cells));
}

void LatinSquare::check_symbol(Symbol s, std::size_t row, std::size_t col) const {
  if (s < 1 || s > order_) {
    throw LatinSquareError(Kind::SymbolOutOfRange, row, col,
                           "symbol " + std::to_string(s) + " is outside 1.." +
                               std::to_string(order_));
  }
}

Symbol LatinSquare::lookup(Symbol x, Symbol y) const {
  check_symbol(x, x, 0);
  check_symbol(y, 0, y);
  return Symbol{cells_[(x - 1) * order_ + (y - 1)]} + 1;
}

Symbol LatinSquare::left_divide(Symbol x, Symbol z) const {
  check_symbol(x, x, 0);
  check_symbol(z, 0, 0);
  const std::size_t base = (x - 1) * order_;
  for (std::size_t j = 0; j < order_; ++j) {
    if (cells_[base + j] == z - 1) return static_cast<Symbol>(j + 1);
  }
  throw std::logic_error("left_divide: row is not a permutation");
}

Symbol LatinSquare::right_divide(Symbol z, Symbol y) const {
  check_symbol(z, 0, 0);
  check_symbol(y, 0, y);
  for (std::size_t i = 0; i < order_; ++i) {
    if (cells_[i * order_ + (y - 1)] == z - 1) return static_cast<Symbol>(i + 1);
  }
  throw std::logic_error("right_divide: column is not a permutation");
}

std::vector<std::vector<std::int64_t>> LatinSquare::rows() const {
  std::vector<std::vector<std::int64_t>> out(order_, std::vector<std::int64_t>(order_));
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) {
      out[i][j] = std::int64_t{cells_[i * order_ + j]} + 1;
    }
  }
  return out;
}

LatinSquare random_latin_square(std::size_t n, std::uint64_t seed) {
  if (n < 2) {
    throw LatinSquareError(Kind::OrderTooSmall, 0, 0,
                           "order must be at least 2, got " + std::to_string(n));
  }
  if (n > kMaxOrder) {
    throw LatinSquareError(Kind::NotSquare, 0, 0,
                           "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  }
  SplitMix64 rng(seed);
  const auto row_perm = shuffled_identity(n, rng);
  const auto col_perm = shuffled_identity(n, rng);
  const auto sym_perm = shuffled_identity(n, rng);

  std::vector<std::uint16_t> cells(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cells[i * n + j] = static_cast<std::uint16_t>(sym_perm[(row_perm[i] + col_perm[j]) % n]);
    }
  }
  return LatinSquare(n, std::move(cells));
}

std::string to_text(const LatinSquare& square) {
  const std::size_t n = square.order();
  const auto cells = square.cells();
  std::string out = std::to_string(n) + "\n";
  out.reserve(out.size() + n * n * 4);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != 0) out += ' ';
      out += std::to_string(cells[i * n + j] + 1);
    }
    out += '\n';
  }
  return out;
}

namespace {

struct Token {
  std::int64_t value;
  std::size_t column;  // 1-based
};

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (is_blank(line[pos])) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < line.size() && !is_blank(line[end])) ++end;
    const std::string_view word = line.substr(pos, end - pos);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || ptr != word.data() + word.size()) {
      throw ParseError(line_no, pos + 1, "expected a decimal integer, found '" + std::string(word) + "'");
    }
    tokens.push_back({value, pos + 1});
    pos = end;
  }
  return tokens;
}

}  // namespace

LatinSquare parse_text(std::string_view text) {
  std::size_t order = 0;
  bool have_order = false;
  std::vector<std::vector<std::int64_t>> grid;
  std::size_t line_no = 0;
  std::size_t start = 0;

  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    if (!line.empty() && line.front() == '#') continue;
    const auto tokens = tokenize(line, line_no);
    if (tokens.empty()) continue;

    if (!have_order) {
      if (tokens.size() != 1) {
        throw ParseError(line_no, tokens[1].column, "order line must hold a single integer");
      }
      if (tokens[0].value < 1 || static_cast<std::uint64_t>(tokens[0].value) > kMaxOrder) {
        throw ParseError(line_no, tokens[0].column,
                         "order must be in 1.." + std::to_string(kMaxOrder));
      }
      order = static_cast<std::size_t>(tokens[0].value);
      have_order = true;
      grid.reserve(order);
      continue;
    }
    if (grid.size() == order) {
      throw ParseError(line_no, tokens[0].column,
                       "unexpected data after " + std::to_string(order) + " rows");
    }
    if (tokens.size() != order) {
      const std::size_t col = tokens.size() > order ? tokens[order].column : line.size() + 1;
      throw ParseError(line_no, col,
                       "row has " + std::to_string(tokens.size()) + " symbols, expected " +
                           std::to_string(order));
    }
    std::vector<std::int64_t> row;
    row.reserve(order);
    for (const auto& t : tokens) row.push_back(t.value);
    grid.push_back(std::move(row));
  }

  if (!have_order) {
    throw ParseError(line_no + 1, 1, "missing order line");
  }
  if (grid.size() != order) {
    throw ParseError(line_no + 1, 1,
                     "expected " + std::to_string(order) + " rows, found " +
                         std::to_string(grid.size()));
  }
  return LatinSquare::validate(grid);
}

}  // namespace qgprng
