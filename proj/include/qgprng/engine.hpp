#pragma once

// Quasigroup matrix generator.
//
// Each cycle turns the generator matrix into a fresh n×n block of output:
//
//   phase 1  gen[p] := gen[p] · gen[p + 1]   (row-major p, wrapping to gen[0]
//                                             for the last cell)
//   phase 2  emit gen row-major
//   phase 3  transpose gen, flatten, rotate right by the shift, refill
//
// The first phase 1 reads the seed square itself. Only two grids are kept:
// the lookup table and the generator matrix; phase 1 and phase 3 both work in
// place. A cycle therefore produces exactly order² outputs, and truncated
// streams depend on where block boundaries fall.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qgprng/latin_square.hpp"

namespace qgprng {

/// Fixed rotation amount; reduced mod order² before use.
struct ConstantShift {
  std::uint64_t k = 0;
};

/// Rotation amount read from the transposed generator matrix at (row, col),
/// both 1-based.
struct VariableShift {
  std::size_t row = 1;
  std::size_t col = 1;
};

using ShiftMode = std::variant<ConstantShift, VariableShift>;

enum class OutputMap {
  Symbols1Based,  // emit symbols as-is, 1..n
  BytesMinusOne,  // emit symbol - 1; requires n <= 256
};

struct GeneratorConfig {
  LatinSquare square;
  ShiftMode shift = ConstantShift{0};
  OutputMap output = OutputMap::BytesMinusOne;
};

class ConfigError : public std::invalid_argument {
 public:
  enum class Kind { VariableShiftOutOfRange, OrderTooLargeForBytes, OrderTooLargeForCell, WrongOutputMap };

  ConfigError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Phase 3 on a bare n×n row-major grid: transpose in place, then rotate the
/// row-major stream right by the shift (position p moves to (p + s) mod n²).
/// A variable shift reads grid[row][col] of the transposed grid, plus
/// `value_bias` (the engine stores symbols 0-based and passes 1).
template <class T>
void transpose_and_rotate(std::span<T> grid, std::size_t n, const ShiftMode& mode,
                          std::uint64_t value_bias = 0) {
  const std::size_t cells = n * n;
  if (grid.size() != cells) throw std::invalid_argument("grid is not n×n");
  if (cells == 0) return;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::swap(grid[i * n + j], grid[j * n + i]);
    }
  }
  std::uint64_t s = 0;
  if (const auto* c = std::get_if<ConstantShift>(&mode)) {
    s = c->k;
  } else {
    const auto& v = std::get<VariableShift>(mode);
    if (v.row < 1 || v.row > n || v.col < 1 || v.col > n) {
      throw ConfigError(ConfigError::Kind::VariableShiftOutOfRange,
                        "variable shift coordinates outside 1.." + std::to_string(n));
    }
    s = static_cast<std::uint64_t>(grid[(v.row - 1) * n + (v.col - 1)]) + value_bias;
  }
  s %= cells;
  if (s != 0) {
    std::rotate(grid.begin(), grid.end() - static_cast<std::ptrdiff_t>(s), grid.end());
  }
}

void validate_config(const GeneratorConfig& config);

/// The generator state machine. `Cell` holds one 0-based symbol; the engine
/// refuses squares whose order does not fit.
template <std::unsigned_integral Cell>
class BasicQuasigroupEngine {
 public:
  using cell_type = Cell;

  explicit BasicQuasigroupEngine(const GeneratorConfig& config)
      : order_(config.square.order()), shift_(config.shift), output_(config.output) {
    validate_config(config);
    if (order_ - 1 > std::numeric_limits<Cell>::max()) {
      throw ConfigError(ConfigError::Kind::OrderTooLargeForCell,
                        "order " + std::to_string(order_) + " does not fit the cell type");
    }
    const auto src = config.square.cells();
    table_.assign(src.begin(), src.end());
    gen_ = table_;
  }

  std::size_t order() const noexcept { return order_; }
  std::size_t block_size() const noexcept { return order_ * order_; }
  std::uint64_t iteration() const noexcept { return iteration_; }
  bool initialized() const noexcept { return initialized_; }
  const ShiftMode& shift() const noexcept { return shift_; }
  OutputMap output_map() const noexcept { return output_; }

  /// 0-based seed table (the quasigroup) and generator matrix, row-major.
  std::span<const Cell> table() const noexcept { return table_; }
  std::span<const Cell> gen_matrix() const noexcept { return gen_; }

  /// Bytes held by the two persistent grids.
  std::size_t grid_bytes() const noexcept { return (table_.size() + gen_.size()) * sizeof(Cell); }

  /// Phase 1, calling emit(cell) for each new 0-based cell in row-major order
  /// as soon as it is written.
  template <class Emit>
  void phase1(Emit&& emit) {
    if (initialized_) {
      std::copy(table_.begin(), table_.end(), gen_.begin());
    }
    const std::size_t cells = gen_.size();
    const Cell first = gen_[0];
    for (std::size_t p = 0; p + 1 < cells; ++p) {
      gen_[p] = table_[std::size_t{gen_[p]} * order_ + gen_[p + 1]];
      emit(gen_[p]);
    }
    gen_[cells - 1] = table_[std::size_t{gen_[cells - 1]} * order_ + first];
    emit(gen_[cells - 1]);
    initialized_ = false;
  }

  void phase1() {
    phase1([](Cell) {});
  }

  /// Generator matrix as 1-based symbols, row-major. Read-only.
  std::vector<Symbol> phase2() const {
    std::vector<Symbol> out(gen_.size());
    std::transform(gen_.begin(), gen_.end(), out.begin(), [](Cell c) { return Symbol{c} + 1; });
    return out;
  }

  void phase3() { transpose_and_rotate(std::span<Cell>(gen_), order_, shift_, 1); }

  /// One full cycle; returns block_size() outputs mapped per output_map().
  std::vector<std::uint32_t> next_block() {
    phase1();
    std::vector<std::uint32_t> out = phase2();
    if (output_ == OutputMap::BytesMinusOne) {
      for (auto& v : out) --v;
    }
    phase3();
    ++iteration_;
    return out;
  }

  /// One full cycle, emitting mapped outputs during phase 1.
  template <class Emit>
  void next_block_streaming(Emit&& emit) {
    const std::uint32_t bias = output_ == OutputMap::Symbols1Based ? 1 : 0;
    phase1([&](Cell c) { emit(static_cast<std::uint32_t>(c) + bias); });
    phase3();
    ++iteration_;
  }

 private:
  std::size_t order_;
  ShiftMode shift_;
  OutputMap output_;
  std::vector<Cell> table_;
  std::vector<Cell> gen_;
  bool initialized_ = true;
  std::uint64_t iteration_ = 0;
};

/// Byte engine for orders up to 256: each grid is order² bytes.
using QuasigroupEngine = BasicQuasigroupEngine<std::uint8_t>;
/// Engine for orders up to 65536.
using WideQuasigroupEngine = BasicQuasigroupEngine<std::uint16_t>;

/// Exactly `length` bytes from a fresh engine: whole blocks, the last one
/// truncated. Throws ConfigError (OrderTooLargeForBytes) when the order
/// exceeds 256.
std::vector<std::uint8_t> generate(const GeneratorConfig& config, std::size_t length);

struct Cycle {
  std::uint64_t preperiod;  // cycles before the state first repeats
  std::uint64_t period;
};

/// Detects eventual periodicity of the post-phase-3 state by stepping the
/// engine up to max_cycles times. Returns nullopt if no repeat was seen.
std::optional<Cycle> find_cycle(const GeneratorConfig& config, std::uint64_t max_cycles);

}  // namespace qgprng
