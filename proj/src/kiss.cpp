#include "qgprng/kiss.hpp"

#include <string>

namespace qgprng {

KissState KissState::seeded(std::uint32_t x, std::uint32_t y, std::uint32_t z, std::uint32_t w) {
  if (y == 0) throw KissSeedError("KISS seed y must be nonzero");
  const auto mwc_ok = [](std::uint32_t v) { return v != 0 && v != 0xFFFFFFFFu; };
  if (!mwc_ok(z)) throw KissSeedError("KISS seed z must not be 0 or 0xFFFFFFFF, got " + std::to_string(z));
  if (!mwc_ok(w)) throw KissSeedError("KISS seed w must not be 0 or 0xFFFFFFFF, got " + std::to_string(w));
  return KissState{x, y, z, w};
}

std::vector<std::uint8_t> kiss_bytes(KissState& state, std::size_t length) {
  std::vector<std::uint8_t> out(length);
  std::size_t i = 0;
  while (i < length) {
    const std::uint32_t word = kiss_next(state);
    for (int shift = 24; shift >= 0 && i < length; shift -= 8) {
      out[i++] = static_cast<std::uint8_t>(word >> shift);
    }
  }
  return out;
}

}  // namespace qgprng
