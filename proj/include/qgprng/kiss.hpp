#pragma once

// Marsaglia's four-seed KISS: a 69069 congruential generator, a 13/17/5
// xorshift, and two 16-bit multiply-with-carry generators, summed mod 2^32.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qgprng {

class KissSeedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct KissState {
  std::uint32_t x = 0;  // congruential
  std::uint32_t y = 0;  // xorshift, never 0
  std::uint32_t z = 0;  // MWC, multiplier 36969
  std::uint32_t w = 0;  // MWC, multiplier 18000

  /// Validating constructor. Rejects y == 0 and z, w in {0, 0xFFFFFFFF}.
  static KissState seeded(std::uint32_t x, std::uint32_t y, std::uint32_t z, std::uint32_t w);

  friend bool operator==(const KissState&, const KissState&) = default;
};

inline std::uint32_t kiss_next(KissState& s) noexcept {
  s.x = 69069u * s.x + 12345u;
  s.y ^= s.y << 13;
  s.y ^= s.y >> 17;
  s.y ^= s.y << 5;
  s.z = 36969u * (s.z & 0xFFFFu) + (s.z >> 16);
  s.w = 18000u * (s.w & 0xFFFFu) + (s.w >> 16);
  return s.x + s.y + (s.z << 16) + s.w;
}

/// `length` bytes, each word most significant byte first. A partially used
/// final word is discarded.
std::vector<std::uint8_t> kiss_bytes(KissState& state, std::size_t length);

}  // namespace qgprng
