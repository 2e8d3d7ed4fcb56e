#include "qgprng/engine.hpp"

#include <map>

namespace qgprng {

void validate_config(const GeneratorConfig& config) {
  const std::size_t n = config.square.order();
  if (const auto* v = std::get_if<VariableShift>(&config.shift)) {
    if (v->row < 1 || v->row > n || v->col < 1 || v->col > n) {
      throw ConfigError(ConfigError::Kind::VariableShiftOutOfRange,
                        "variable shift (" + std::to_string(v->row) + ", " + std::to_string(v->col) +
                            ") outside 1.." + std::to_string(n));
    }
  }
  if (config.output == OutputMap::BytesMinusOne && n > 256) {
    throw ConfigError(ConfigError::Kind::OrderTooLargeForBytes,
                      "byte output needs order <= 256, got " + std::to_string(n));
  }
}

std::vector<std::uint8_t> generate(const GeneratorConfig& config, std::size_t length) {
  if (config.square.order() > 256) {
    throw ConfigError(ConfigError::Kind::OrderTooLargeForBytes,
                      "byte output needs order <= 256, got " + std::to_string(config.square.order()));
  }
  if (config.output != OutputMap::BytesMinusOne) {
    throw ConfigError(ConfigError::Kind::WrongOutputMap, "generate() emits bytes; use OutputMap::BytesMinusOne");
  }
  std::vector<std::uint8_t> out;
  out.reserve(length);
  QuasigroupEngine engine(config);
  while (out.size() < length) {
    engine.next_block_streaming([&](std::uint32_t v) {
      if (out.size() < length) out.push_back(static_cast<std::uint8_t>(v));
    });
  }
  return out;
}

std::optional<Cycle> find_cycle(const GeneratorConfig& config, std::uint64_t max_cycles) {
  WideQuasigroupEngine engine(config);
  std::map<std::vector<std::uint16_t>, std::uint64_t> seen;
  const auto snapshot = [&] {
    const auto g = engine.gen_matrix();
    return std::vector<std::uint16_t>(g.begin(), g.end());
  };
  seen.emplace(snapshot(), 0);
  for (std::uint64_t step = 1; step <= max_cycles; ++step) {
    engine.next_block_streaming([](std::uint32_t) {});
    const auto [it, inserted] = seen.emplace(snapshot(), step);
    if (!inserted) return Cycle{it->second, step - it->second};
  }
  return std::nullopt;
}

}  // namespace qgprng
