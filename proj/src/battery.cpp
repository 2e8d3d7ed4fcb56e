#include "qgprng/battery.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <future>

#include "qgprng/bit_matrix.hpp"
#include "qgprng/chisq.hpp"

namespace qgprng {

InsufficientInput::InsufficientInput(std::size_t needed, std::size_t got)
    : std::runtime_error("insufficient input: need " + std::to_string(needed) + " bytes, got " +
                         std::to_string(got)),
      needed_(needed),
      got_(got) {}

double chi_square_statistic(std::span<const Category> categories) {
  double sum = 0.0;
  for (const auto& c : categories) {
    if (c.expected <= 0.0) continue;
    const double d = static_cast<double>(c.observed) - c.expected;
    sum += d * d / c.expected;
  }
  return sum;
}

std::vector<std::uint32_t> words_from_bytes(std::span<const std::uint8_t> bytes) {
  std::vector<std::uint32_t> words(bytes.size() / 4);
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto* b = bytes.data() + 4 * i;
    words[i] = (std::uint32_t{b[0]} << 24) | (std::uint32_t{b[1]} << 16) | (std::uint32_t{b[2]} << 8) | b[3];
  }
  return words;
}

namespace {

TestResult finish(std::string name, unsigned df, std::vector<Category> categories) {
  TestResult r;
  r.test_name = std::move(name);
  r.degrees_of_freedom = df;
  r.statistic = chi_square_statistic(categories);
  r.p_value = chisq_cdf(r.statistic, df);
  r.categories = std::move(categories);
  return r;
}

std::string hex_label(unsigned v) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "0x%02x", v);
  return buf;
}

}  // namespace

TestResult frequency_test(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kFrequencyMinBytes) throw InsufficientInput(kFrequencyMinBytes, bytes.size());
  std::array<std::uint64_t, 256> counts{};
  for (const auto b : bytes) ++counts[b];
  const double expected = static_cast<double>(bytes.size()) / 256.0;
  std::vector<Category> categories;
  categories.reserve(256);
  for (unsigned v = 0; v < 256; ++v) categories.push_back({hex_label(v), counts[v], expected});
  return finish(test_names::kFrequency, 255, std::move(categories));
}

unsigned permutation_class(std::span<const std::uint32_t, 5> tuple) {
  static constexpr std::array<unsigned, 5> kFactorial = {24, 6, 2, 1, 1};
  unsigned index = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    unsigned smaller_later = 0;
    for (std::size_t j = i + 1; j < 5; ++j) {
      if (tuple[j] < tuple[i]) ++smaller_later;
    }
    index += smaller_later * kFactorial[i];
  }
  return index;
}

TestResult permutation_test(std::span<const std::uint8_t> bytes, std::size_t n_tuples) {
  if (n_tuples == 0) throw std::invalid_argument("permutation_test: n_tuples must be positive");
  const std::size_t needed = n_tuples * 5 * 4;
  if (bytes.size() < needed) throw InsufficientInput(needed, bytes.size());
  const auto words = words_from_bytes(bytes.first(needed));
  std::array<std::uint64_t, 120> counts{};
  for (std::size_t t = 0; t < n_tuples; ++t) {
    ++counts[permutation_class(std::span<const std::uint32_t, 5>(words.data() + 5 * t, 5))];
  }
  const double expected = static_cast<double>(n_tuples) / 120.0;
  std::vector<Category> categories;
  categories.reserve(120);
  for (unsigned k = 0; k < 120; ++k) categories.push_back({"perm " + std::to_string(k), counts[k], expected});
  return finish(test_names::kPermutation, 119, std::move(categories));
}

TestResult binary_rank_test(std::span<const std::uint8_t> bytes, unsigned size, std::size_t n_matrices) {
  if (size != 31 && size != 32) throw std::invalid_argument("binary_rank_test: size must be 31 or 32");
  if (n_matrices == 0) throw std::invalid_argument("binary_rank_test: n_matrices must be positive");
  const std::size_t needed = n_matrices * size * 4;
  if (bytes.size() < needed) throw InsufficientInput(needed, bytes.size());
  const auto words = words_from_bytes(bytes.first(needed));

  std::array<std::uint64_t, 4> counts{};
  for (std::size_t m = 0; m < n_matrices; ++m) {
    const auto rows = std::span<const std::uint32_t>(words).subspan(m * size, size);
    const std::size_t rank = gf2_rank(BitMatrix::from_words(rows, size));
    const std::size_t deficit = size - rank;
    ++counts[std::min<std::size_t>(deficit, 3)];
  }
  const auto probs = rank_class_probabilities(size);
  const auto n = static_cast<double>(n_matrices);
  const std::string s = std::to_string(size);
  std::vector<Category> categories = {
      {"r=" + s, counts[0], n * probs[0]},
      {"r=" + std::to_string(size - 1), counts[1], n * probs[1]},
      {"r=" + std::to_string(size - 2), counts[2], n * probs[2]},
      {"r<=" + std::to_string(size - 3), counts[3], n * probs[3]},
  };
  return finish(size == 31 ? test_names::kRank31 : test_names::kRank32, 3, std::move(categories));
}

std::vector<TestOutcome> run_battery(std::span<const std::uint8_t> bytes, const BatteryOptions& options) {
  std::size_t tuples = kDefaultPermutationTuples;
  if (options.permutation_tuples) {
    tuples = *options.permutation_tuples;
  } else {
    tuples = std::clamp(bytes.size() / 20, kMinAutoTuples, kDefaultPermutationTuples);
  }

  using Runner = std::function<TestResult()>;
  const std::vector<std::pair<const char*, Runner>> tests = {
      {test_names::kPermutation, [&] { return permutation_test(bytes, tuples); }},
      {test_names::kRank31, [&] { return binary_rank_test(bytes, 31, options.rank_matrices); }},
      {test_names::kRank32, [&] { return binary_rank_test(bytes, 32, options.rank_matrices); }},
      {test_names::kFrequency, [&] { return frequency_test(bytes); }},
  };

  std::vector<std::future<TestResult>> futures;
  futures.reserve(tests.size());
  for (const auto& [name, run] : tests) futures.push_back(std::async(std::launch::async, run));

  std::vector<TestOutcome> outcomes;
  outcomes.reserve(tests.size());
  for (std::size_t i = 0; i < tests.size(); ++i) {
    TestOutcome outcome{tests[i].first, std::nullopt, std::nullopt};
    try {
      outcome.result = futures[i].get();
    } catch (const InsufficientInput& e) {
      outcome.shortfall = e;
    }
    outcomes.push_back(std::move(outcome));
  }
  return outcomes;
}

}  // namespace qgprng
