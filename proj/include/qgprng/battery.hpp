#pragma once

// A Diehard-style subset: byte frequency, a 5-permutation test over disjoint
// tuples, and the 31×31 / 32×32 binary rank tests. Every test reads its
// input from the beginning. 32-bit words are taken from 4 consecutive bytes,
// first byte most significant.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgprng {

class InsufficientInput : public std::runtime_error {
 public:
  InsufficientInput(std::size_t needed, std::size_t got);

  /// Both in bytes.
  std::size_t needed() const noexcept { return needed_; }
  std::size_t got() const noexcept { return got_; }

 private:
  std::size_t needed_;
  std::size_t got_;
};

struct Category {
  std::string label;
  std::uint64_t observed;
  double expected;
};

struct TestResult {
  std::string test_name;
  double statistic = 0.0;
  unsigned degrees_of_freedom = 0;
  double p_value = 0.0;
  std::vector<Category> categories;
};

/// Pearson chi-square over categories with nonzero expected counts.
double chi_square_statistic(std::span<const Category> categories);

/// p outside [0.001, 0.999] is flagged in reports and fails `qgprng test`.
inline constexpr double kLowerP = 0.001;
inline constexpr double kUpperP = 0.999;
inline bool p_in_range(double p) { return p >= kLowerP && p <= kUpperP; }

std::vector<std::uint32_t> words_from_bytes(std::span<const std::uint8_t> bytes);

inline constexpr std::size_t kDefaultRankMatrices = 40000;
inline constexpr std::size_t kDefaultPermutationTuples = 1000000;
inline constexpr std::size_t kFrequencyMinBytes = 25600;

/// Chi-square over the 256 byte-value counts, df = 255.
TestResult frequency_test(std::span<const std::uint8_t> bytes);

/// Ordering class of five words as a Lehmer code in 0..119: 0 for ascending,
/// 119 for descending. Of two equal words the earlier counts as smaller.
unsigned permutation_class(std::span<const std::uint32_t, 5> tuple);

/// Disjoint 5-tuples of words classified into 120 orderings, chi-square
/// against uniform, df = 119.
TestResult permutation_test(std::span<const std::uint8_t> bytes,
                            std::size_t n_tuples = kDefaultPermutationTuples);

/// Rank of n_matrices size×size bit matrices, each from `size` consecutive
/// words (the `size` most significant bits of each). Ranks are pooled into
/// size, size-1, size-2, and below; df = 3. size must be 31 or 32.
TestResult binary_rank_test(std::span<const std::uint8_t> bytes, unsigned size,
                            std::size_t n_matrices = kDefaultRankMatrices);

struct BatteryOptions {
  std::size_t rank_matrices = kDefaultRankMatrices;
  /// Unset: as many tuples as the input holds, capped at
  /// kDefaultPermutationTuples.
  std::optional<std::size_t> permutation_tuples;
};

/// Smallest tuple count the automatic sizing will run with (5 expected per
/// class).
inline constexpr std::size_t kMinAutoTuples = 600;

/// One row of a battery run. Exactly one of result / shortfall is set.
struct TestOutcome {
  std::string test_name;
  std::optional<TestResult> result;
  std::optional<InsufficientInput> shortfall;
};

/// Runs all four tests concurrently over the same input. Short input yields
/// per-test shortfall rows instead of throwing.
std::vector<TestOutcome> run_battery(std::span<const std::uint8_t> bytes, const BatteryOptions& options = {});

namespace test_names {
inline constexpr const char* kFrequency = "Byte Frequency Test";
inline constexpr const char* kPermutation = "5-Permutation Test (non-overlapping)";
inline constexpr const char* kRank31 = "Binary Rank Test for 31 x 31 Matrices";
inline constexpr const char* kRank32 = "Binary Rank Test for 32 x 32 Matrices";
}  // namespace test_names

}  // namespace qgprng
