#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qgprng/engine.hpp"
#include "qgprng/kiss.hpp"

namespace qgprng::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDataError = 1,
  kUsageError = 2,
  kBatteryFailure = 3,
  kInsufficientInput = 4,
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct KissSpec {
  KissState seeds;
};

struct QuasigroupSpec {
  std::string square_path;  // empty: random square from (order, seed)
  std::size_t order = 256;
  std::uint64_t seed = 1;
  ShiftMode shift = ConstantShift{7};
};

/// A byte source named on the command line:
///   kiss[:X,Y,Z,W]
///   qg[:order=N,seed=S,square=PATH,const=K,var=X:Y]
/// Omitted qg fields default to order=256, seed=1, const=7; KISS defaults to
/// seeds 12345,65435,34221,12345.
struct GeneratorSpec {
  std::string label;
  std::variant<KissSpec, QuasigroupSpec> source;
};

GeneratorSpec parse_generator_spec(std::string_view text);

/// `length` bytes from the spec'd generator.
std::vector<std::uint8_t> produce(const GeneratorSpec& spec, std::size_t length);

/// Runs one invocation; `args` excludes the program name. Raw output and
/// reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgprng::cli
