#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "qgprng/battery.hpp"

namespace qgprng {

struct SourceReport {
  std::string source;
  std::vector<TestOutcome> outcomes;
};

/// Plain-text table, one row per test and a statistic / df / p-value column
/// group per source. p-values outside [0.001, 0.999] are marked with '*'.
/// All sources must have run the same tests in the same order.
void write_table(std::ostream& out, std::span<const SourceReport> sources);

/// One line per (test, source): test<TAB>source<TAB>statistic<TAB>df<TAB>p.
/// Shortfall rows carry "NA" in the numeric fields.
void write_tsv(std::ostream& out, std::span<const SourceReport> sources);

enum class Verdict { Pass, Fail, Insufficient };

/// Fail if any completed test has p outside range; otherwise Insufficient if
/// any test lacked input; otherwise Pass.
Verdict verdict(std::span<const TestOutcome> outcomes);

}  // namespace qgprng
