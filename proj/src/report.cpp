#include "qgprng/report.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <stdexcept>

namespace qgprng {

namespace {

std::string format_double(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

struct Cells {
  std::string statistic;
  std::string df;
  std::string p;
};

Cells cells_for(const TestOutcome& o) {
  if (o.result) {
    const auto& r = *o.result;
    std::string p = format_double("%.6f", r.p_value);
    if (!p_in_range(r.p_value)) p += " *";
    return {format_double("%.3f", r.statistic), std::to_string(r.degrees_of_freedom), p};
  }
  const auto& s = *o.shortfall;
  return {"insufficient input", "-",
          "need " + std::to_string(s.needed()) + " B, have " + std::to_string(s.got()) + " B"};
}

void check_aligned(std::span<const SourceReport> sources) {
  for (const auto& s : sources) {
    if (s.outcomes.size() != sources.front().outcomes.size()) {
      throw std::invalid_argument("report sources ran different test lists");
    }
    for (std::size_t i = 0; i < s.outcomes.size(); ++i) {
      if (s.outcomes[i].test_name != sources.front().outcomes[i].test_name) {
        throw std::invalid_argument("report sources ran different test lists");
      }
    }
  }
}

}  // namespace

void write_table(std::ostream& out, std::span<const SourceReport> sources) {
  if (sources.empty()) return;
  check_aligned(sources);
  const auto& tests = sources.front().outcomes;

  std::size_t name_width = 9;
  for (const auto& o : tests) name_width = std::max(name_width, o.test_name.size());

  std::vector<std::vector<Cells>> grid(sources.size());
  std::vector<std::array<std::size_t, 3>> widths(sources.size(), {9, 2, 7});
  for (std::size_t s = 0; s < sources.size(); ++s) {
    for (const auto& o : sources[s].outcomes) {
      grid[s].push_back(cells_for(o));
      widths[s][0] = std::max(widths[s][0], grid[s].back().statistic.size());
      widths[s][1] = std::max(widths[s][1], grid[s].back().df.size());
      widths[s][2] = std::max(widths[s][2], grid[s].back().p.size());
    }
  }

  // Header: source names above their column groups.
  std::string line1 = pad("", name_width);
  std::string line2 = pad("Test name", name_width);
  std::string rule(name_width, '-');
  for (std::size_t s = 0; s < sources.size(); ++s) {
    const std::size_t group = widths[s][0] + widths[s][1] + widths[s][2] + 6;
    line1 += " | " + pad(sources[s].source, group);
    line2 += " | " + pad("statistic", widths[s][0]) + " | " + pad("df", widths[s][1]) + " | " +
             pad("p-value", widths[s][2]);
    rule += "-+-" + std::string(widths[s][0], '-') + "-+-" + std::string(widths[s][1], '-') + "-+-" +
            std::string(widths[s][2], '-');
  }
  for (auto* header : {&line1, &line2}) {
    while (!header->empty() && header->back() == ' ') header->pop_back();
  }
  out << line1 << '\n' << line2 << '\n' << rule << '\n';
  for (std::size_t t = 0; t < tests.size(); ++t) {
    std::string row = pad(tests[t].test_name, name_width);
    for (std::size_t s = 0; s < sources.size(); ++s) {
      const auto& c = grid[s][t];
      row += " | " + pad(c.statistic, widths[s][0]) + " | " + pad(c.df, widths[s][1]) + " | " +
             pad(c.p, widths[s][2]);
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out << row << '\n';
  }
  out << "(* p-value outside [" << kLowerP << ", " << kUpperP << "])\n";
}

void write_tsv(std::ostream& out, std::span<const SourceReport> sources) {
  for (const auto& s : sources) {
    for (const auto& o : s.outcomes) {
      out << o.test_name << '\t' << s.source << '\t';
      if (o.result) {
        out << format_double("%.6f", o.result->statistic) << '\t' << o.result->degrees_of_freedom << '\t'
            << format_double("%.9f", o.result->p_value) << '\n';
      } else {
        out << "NA\tNA\tNA\n";
      }
    }
  }
}

Verdict verdict(std::span<const TestOutcome> outcomes) {
  bool short_input = false;
  for (const auto& o : outcomes) {
    if (o.result && !p_in_range(o.result->p_value)) return Verdict::Fail;
    if (o.shortfall) short_input = true;
  }
  return short_input ? Verdict::Insufficient : Verdict::Pass;
}

}  // namespace qgprng
