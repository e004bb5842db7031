#include "weno/bench/golden.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace weno::bench {

std::string GoldenReport::summary() const {
  std::ostringstream os;
  os << (pass ? "PASS" : "FAIL") << " (tolerance " << tolerance << ")";
  for (const auto& c : columns) os << "\n  " << c.column << ": max deviation " << c.max_abs << (c.pass ? "" : "  <-- exceeds");
  return os.str();
}

GoldenReport compare_golden(const CsvTable& run, const CsvTable& golden, double tolerance) {
  if (run.columns != golden.columns) throw std::invalid_argument("golden: column names differ");
  if (run.rows.size() != golden.rows.size())
    throw std::invalid_argument("golden: row count " + std::to_string(run.rows.size()) + " vs " +
                                std::to_string(golden.rows.size()));
  GoldenReport report;
  report.tolerance = tolerance;
  for (std::size_t c = 0; c < run.columns.size(); ++c) {
    ColumnDeviation dev{run.columns[c], 0.0, true};
    for (std::size_t r = 0; r < run.rows.size(); ++r) {
      const double d = std::abs(run.rows[r][c] - golden.rows[r][c]);
      if (std::isnan(d) || d > dev.max_abs) dev.max_abs = d;  // a NaN sticks and fails
    }
    dev.pass = dev.max_abs <= tolerance;
    report.pass = report.pass && dev.pass;
    report.columns.push_back(dev);
  }
  return report;
}

GoldenReport compare_golden(const std::filesystem::path& run, const std::filesystem::path& golden, double tolerance) {
  return compare_golden(read_csv(run), read_csv(golden), tolerance);
}

}  // namespace weno::bench
