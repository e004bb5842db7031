// Regression comparison of run artifacts against stored CSV files.
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "weno/bench/csv.hpp"

namespace weno::bench {

struct ColumnDeviation {
  std::string column;
  double max_abs = 0.0;
  bool pass = true;
};

struct GoldenReport {
  bool pass = true;
  double tolerance = 0.0;
  std::vector<ColumnDeviation> columns;

  std::string summary() const;
};

/// Per-column max |run - golden|. Throws std::invalid_argument if the column names
/// or row counts differ.
GoldenReport compare_golden(const CsvTable& run, const CsvTable& golden, double tolerance);
GoldenReport compare_golden(const std::filesystem::path& run, const std::filesystem::path& golden, double tolerance);

}  // namespace weno::bench
