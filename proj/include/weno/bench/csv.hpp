// Minimal numeric CSV tables: header row, comma separated, 17 significant digits.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace weno::bench {

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Index of `name` in columns; throws std::out_of_range when absent.
  std::size_t column_index(const std::string& name) const;
  std::vector<double> column(const std::string& name) const;
};

std::string format_double(double value);

void write_csv(std::ostream& out, const CsvTable& table);
void write_csv(const std::filesystem::path& path, const CsvTable& table);

/// Throws std::runtime_error on unreadable files, ragged rows or non-numeric cells.
CsvTable read_csv(std::istream& in);
CsvTable read_csv(const std::filesystem::path& path);

}  // namespace weno::bench
