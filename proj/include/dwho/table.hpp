#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace dwho {

using Cell = std::variant<double, long long, std::string>;

/// Column-named rows, written as CSV (single header row) or as a JSON array
/// of records with the same keys.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Throws std::invalid_argument when the row width differs from the header.
  void add_row(std::vector<Cell> row);
};

/// Nine significant digits, shortest general form, locale independent.
std::string format_number(double value);

void write_csv(std::ostream& out, const Table& table);

/// Numbers are emitted in shortest round-trip form.
void write_json(std::ostream& out, const Table& table);

}  // namespace dwho
