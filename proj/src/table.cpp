#include "dwho/table.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace dwho {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::invalid_argument("table: row width does not match the header");
  rows.push_back(std::move(row));
}

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 9);
  return std::string(buf, res.ptr);
}

namespace {

std::string csv_cell(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  return std::get<std::string>(cell);
}

}  // namespace

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t k = 0; k < table.columns.size(); ++k) out << (k ? "," : "") << table.columns[k];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << csv_cell(row[k]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& table) {
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json record = nlohmann::ordered_json::object();
    for (std::size_t k = 0; k < row.size(); ++k) {
      std::visit([&](const auto& v) { record[table.columns[k]] = v; }, row[k]);
    }
    records.push_back(std::move(record));
  }
  out << records.dump(2) << '\n';
}

}  // namespace dwho
