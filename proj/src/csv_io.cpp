#include "exagg/csv_io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace exagg {
namespace csv {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

std::vector<std::vector<double>> read_matrix(const std::filesystem::path& path,
                                             std::size_t expected_columns) {
  std::ifstream in(path);
  if (!in) throw CsvParseError("cannot open " + path.string());

  std::string line;
  std::size_t row = 0;
  std::size_t columns = expected_columns;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = split(line);
    if (row == 1) {
      // Header row expert_1,...,expert_K.
      if (columns == 0) {
        columns = fields.size();
      } else if (fields.size() != columns) {
        throw CsvParseError("row 1: header has " +
                            std::to_string(fields.size()) +
                            " columns, expected " + std::to_string(columns));
      }
      continue;
    }
    if (fields.size() != columns) {
      throw CsvParseError("row " + std::to_string(row) + ": expected " +
                          std::to_string(columns) + " fields, got " +
                          std::to_string(fields.size()));
    }
    std::vector<double> values(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i) {
      try {
        std::size_t consumed = 0;
        values[i] = std::stod(fields[i], &consumed);
        while (consumed < fields[i].size() &&
               std::isspace(static_cast<unsigned char>(fields[i][consumed]))) {
          ++consumed;
        }
        if (consumed != fields[i].size()) throw std::invalid_argument("junk");
      } catch (const std::exception&) {
        throw CsvParseError("row " + std::to_string(row) + ": field " +
                            std::to_string(i + 1) + " is not a number: '" +
                            fields[i] + "'");
      }
    }
    rows.push_back(std::move(values));
  }
  if (rows.empty()) throw CsvParseError(path.string() + " holds no data rows");
  return rows;
}

void write_matrix(const std::filesystem::path& path,
                  const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  if (!out) throw CsvParseError("cannot write " + path.string());
  if (rows.empty()) throw CsvParseError("nothing to write");
  for (std::size_t k = 0; k < rows.front().size(); ++k) {
    out << (k == 0 ? "expert_" : ",expert_") << k + 1;
  }
  out << '\n';
  char buffer[64];
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::snprintf(buffer, sizeof(buffer), "%.17g", row[i]);
      if (i) out << ',';
      out << buffer;
    }
    out << '\n';
  }
}

}  // namespace csv
}  // namespace exagg
