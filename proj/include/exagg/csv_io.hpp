#pragma once

#include <filesystem>
#include <vector>

#include "exagg/errors.hpp"

namespace exagg {
namespace csv {

// Interchange format: header row "expert_1,...,expert_K", then one data row
// per round. Plain decimal values, no thousands separators.

// Throws CsvParseError naming the offending 1-based file row. When
// expected_columns is nonzero the column count must match it.
std::vector<std::vector<double>> read_matrix(
    const std::filesystem::path& path, std::size_t expected_columns = 0);

void write_matrix(const std::filesystem::path& path,
                  const std::vector<std::vector<double>>& rows);

}  // namespace csv
}  // namespace exagg
