// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hct {

/// One CSV field: empty, text, integer, or a double written with 17
/// significant digits.
using CsvCell = std::variant<std::monostate, std::string, std::int64_t, double>;

std::string format_double(double v);

/// RFC 4180 writer with LF line endings. The file starts with `#` comment
/// lines (library version, config JSON) followed by the column header.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& comments,
            const std::vector<std::string>& columns);

  void row(const std::vector<CsvCell>& cells);

  [[nodiscard]] const std::filesystem::path& path() const { return path_; }

 private:
  void write_cells(const std::vector<CsvCell>& cells);

  std::filesystem::path path_;
  std::ofstream out_;
  std::size_t columns_;
};

/// Field quoted when it contains a comma, quote, CR or LF.
std::string csv_escape(std::string_view field);

inline CsvCell cell(double v) { return v; }
inline CsvCell cell(std::size_t v) { return static_cast<std::int64_t>(v); }
inline CsvCell cell(int v) { return static_cast<std::int64_t>(v); }
inline CsvCell cell(std::string v) { return v; }
inline CsvCell cell(std::string_view v) { return std::string(v); }
inline CsvCell cell(const char* v) { return std::string(v); }
inline CsvCell blank() { return std::monostate{}; }

}  // namespace hct
