// SPDX-License-Identifier: Apache-2.0
#include "hct/csv.hpp"

#include <cmath>
#include <cstdio>

#include "hct/errors.hpp"

namespace hct {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& comments,
                     const std::vector<std::string>& columns)
    : path_(path), columns_(columns.size()) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  out_.open(path, std::ios::binary | std::ios::trunc);
  if (!out_) throw Error("cannot open '" + path.string() + "' for writing");
  for (const auto& line : comments) out_ << "# " << line << '\n';
  std::vector<CsvCell> header(columns.begin(), columns.end());
  write_cells(header);
}

void CsvWriter::row(const std::vector<CsvCell>& cells) {
  if (cells.size() != columns_) throw Error("CSV row has the wrong number of fields");
  write_cells(cells);
}

void CsvWriter::write_cells(const std::vector<CsvCell>& cells) {
  bool first = true;
  for (const auto& c : cells) {
    if (!first) out_ << ',';
    first = false;
    std::visit(
        [this](const auto& v) {
          using V = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<V, std::string>) {
            out_ << csv_escape(v);
          } else if constexpr (std::is_same_v<V, std::int64_t>) {
            out_ << v;
          } else if constexpr (std::is_same_v<V, double>) {
            out_ << format_double(v);
          }
        },
        c);
  }
  out_ << '\n';
  if (!out_) throw Error("write to '" + path_.string() + "' failed");
}

}  // namespace hct
