#pragma once

#include <cerrno>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "mark/error.hpp"

namespace mark::io {

struct CsvCell {
  std::string text;
  std::size_t column = 0;  // 1-based character column of the cell start
};

struct CsvRow {
  std::vector<CsvCell> cells;
  std::size_t line = 0;  // 1-based
};

inline std::string location(std::size_t line, std::size_t column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

[[noreturn]] inline void parse_fail(std::size_t line, std::size_t column, const std::string& what) {
  throw Error(Errc::ParseError, location(line, column) + ": " + what);
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

/// Comma-separated rows. Blank lines and lines starting with '#' are skipped.
/// Quoted cells are not supported: labels never contain commas here.
inline std::vector<CsvRow> parse_csv(std::string_view text) {
  std::vector<CsvRow> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (trim(line).empty() || trim(line).front() == '#') continue;
    CsvRow row;
    row.line = line_no;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      const auto raw = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
      if (raw.find('"') != std::string_view::npos)
        parse_fail(line_no, start + 1, "quoted cells are not supported");
      row.cells.push_back({std::string(trim(raw)), start + 1});
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline double parse_number(const CsvCell& cell, std::size_t line) {
  if (cell.text.empty()) parse_fail(line, cell.column, "empty cell where a number is expected");
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(cell.text.c_str(), &end);
  if (end != cell.text.c_str() + cell.text.size() || errno == ERANGE)
    parse_fail(line, cell.column, "'" + cell.text + "' is not a number");
  return value;
}

}  // namespace mark::io
