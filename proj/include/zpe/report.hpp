#pragma once

// Tabular report emission. CSV follows RFC 4180 quoting with a header row and
// 17 significant digits; JSON is {"meta": {...}, "rows": [{col: value}, ...]}.

#include <cstdint>
#include <iosfwd>
#include "json.hpp"
#include <string>
#include <variant>
#include <vector>

namespace zpe {

using Cell = std::variant<double, std::int64_t, std::string, bool>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

enum class OutputFormat { csv, json };

/// %.17g; non-finite values print as nan, inf, -inf.
std::string format_double(double value);

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, const nlohmann::ordered_json& meta, std::ostream& out);

/// Writes to `path`, or to `fallback` when path is empty or "-". Throws
/// IoError when the file cannot be written and DomainError for an empty table.
void emit_report(const Table& table, OutputFormat format, const std::string& path,
                 const nlohmann::ordered_json& meta, std::ostream& fallback);

}  // namespace zpe
