// Tabular reports with deterministic CSV and JSON serialization. Real-valued
// cells are quantized to 12 significant digits when a row is added, so the
// serialized text parses back to exactly the stored values.
#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace mubbell {

using Cell = std::variant<long long, double, std::string>;

enum class CellKind { integer, real, text };

inline std::string format_real(double x) {
  if (!std::isfinite(x)) throw std::logic_error("format_real: non-finite value");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline double quantize_real(double x) {
  return std::strtod(format_real(x).c_str(), nullptr);
}

struct Table {
  std::vector<std::string> columns;
  std::vector<CellKind> kinds;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row) {
    if (row.size() != columns.size() || columns.size() != kinds.size())
      throw std::logic_error("Table::add_row: shape mismatch");
    for (std::size_t i = 0; i < row.size(); ++i) {
      switch (kinds[i]) {
        case CellKind::integer:
          if (!std::holds_alternative<long long>(row[i]))
            throw std::logic_error("Table::add_row: expected integer cell");
          break;
        case CellKind::real:
          if (!std::holds_alternative<double>(row[i]))
            throw std::logic_error("Table::add_row: expected real cell");
          row[i] = quantize_real(std::get<double>(row[i]));
          break;
        case CellKind::text:
          if (!std::holds_alternative<std::string>(row[i]))
            throw std::logic_error("Table::add_row: expected text cell");
          break;
      }
    }
    rows.push_back(std::move(row));
  }
};

namespace detail {

inline std::string cell_to_string(const Cell& cell) {
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) return format_real(*d);
  return std::get<std::string>(cell);
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

// Header row plus one line per data row, comma separated, LF line endings.
inline std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) out += ',';
    out += t.columns[c];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += detail::cell_to_string(row[c]);
    }
    out += '\n';
  }
  return out;
}

// Array of flat objects mirroring the CSV column names.
inline std::string to_json(const Table& t) {
  std::string out = "[\n";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    out += "  {";
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      if (c) out += ", ";
      out += '"';
      out += detail::json_escape(t.columns[c]);
      out += "\": ";
      if (t.kinds[c] == CellKind::text) {
        out += '"';
        out += detail::json_escape(std::get<std::string>(t.rows[r][c]));
        out += '"';
      } else {
        out += detail::cell_to_string(t.rows[r][c]);
      }
    }
    out += (r + 1 < t.rows.size()) ? "},\n" : "}\n";
  }
  out += "]\n";
  return out;
}

// Parses text produced by to_csv back into a table with the given column
// kinds. Cells never contain commas or quotes, so a plain split suffices.
inline Table parse_csv(const std::string& text, const std::vector<CellKind>& kinds) {
  Table t;
  t.kinds = kinds;
  std::size_t pos = 0;
  bool header = true;
  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos)
      throw std::runtime_error("parse_csv: missing trailing newline");
    const std::string line = text.substr(pos, eol - pos);
    pos = eol + 1;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (header) {
      if (fields.size() != kinds.size())
        throw std::runtime_error("parse_csv: header width does not match kinds");
      t.columns = fields;
      header = false;
      continue;
    }
    std::vector<Cell> row;
    row.reserve(fields.size());
    for (std::size_t c = 0; c < fields.size(); ++c) {
      switch (kinds[c]) {
        case CellKind::integer: row.emplace_back(static_cast<long long>(std::stoll(fields[c]))); break;
        case CellKind::real: row.emplace_back(std::strtod(fields[c].c_str(), nullptr)); break;
        case CellKind::text: row.emplace_back(fields[c]); break;
      }
    }
    t.add_row(std::move(row));
  }
  return t;
}

}  // namespace mubbell
