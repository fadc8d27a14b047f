#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "quadclass/arith.hpp"
#include "quadclass/rayclass.hpp"

namespace quadclass {

enum class Format { Json, Csv, Markdown };

std::optional<Format> parse_format(std::string_view name);

/// Empty, integer, or text.
using Cell = std::variant<std::monostate, Integer, std::string>;

/// Plain text of a cell as written to CSV and Markdown; empty cells are "".
std::string cell_text(const Cell& cell);

/// A rendered table: rows are in deterministic order (ascending d, then f').
struct OutputDocument {
  std::string schema_version = "1";
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> notes;

  /// Index of a column by name; throws std::out_of_range if absent.
  std::size_t column(std::string_view label) const;

  friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

std::string render(const OutputDocument& doc, Format format);

/// Inverse of render(doc, Format::Json). Integers beyond 64 bits are written
/// as {"bigint": "<digits>"} so they parse back losslessly.
OutputDocument parse_json_document(std::string_view json);

/// Multiplet report as JSON ({d, delta, delta0, f, entries, total}) or as a
/// flat CSV/Markdown table of entries.
std::string render_multiplets(const MultipletReport& report, Format format);

}  // namespace quadclass
