#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadclass/arith.hpp"
#include "quadclass/output.hpp"

namespace quadclass {

enum class TableName { ClassGroup, ClassField, Degeneration };

std::optional<TableName> parse_table_name(std::string_view name);
std::string_view table_name_str(TableName name);

/// Largest dmax accepted by build_table and the CLI.
inline constexpr long kMaxTableDimension = 2000;

/// Regenerates a table from scratch for dimensions up to dmax.
///   classgroup:   one row per 1 <= d <= dmax (d = 3 is the infinite family)
///   classfield:   one row per (d, f') with 4 <= d <= dmax
///   degeneration: one row per degenerate pair (f', 2f') with 4 <= d <= dmax
/// External data columns (SIC counts, multiplet labels) are echoed from the
/// embedded reference rows when available and left empty otherwise.
OutputDocument build_table(TableName name, long dmax);

struct GoldenCheck {
  std::size_t compared = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Compares a document produced by build_table against the embedded reference
/// rows with d <= dmax. Every reference row must be matched and, for
/// classfield and degeneration, no extra rows may be present.
GoldenCheck compare_with_golden(TableName name, const OutputDocument& doc, long dmax);

}  // namespace quadclass
