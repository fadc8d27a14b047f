#include "quadclass/golden.hpp"

#include <sstream>
#include <stdexcept>

namespace quadclass {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(text);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

/// Data rows of a CSV: comment lines and the header are dropped.
std::vector<std::vector<std::string>> data_rows(std::string_view csv, std::size_t width) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(csv)};
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    auto cells = split(line, ',');
    if (cells.size() != width) throw std::runtime_error("golden data: malformed row '" + line + "'");
    rows.push_back(std::move(cells));
  }
  return rows;
}

Integer parse_integer(const std::string& text) {
  Integer n;
  if (text.empty() || n.set_str(text, 10) != 0) throw std::runtime_error("golden data: bad integer '" + text + "'");
  return n;
}

std::vector<Integer> parse_list(const std::string& text) {
  std::vector<Integer> out;
  for (const auto& item : split(text, ';')) out.push_back(parse_integer(item));
  return out;
}

}  // namespace

const std::vector<ClassGroupRef>& golden_classgroup() {
  static const std::vector<ClassGroupRef> rows = [] {
    std::vector<ClassGroupRef> out;
    for (const auto& cells : data_rows(golden_classgroup_csv(), 5)) {
      ClassGroupRef ref;
      ref.d = parse_integer(cells[0]);
      ref.sic_count = cells[4];
      if (cells[2] == "*") {
        ref.infinite = true;
      } else {
        ref.delta0 = parse_integer(cells[1]);
        ref.conductors = parse_list(cells[2]);
        ref.class_numbers = parse_list(cells[3]);
      }
      out.push_back(std::move(ref));
    }
    return out;
  }();
  return rows;
}

const std::vector<DegenerationRef>& golden_degeneration() {
  static const std::vector<DegenerationRef> rows = [] {
    std::vector<DegenerationRef> out;
    for (const auto& c : data_rows(golden_degeneration_csv(), 6)) {
      out.push_back({parse_integer(c[0]), parse_integer(c[1]), parse_integer(c[2]), parse_integer(c[3]),
                     parse_integer(c[4]), parse_integer(c[5])});
    }
    return out;
  }();
  return rows;
}

const std::vector<ClassFieldRef>& golden_classfield() {
  static const std::vector<ClassFieldRef> rows = [] {
    std::vector<ClassFieldRef> out;
    for (const auto& c : data_rows(golden_classfield_csv(), 8)) {
      out.push_back({parse_integer(c[0]), parse_integer(c[1]), parse_integer(c[2]), parse_integer(c[3]),
                     parse_integer(c[4]), c[5], c[6], c[7]});
    }
    return out;
  }();
  return rows;
}

}  // namespace quadclass
