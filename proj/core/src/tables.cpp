#include "quadclass/tables.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "quadclass/discdata.hpp"
#include "quadclass/golden.hpp"
#include "quadclass/qform.hpp"
#include "quadclass/rayclass.hpp"

namespace quadclass {
namespace {

// Largest d covered by each reference table.
constexpr long kClassGroupCoverage = 90;
constexpr long kClassFieldCoverage = 15;
constexpr long kDegenerationCoverage = 500;

std::string join(const std::vector<Integer>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ";" : "") + values[i].get_str();
  return out;
}

std::map<Integer, const ClassGroupRef*> classgroup_refs() {
  std::map<Integer, const ClassGroupRef*> out;
  for (const auto& ref : golden_classgroup()) out[ref.d] = &ref;
  return out;
}

OutputDocument classgroup_table(long dmax) {
  OutputDocument doc;
  doc.name = "classgroup";
  doc.columns = {"d", "delta0", "fprimes", "h", "total", "sic_count"};
  doc.notes = {"sic_count is external data (numerical SIC counts) echoed from reference rows, not computed"};
  const auto refs = classgroup_refs();
  for (long dd = 1; dd <= dmax; ++dd) {
    const Integer d = dd;
    const auto it = refs.find(d);
    const Cell sic = it != refs.end() ? Cell(it->second->sic_count) : Cell(std::monostate{});
    if (dd == 3) {
      doc.rows.push_back({d, Integer(0), std::string("*"), std::string("*"), std::string("inf"), sic});
      continue;
    }
    if (dd < 3) {
      // Definite discriminants -4 and -3: fixed reference values, class number 1.
      doc.rows.push_back({d, (d + 1) * (d - 3), std::string("1"), std::string("1"), Integer(1), sic});
      continue;
    }
    const ClassMonoid monoid = class_monoid(d);
    std::vector<Integer> conductors, hs;
    for (const auto& part : monoid.parts) {
      conductors.push_back(part.conductor);
      hs.push_back(part.class_number);
    }
    doc.rows.push_back({d, monoid.delta0, join(conductors), join(hs), monoid.size, sic});
  }
  return doc;
}

OutputDocument classfield_table(long dmax) {
  OutputDocument doc;
  doc.name = "classfield";
  doc.columns = {"d", "fprime", "h", "degE", "degEtilde", "multiplet", "sic_deg_triple", "sic_deg_proj"};
  doc.notes = {"multiplet, sic_deg_triple and sic_deg_proj are external data echoed from reference rows"};
  std::map<std::pair<Integer, Integer>, const ClassFieldRef*> refs;
  for (const auto& ref : golden_classfield()) refs[{ref.d, ref.conductor}] = &ref;
  for (long dd = 4; dd <= dmax; ++dd) {
    const MultipletReport report = multiplet_report(dd);
    for (const auto& e : report.entries) {
      std::vector<Cell> row{report.d, e.conductor, e.class_number, e.degree_E, e.degree_Etilde};
      const auto it = refs.find({report.d, e.conductor});
      if (it != refs.end()) {
        row.insert(row.end(), {it->second->multiplet, it->second->sic_degree_triple, it->second->sic_degree_projective});
      } else {
        row.insert(row.end(), 3, std::monostate{});
      }
      doc.rows.push_back(std::move(row));
    }
  }
  return doc;
}

OutputDocument degeneration_table(long dmax) {
  OutputDocument doc;
  doc.name = "degeneration";
  doc.columns = {"d", "delta0", "fprime", "f2prime", "h", "degE"};
  for (long dd = 4; dd <= dmax; ++dd) {
    const Integer d = dd;
    if (!degeneration_predicate(d)) continue;
    const auto pairs = degenerate_pairs(d);
    if (pairs.empty()) continue;
    const RayClassField field = RayClassField::for_dimension(d);
    for (const auto& [small, large] : pairs) {
      const Integer h = class_number(small * small * field.data.delta0);
      doc.rows.push_back({d, field.data.delta0, small, large, h, field.degree_E(small)});
    }
  }
  return doc;
}

std::string describe(const std::vector<Cell>& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + cell_text(row[i]);
  return out;
}

/// Looks up rows by their key columns and compares the checked columns as text.
void compare_keyed(const OutputDocument& doc, const std::vector<std::vector<std::string>>& expected,
                   const std::vector<std::size_t>& keys, const std::vector<std::size_t>& columns, long coverage, GoldenCheck& check) {
  std::map<std::vector<std::string>, const std::vector<Cell>*> by_key;
  for (const auto& row : doc.rows) {
    std::vector<std::string> key;
    for (std::size_t k : keys) key.push_back(cell_text(row[k]));
    by_key[key] = &row;
  }
  const std::size_t key_width = keys.size();
  std::size_t matched = 0;
  for (const auto& want : expected) {
    ++check.compared;
    const std::vector<std::string> key(want.begin(), want.begin() + static_cast<long>(key_width));
    const auto it = by_key.find(key);
    if (it == by_key.end()) {
      check.mismatches.push_back(doc.name + ": missing row " + describe({want.begin(), want.end()}));
      continue;
    }
    ++matched;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      const std::string got = cell_text((*it->second)[columns[j]]);
      if (got != want[key_width + j]) {
        check.mismatches.push_back(doc.name + ": row " + describe(*it->second) + " column " + doc.columns[columns[j]] +
                                   " is " + got + ", expected " + want[key_width + j]);
      }
    }
  }
  std::size_t in_range = 0;
  for (const auto& row : doc.rows) {
    if (std::get<Integer>(row[0]) <= coverage) ++in_range;
  }
  if (in_range != matched) {
    check.mismatches.push_back(doc.name + ": " + std::to_string(in_range) + " rows with d <= " + std::to_string(coverage) +
                               " but " + std::to_string(matched) + " reference rows matched");
  }
}

}  // namespace

std::optional<TableName> parse_table_name(std::string_view name) {
  if (name == "classgroup") return TableName::ClassGroup;
  if (name == "classfield") return TableName::ClassField;
  if (name == "degeneration") return TableName::Degeneration;
  return std::nullopt;
}

std::string_view table_name_str(TableName name) {
  switch (name) {
    case TableName::ClassGroup: return "classgroup";
    case TableName::ClassField: return "classfield";
    case TableName::Degeneration: return "degeneration";
  }
  return "";
}

OutputDocument build_table(TableName name, long dmax) {
  if (dmax < 1 || dmax > kMaxTableDimension) {
    throw std::invalid_argument("dmax must lie in [1, " + std::to_string(kMaxTableDimension) + "]");
  }
  switch (name) {
    case TableName::ClassGroup: return classgroup_table(dmax);
    case TableName::ClassField: return classfield_table(dmax);
    case TableName::Degeneration: return degeneration_table(dmax);
  }
  throw std::invalid_argument("unknown table");
}

GoldenCheck compare_with_golden(TableName name, const OutputDocument& doc, long dmax) {
  GoldenCheck check;
  std::vector<std::vector<std::string>> expected;
  switch (name) {
    case TableName::ClassGroup: {
      for (const auto& ref : golden_classgroup()) {
        if (ref.d > dmax) continue;
        if (ref.infinite) {
          expected.push_back({ref.d.get_str(), "*", "*"});
        } else {
          expected.push_back({ref.d.get_str(), join(ref.conductors), join(ref.class_numbers)});
        }
      }
      // delta0 is compared separately since d = 3 carries no discriminant.
      compare_keyed(doc, expected, {0}, {2, 3}, std::min(dmax, kClassGroupCoverage), check);
      for (const auto& ref : golden_classgroup()) {
        if (ref.d > dmax || ref.infinite) continue;
        for (const auto& row : doc.rows) {
          if (std::get<Integer>(row[0]) != ref.d) continue;
          if (cell_text(row[1]) != ref.delta0.get_str()) {
            check.mismatches.push_back("classgroup: d=" + ref.d.get_str() + " delta0 is " + cell_text(row[1]) +
                                       ", expected " + ref.delta0.get_str());
          }
        }
      }
      break;
    }
    case TableName::ClassField:
      for (const auto& ref : golden_classfield()) {
        if (ref.d > dmax) continue;
        expected.push_back({ref.d.get_str(), ref.conductor.get_str(), ref.class_number.get_str(), ref.degree_E.get_str(),
                            ref.degree_Etilde.get_str()});
      }
      compare_keyed(doc, expected, {0, 1}, {2, 3, 4}, std::min(dmax, kClassFieldCoverage), check);
      break;
    case TableName::Degeneration:
      for (const auto& ref : golden_degeneration()) {
        if (ref.d > dmax) continue;
        expected.push_back({ref.d.get_str(), ref.conductor.get_str(), ref.doubled_conductor.get_str(),
                            ref.delta0.get_str(), ref.class_number.get_str(), ref.degree_E.get_str()});
      }
      compare_keyed(doc, expected, {0, 2, 3}, {1, 4, 5}, std::min(dmax, kDegenerationCoverage), check);
      break;
  }
  return check;
}

}  // namespace quadclass
