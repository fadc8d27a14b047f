#include "quadclass/output.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace quadclass {
namespace {

using Json = nlohmann::ordered_json;

Json integer_to_json(const Integer& n) {
  if (fits_int64(n)) return to_int64(n);
  return Json{{"bigint", n.get_str()}};
}

Json cell_to_json(const Cell& cell) {
  if (std::holds_alternative<std::monostate>(cell)) return nullptr;
  if (const auto* n = std::get_if<Integer>(&cell)) return integer_to_json(*n);
  return std::get<std::string>(cell);
}

Cell cell_from_json(const Json& j) {
  if (j.is_null()) return std::monostate{};
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_object()) return Integer(j.at("bigint").get<std::string>());
  if (j.is_string()) return j.get<std::string>();
  throw std::invalid_argument("parse_json_document: unsupported cell " + j.dump());
}

std::string csv_escape(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string render_csv(const OutputDocument& doc) {
  std::ostringstream os;
  for (std::size_t i = 0; i < doc.columns.size(); ++i) os << (i ? "," : "") << csv_escape(doc.columns[i]);
  os << '\n';
  for (const auto& row : doc.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(cell_text(row[i]));
    os << '\n';
  }
  return os.str();
}

std::string render_markdown(const OutputDocument& doc) {
  std::ostringstream os;
  os << '|';
  for (const auto& c : doc.columns) os << ' ' << c << " |";
  os << "\n|";
  for (std::size_t i = 0; i < doc.columns.size(); ++i) os << "---|";
  os << '\n';
  for (const auto& row : doc.rows) {
    os << '|';
    for (const auto& cell : row) os << ' ' << cell_text(cell) << " |";
    os << '\n';
  }
  if (!doc.notes.empty()) {
    os << '\n';
    for (const auto& note : doc.notes) os << "- " << note << '\n';
  }
  return os.str();
}

std::string render_json(const OutputDocument& doc) {
  Json j;
  j["schema_version"] = doc.schema_version;
  j["name"] = doc.name;
  j["columns"] = doc.columns;
  Json rows = Json::array();
  for (const auto& row : doc.rows) {
    Json r = Json::array();
    for (const auto& cell : row) r.push_back(cell_to_json(cell));
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  j["notes"] = doc.notes;
  return j.dump(2) + "\n";
}

Json optional_integer(const std::optional<Integer>& n) { return n ? integer_to_json(*n) : Json(nullptr); }

}  // namespace

std::string cell_text(const Cell& cell) {
  if (std::holds_alternative<std::monostate>(cell)) return "";
  if (const auto* n = std::get_if<Integer>(&cell)) return n->get_str();
  return std::get<std::string>(cell);
}

std::optional<Format> parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "md") return Format::Markdown;
  return std::nullopt;
}

std::size_t OutputDocument::column(std::string_view label) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == label) return i;
  }
  throw std::out_of_range("no column named " + std::string(label) + " in " + name);
}

std::string render(const OutputDocument& doc, Format format) {
  switch (format) {
    case Format::Json: return render_json(doc);
    case Format::Csv: return render_csv(doc);
    case Format::Markdown: return render_markdown(doc);
  }
  throw std::invalid_argument("unknown format");
}

OutputDocument parse_json_document(std::string_view json) {
  const Json j = Json::parse(json);
  OutputDocument doc;
  doc.schema_version = j.at("schema_version").get<std::string>();
  doc.name = j.at("name").get<std::string>();
  doc.columns = j.at("columns").get<std::vector<std::string>>();
  for (const auto& r : j.at("rows")) {
    std::vector<Cell> row;
    for (const auto& cell : r) row.push_back(cell_from_json(cell));
    doc.rows.push_back(std::move(row));
  }
  doc.notes = j.at("notes").get<std::vector<std::string>>();
  return doc;
}

std::string render_multiplets(const MultipletReport& report, Format format) {
  if (format == Format::Json) {
    Json j;
    j["schema_version"] = "1";
    j["d"] = integer_to_json(report.d);
    j["delta"] = integer_to_json(report.delta);
    j["delta0"] = integer_to_json(report.delta0);
    j["f"] = integer_to_json(report.f);
    Json entries = Json::array();
    for (const auto& e : report.entries) {
      entries.push_back(Json{{"fprime", integer_to_json(e.conductor)},
                             {"disc", integer_to_json(e.discriminant)},
                             {"h", integer_to_json(e.class_number)},
                             {"degE", integer_to_json(e.degree_E)},
                             {"degEtilde", integer_to_json(e.degree_Etilde)},
                             {"degenerate_with", optional_integer(e.degenerate_with)}});
    }
    j["entries"] = std::move(entries);
    j["total"] = integer_to_json(report.total);
    return j.dump(2) + "\n";
  }
  OutputDocument doc;
  doc.name = "multiplets";
  doc.columns = {"d", "fprime", "disc", "h", "degE", "degEtilde", "degenerate_with"};
  for (const auto& e : report.entries) {
    doc.rows.push_back({report.d, e.conductor, e.discriminant, e.class_number, e.degree_E, e.degree_Etilde,
                        e.degenerate_with ? Cell(*e.degenerate_with) : Cell(std::monostate{})});
  }
  std::string body = render(doc, format);
  if (format == Format::Markdown) {
    body += "\ndelta = " + report.delta.get_str() + " = " + report.f.get_str() + "^2 * " + report.delta0.get_str() +
            ", total = " + report.total.get_str() + "\n";
  }
  return body;
}

}  // namespace quadclass
