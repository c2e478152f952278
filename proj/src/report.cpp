#include "decwit/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "decwit/errors.hpp"
#include "decwit/version.hpp"

namespace decwit::report {

namespace {

// Display width in code points (the factored-number middle dot is a
// two-byte code point; aligning by bytes would skew columns after it).
std::size_t display_width(const std::string& text) {
  std::size_t width = 0;
  for (unsigned char c : text) {
    if ((c & 0xC0) != 0x80) ++width;
  }
  return width;
}

std::string scalar_to_string(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  if (value.is_null()) return "";
  if (value.is_number()) return value.dump();
  throw internal_error("report row values must be scalars");
}

std::string csv_escape(const std::string& value) {
  const bool needs_quotes =
      value.find_first_of(",\"\n\r") != std::string::npos ||
      (!value.empty() && (value.front() == ' ' || value.back() == ' '));
  if (!needs_quotes) return value;
  std::string escaped = "\"";
  for (char c : value) {
    if (c == '"') escaped += '"';
    escaped += c;
  }
  escaped += '"';
  return escaped;
}

void append_padded(std::string& line, const std::string& cell,
                   std::size_t width, bool last) {
  line += cell;
  if (!last) {
    line.append(width - display_width(cell) + 2, ' ');
  }
}

std::vector<std::string> row_cells(const Report& report, const Json& row) {
  std::vector<std::string> cells;
  cells.reserve(report.columns.size());
  for (const auto& column : report.columns) {
    auto it = row.find(column);
    cells.push_back(it == row.end() ? std::string() : scalar_to_string(*it));
  }
  return cells;
}

void require(bool condition, const char* what) {
  if (!condition) {
    throw std::invalid_argument(std::string("malformed report: ") + what);
  }
}

}  // namespace

const char* to_string(Format format) {
  switch (format) {
    case Format::Human:
      return "human";
    case Format::Json:
      return "json";
    case Format::Csv:
      return "csv";
  }
  throw internal_error("unknown format");
}

const char* to_string(Layout layout) {
  switch (layout) {
    case Layout::Table:
      return "table";
    case Layout::KeyValue:
      return "key-value";
  }
  throw internal_error("unknown layout");
}

std::optional<Format> format_from_token(const std::string& token) {
  if (token == "human") return Format::Human;
  if (token == "json") return Format::Json;
  if (token == "csv") return Format::Csv;
  return std::nullopt;
}

std::optional<Layout> layout_from_token(const std::string& token) {
  if (token == "table") return Layout::Table;
  if (token == "key-value") return Layout::KeyValue;
  return std::nullopt;
}

Json to_json(const Report& report) {
  Json parameters = Json::object();
  for (const auto& [key, value] : report.parameters) parameters[key] = value;
  Json rows = Json::array();
  for (const auto& row : report.rows) rows.push_back(row);
  return Json{{"command", report.command},
              {"version", report.version},
              {"parameters", parameters},
              {"meta", report.meta},
              {"columns", report.columns},
              {"layout", to_string(report.layout)},
              {"rows", rows}};
}

Report from_json(const Json& value) {
  require(value.is_object(), "not an object");
  for (const char* key :
       {"command", "version", "parameters", "meta", "columns", "layout",
        "rows"}) {
    require(value.contains(key), "missing required key");
  }
  require(value.size() == 7, "unexpected extra keys");
  Report report;
  require(value["command"].is_string(), "command must be a string");
  report.command = value["command"].get<std::string>();
  require(value["version"].is_string(), "version must be a string");
  report.version = value["version"].get<std::string>();
  require(value["parameters"].is_object(), "parameters must be an object");
  for (const auto& [key, parameter] : value["parameters"].items()) {
    require(parameter.is_string(), "parameter values must be strings");
    report.parameters.emplace_back(key, parameter.get<std::string>());
  }
  require(value["meta"].is_object(), "meta must be an object");
  report.meta = value["meta"];
  require(value["columns"].is_array(), "columns must be an array");
  for (const auto& column : value["columns"]) {
    require(column.is_string(), "columns must be strings");
    report.columns.push_back(column.get<std::string>());
  }
  require(value["layout"].is_string(), "layout must be a string");
  auto layout = layout_from_token(value["layout"].get<std::string>());
  require(layout.has_value(), "unknown layout");
  report.layout = *layout;
  require(value["rows"].is_array(), "rows must be an array");
  for (const auto& row : value["rows"]) {
    require(row.is_object(), "rows must be objects");
    for (const auto& [key, cell] : row.items()) {
      require(cell.is_primitive(), "row values must be scalars");
      require(std::find(report.columns.begin(), report.columns.end(), key) !=
                  report.columns.end(),
              "row key outside the column list");
    }
    report.rows.push_back(row);
  }
  return report;
}

bool operator==(const Report& a, const Report& b) {
  return to_json(a) == to_json(b);
}

std::string render_human(const Report& report) {
  std::string out = std::string(kToolName) + " " + report.command +
                    " (version " + report.version + ")\n";
  for (const auto& [key, value] : report.parameters) {
    out += "  " + key + ": " + value + "\n";
  }
  if (report.rows.empty()) {
    out += "\n(no rows)\n";
    return out;
  }
  out += "\n";
  if (report.layout == Layout::KeyValue) {
    std::size_t key_width = 0;
    for (const auto& column : report.columns) {
      key_width = std::max(key_width, display_width(column));
    }
    bool first = true;
    for (const auto& row : report.rows) {
      if (!first) out += "\n";
      first = false;
      const auto cells = row_cells(report, row);
      for (std::size_t i = 0; i < report.columns.size(); ++i) {
        out += report.columns[i];
        out.append(key_width - display_width(report.columns[i]) + 2, ' ');
        out += cells[i];
        out += "\n";
      }
    }
    return out;
  }
  // Aligned table.
  std::vector<std::size_t> widths;
  widths.reserve(report.columns.size());
  for (const auto& column : report.columns) {
    widths.push_back(display_width(column));
  }
  std::vector<std::vector<std::string>> grid;
  grid.reserve(report.rows.size());
  for (const auto& row : report.rows) {
    grid.push_back(row_cells(report, row));
    for (std::size_t i = 0; i < widths.size(); ++i) {
      widths[i] = std::max(widths[i], display_width(grid.back()[i]));
    }
  }
  std::string line;
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    append_padded(line, report.columns[i], widths[i],
                  i + 1 == report.columns.size());
  }
  out += line + "\n";
  line.clear();
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    append_padded(line, std::string(widths[i], '-'), widths[i],
                  i + 1 == report.columns.size());
  }
  out += line + "\n";
  for (const auto& cells : grid) {
    line.clear();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      append_padded(line, cells[i], widths[i], i + 1 == cells.size());
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string render_json(const Report& report) {
  return to_json(report).dump(2) + "\n";
}

std::string render_csv(const Report& report) {
  std::string out;
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_escape(report.columns[i]);
  }
  out += '\n';
  for (const auto& row : report.rows) {
    const auto cells = row_cells(report, row);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += csv_escape(cells[i]);
    }
    out += '\n';
  }
  return out;
}

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::Human:
      return render_human(report);
    case Format::Json:
      return render_json(report);
    case Format::Csv:
      return render_csv(report);
  }
  throw internal_error("unknown format");
}

}  // namespace decwit::report
