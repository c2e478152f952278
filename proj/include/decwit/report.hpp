#pragma once

// Structured result of one CLI invocation.  A report echoes the command and
// its parameters, carries command-specific metadata, and holds flat rows
// (scalar-valued objects over a fixed column list).  The same report
// renders as an aligned human table (or key/value block), as CSV with a
// header row, or as a single JSON object that round-trips losslessly back
// into the in-memory form.  CSV carries the rows only; parameters and
// metadata live in the JSON and human forms.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace decwit::report {

using Json = nlohmann::ordered_json;

enum class Format { Human, Json, Csv };
enum class Layout { Table, KeyValue };

const char* to_string(Format format);
const char* to_string(Layout layout);
std::optional<Format> format_from_token(const std::string& token);
std::optional<Layout> layout_from_token(const std::string& token);

struct Report {
  std::string command;
  std::string version;
  // Parameter echo, in declaration order (order is preserved by JSON).
  std::vector<std::pair<std::string, std::string>> parameters;
  // Command-specific extras (e.g. candidate lists); must be a JSON object.
  Json meta = Json::object();
  // Row schema: every row holds exactly these keys, scalar values only.
  std::vector<std::string> columns;
  // KeyValue renders each row as an aligned key/value block (used by the
  // single-result commands); Table renders an aligned column table.
  Layout layout = Layout::Table;
  std::vector<Json> rows;
};

// Lossless JSON form; from_json validates the shape and throws
// std::invalid_argument on malformed input.
Json to_json(const Report& report);
Report from_json(const Json& value);

bool operator==(const Report& a, const Report& b);

// Renderers.  All outputs end with a newline; all are byte-deterministic.
std::string render_human(const Report& report);
std::string render_json(const Report& report);
std::string render_csv(const Report& report);
std::string render(const Report& report, Format format);

}  // namespace decwit::report
