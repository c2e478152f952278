// CLI and report-layer tests: rendering in all three formats, lossless JSON
// round-trips, schema conformance of every JSON output, exit-code mapping,
// the golden corollary table, and the worked command examples.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "decwit/cli.hpp"
#include "decwit/report.hpp"

namespace {

using decwit::report::Json;
using decwit::report::Layout;
using decwit::report::Report;

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = decwit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto result = run_cli(args);
  REQUIRE(result.code == decwit::cli::kExitOk);
  return Json::parse(result.out);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Report sample_report() {
  Report report;
  report.command = "demo";
  report.version = "9.9.9";
  report.parameters = {{"alpha", "1"}};
  report.columns = {"name", "value"};
  report.layout = Layout::Table;
  report.rows.push_back(Json{{"name", "x·y"}, {"value", 3}});
  report.rows.push_back(Json{{"name", "plain"}, {"value", true}});
  return report;
}

// ---------------------------------------------------------------------------
// Minimal JSON-schema checker covering the subset of draft-07 used by the
// shipped schema file: type, enum, required, properties,
// additionalProperties, items.
bool type_matches(const Json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "number") return value.is_number();
  if (type == "integer") return value.is_number_integer();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  return false;
}

bool schema_valid(const Json& schema, const Json& value) {
  if (schema.contains("enum")) {
    bool matched = false;
    for (const auto& candidate : schema["enum"]) {
      matched = matched || candidate == value;
    }
    if (!matched) return false;
  }
  if (schema.contains("type")) {
    const Json& type = schema["type"];
    if (type.is_string()) {
      if (!type_matches(value, type.get<std::string>())) return false;
    } else {
      bool matched = false;
      for (const auto& option : type) {
        matched = matched || type_matches(value, option.get<std::string>());
      }
      if (!matched) return false;
    }
  }
  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema["required"]) {
        if (!value.contains(key.get<std::string>())) return false;
      }
    }
    const Json properties = schema.contains("properties")
                                ? schema["properties"]
                                : Json::object();
    for (const auto& [key, sub_schema] : properties.items()) {
      if (value.contains(key) && !schema_valid(sub_schema, value.at(key))) {
        return false;
      }
    }
    if (schema.contains("additionalProperties")) {
      const Json& extra = schema["additionalProperties"];
      for (const auto& [key, member] : value.items()) {
        if (properties.contains(key)) continue;
        if (extra.is_boolean()) {
          if (!extra.get<bool>()) return false;
        } else if (!schema_valid(extra, member)) {
          return false;
        }
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    for (const auto& element : value) {
      if (!schema_valid(schema["items"], element)) return false;
    }
  }
  return true;
}

const Json& shipped_schema() {
  static const Json schema =
      Json::parse(read_file(std::string(DECWIT_DATA_DIR) +
                            "/report.schema.json"));
  return schema;
}

// Full conformance check for one JSON-rendered command: parses, validates
// against the shipped schema, and round-trips through the in-memory form
// (which additionally enforces row-keys-within-columns).
void check_json_output(const std::vector<std::string>& args) {
  INFO("args: ", args.empty() ? std::string() : args.front());
  const Json document = run_json(args);
  CHECK(schema_valid(shipped_schema(), document));
  const Report parsed = decwit::report::from_json(document);
  CHECK(decwit::report::to_json(parsed) == document);
}

}  // namespace

TEST_CASE("report: human rendering, table and key-value layouts") {
  Report report = sample_report();
  // The middle dot in "x·y" is one display column; byte-based alignment
  // would shift the next column by one.
  CHECK(decwit::report::render_human(report) ==
        "decwit demo (version 9.9.9)\n"
        "  alpha: 1\n"
        "\n"
        "name   value\n"
        "-----  -----\n"
        "x·y    3\n"
        "plain  true\n");

  report.layout = Layout::KeyValue;
  CHECK(decwit::report::render_human(report) ==
        "decwit demo (version 9.9.9)\n"
        "  alpha: 1\n"
        "\n"
        "name   x·y\n"
        "value  3\n"
        "\n"
        "name   plain\n"
        "value  true\n");

  report.rows.clear();
  CHECK(decwit::report::render_human(report) ==
        "decwit demo (version 9.9.9)\n"
        "  alpha: 1\n"
        "\n"
        "(no rows)\n");
}

TEST_CASE("report: csv rendering with RFC-style quoting") {
  Report report;
  report.command = "demo";
  report.version = "9.9.9";
  report.columns = {"text"};
  report.rows.push_back(Json{{"text", "a,b"}});
  report.rows.push_back(Json{{"text", "say \"hi\""}});
  report.rows.push_back(Json{{"text", " padded"}});
  report.rows.push_back(Json{{"text", "multi\nline"}});
  CHECK(decwit::report::render_csv(report) ==
        "text\n"
        "\"a,b\"\n"
        "\"say \"\"hi\"\"\"\n"
        "\" padded\"\n"
        "\"multi\nline\"\n");

  report.rows.clear();
  CHECK(decwit::report::render_csv(report) == "text\n");
}

TEST_CASE("report: JSON round-trip is lossless") {
  Report report = sample_report();
  report.meta = Json{{"candidates", Json{{"3", Json::array({3, 5})}}}};
  // A null cell (the no-witness search rows use them) must survive as well.
  report.rows.push_back(Json{{"name", "hole"}, {"value", nullptr}});

  const Json encoded = decwit::report::to_json(report);
  const Report decoded = decwit::report::from_json(encoded);
  CHECK(decoded == report);
  CHECK(decwit::report::to_json(decoded) == encoded);
  // Byte-level determinism of the renderer.
  CHECK(decwit::report::render_json(report) ==
        decwit::report::render_json(decoded));
}

TEST_CASE("report: malformed JSON documents are rejected") {
  const Json good = decwit::report::to_json(sample_report());

  Json missing = good;
  missing.erase("rows");
  CHECK_THROWS_AS(decwit::report::from_json(missing), std::invalid_argument);

  Json extra = good;
  extra["zap"] = 1;
  CHECK_THROWS_AS(decwit::report::from_json(extra), std::invalid_argument);

  Json bad_parameter = good;
  bad_parameter["parameters"]["alpha"] = 1;
  CHECK_THROWS_AS(decwit::report::from_json(bad_parameter),
                  std::invalid_argument);

  Json bad_layout = good;
  bad_layout["layout"] = "diagonal";
  CHECK_THROWS_AS(decwit::report::from_json(bad_layout),
                  std::invalid_argument);

  Json stray_key = good;
  stray_key["rows"][0]["orphan"] = 1;
  CHECK_THROWS_AS(decwit::report::from_json(stray_key),
                  std::invalid_argument);

  Json nested_cell = good;
  nested_cell["rows"][0]["value"] = Json::array({1, 2});
  CHECK_THROWS_AS(decwit::report::from_json(nested_cell),
                  std::invalid_argument);
}

TEST_CASE("cli: exit codes and diagnostics") {
  CHECK(run_cli({}).code == decwit::cli::kExitUsage);
  CHECK(run_cli({"no-such-command"}).code == decwit::cli::kExitUsage);
  CHECK(run_cli({"corollary", "--bogus-flag"}).code ==
        decwit::cli::kExitUsage);
  CHECK(run_cli({"weil", "count", "--kind", "xx", "--n", "3", "--q", "7",
                 "--j", "0"})
            .code == decwit::cli::kExitUsage);
  CHECK(run_cli({"alt-witness", "--n", "10"}).code ==
        decwit::cli::kExitUsage);

  // Diagnostics go to the error stream, nothing to the output stream.
  const auto failure = run_cli({"classify", "--family", "alt", "--p", "5"});
  CHECK(failure.code == decwit::cli::kExitUsage);
  CHECK(failure.out.empty());
  CHECK(failure.err.find("requires --n") != std::string::npos);

  // Domain-level rejects surface as exit 2 as well.
  CHECK(run_cli({"alt-witness", "--n", "10", "--p", "4"}).code ==
        decwit::cli::kExitUsage);
  CHECK(run_cli({"weil", "count", "--kind", "sl", "--n", "3", "--q", "7",
                 "--j", "6"})
            .code == decwit::cli::kExitUsage);
  CHECK(run_cli({"classify", "--family", "sporadic", "--name", "Nope",
                 "--p", "5"})
            .code == decwit::cli::kExitUsage);
  CHECK(run_cli({"survey", "--family", "lie", "--series", "2B2", "--q", "16",
                 "--p-min", "5", "--p-max", "7"})
            .code == decwit::cli::kExitUsage);

  const auto help = run_cli({"--help"});
  CHECK(help.code == decwit::cli::kExitOk);
  CHECK(help.out.find("Usage: decwit") != std::string::npos);
  const auto sub_help = run_cli({"weil", "search", "--help"});
  CHECK(sub_help.code == decwit::cli::kExitOk);
  CHECK(sub_help.out.find("--aut") != std::string::npos);

  const auto version = run_cli({"--version"});
  CHECK(version.code == decwit::cli::kExitOk);
  CHECK(version.out == "0.1.0\n");
}

TEST_CASE("cli: worked examples") {
  // Weil count: the index-3 congruence for SL_3(7) has no solutions.
  const Json count = run_json({"weil", "count", "--kind", "sl", "--n", "3",
                               "--q", "7", "--j", "3"});
  CHECK(count["rows"].size() == 1);
  CHECK(count["rows"][0]["count"] == 0);
  CHECK(count["rows"][0]["modulus"] == 6);
  CHECK(count["rows"][0]["centre_order"] == 3);
  CHECK(count["meta"]["offset"] == 0);

  // Both engines agree through the CLI as well.
  const Json brute = run_json({"weil", "count", "--kind", "su", "--n", "4",
                               "--q", "5", "--j", "4", "--engine", "brute"});
  const Json dp = run_json({"weil", "count", "--kind", "su", "--n", "4",
                            "--q", "5", "--j", "4", "--engine", "dp"});
  CHECK(brute["rows"][0]["count"] == dp["rows"][0]["count"]);

  // Alternating witness for n = 10, p = 5.
  const Json alt = run_json({"alt-witness", "--n", "10", "--p", "5"});
  const Json& alt_row = alt["rows"][0];
  CHECK(alt_row["lambda"] == "(8,1,1)");
  CHECK(alt_row["degree"] == "2^2·3^2");
  CHECK(alt_row["case"] == "p-divides-n");
  CHECK(alt_row["degree_not_one"] == true);
  CHECK(alt_row["degree_prime_to_p"] == true);
  CHECK(alt_row["principal_block"] == true);
  const Json expanded = run_json({"alt-witness", "--n", "10", "--p", "5",
                                  "--expand"});
  CHECK(expanded["rows"][0]["degree"] == "36");

  // The --expand size cap rejects astronomically long decimals.
  const auto capped = run_cli({"alt-witness", "--n", "10000", "--p", "5003",
                               "--expand"});
  CHECK(capped.code == decwit::cli::kExitUsage);
  CHECK(capped.err.find("--expand") != std::string::npos);
}

TEST_CASE("cli: corollary JSON lists the eight exception pairs") {
  const Json document = run_json({"corollary"});
  REQUIRE(document["rows"].size() == 8);
  std::set<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (const auto& row : document["rows"]) {
    pairs.emplace(row["n"].get<std::uint64_t>(),
                  row["q"].get<std::uint64_t>());
  }
  const std::set<std::pair<std::uint64_t, std::uint64_t>> expected{
      {4, 3}, {4, 5}, {6, 3}, {6, 7}, {8, 3}, {8, 5}, {8, 9}, {8, 25}};
  CHECK(pairs == expected);

  // The (4, 3) pair carries the external-resolution note; the others do not.
  for (const auto& row : document["rows"]) {
    const bool is_4_3 = row["n"] == 4 && row["q"] == 3;
    CHECK(row["annotation"].get<std::string>().empty() == !is_4_3);
  }
  // The (8, 25) pair is the only one with a nonempty admissible range, and
  // every admissible index has a positive count.
  for (const auto& row : document["rows"]) {
    const bool is_8_25 = row["n"] == 8 && row["q"] == 25;
    CHECK(row["reason"] ==
          (is_8_25 ? "all-counts-positive" : "empty-admissible-range"));
    CHECK((row["counts"] == (is_8_25 ? "8:1 16:1" : "")));
  }
  // The candidate lists that make the sweep finite are echoed in the meta.
  CHECK(document["meta"]["candidates"].size() == 7);
  CHECK(document["meta"]["candidates"].contains("3"));
  CHECK(document["meta"]["candidates"]["9"].is_array());
}

TEST_CASE("cli: golden corollary human output") {
  const auto result = run_cli({"corollary"});
  REQUIRE(result.code == decwit::cli::kExitOk);
  const std::string golden =
      read_file(std::string(DECWIT_GOLDEN_DIR) + "/corollary_human.txt");
  CHECK(result.out == golden);
  // Deterministic byte-for-byte across repeated invocations.
  CHECK(run_cli({"corollary"}).out == result.out);
}

TEST_CASE("cli: weil search reports found and not-found as exit 0") {
  const Json found = run_json({"weil", "search", "--kind", "su", "--n", "4",
                               "--q", "5", "--aut"});
  const Json& found_row = found["rows"][0];
  CHECK(found_row["status"] == "witness-found");
  // Published-schema invariant for a witness payload.
  for (const char* key : {"kind", "n", "q", "j", "solution_count"}) {
    CHECK(found_row.contains(key));
  }
  CHECK(found_row["kind"] == "su");
  CHECK(found_row["j"] == 4);
  CHECK(found_row["solution_count"] == 0);
  CHECK(found_row["gamma_invariant"] == true);
  CHECK(found["meta"]["automorphism"]["invariance_stride"] == 1);

  const auto missing = run_cli({"weil", "search", "--kind", "sl", "--n", "4",
                                "--q", "5"});
  CHECK(missing.code == decwit::cli::kExitOk);
  CHECK(missing.out.find("no-witness") != std::string::npos);
  const Json missing_json = run_json({"weil", "search", "--kind", "sl",
                                      "--n", "4", "--q", "5"});
  CHECK(missing_json["rows"][0]["status"] == "no-witness");
  CHECK(missing_json["rows"][0]["j"].is_null());
}

TEST_CASE("cli: lie orders and rank defaulting for fixed-rank series") {
  const Json order = run_json({"lie", "order", "--series", "2E6", "--q", "2"});
  const Json& row = order["rows"][0];
  CHECK(row["group"] == "2E6(2)");
  CHECK(row["rank"] == 6);
  CHECK(row["order"] == "2^36·3^10·5^2·7^2·11·13·17·19");
  CHECK(row["centre"] == 3);
  CHECK(row["simple_order"] == "2^36·3^9·5^2·7^2·11·13·17·19");

  const Json triality = run_json({"lie", "order", "--series", "3D4", "--q",
                                  "2", "--expand"});
  CHECK(triality["rows"][0]["order"] == "211341312");

  const Json borel = run_json({"lie", "borel", "--series", "A", "--rank", "2",
                               "--q", "7", "--expand"});
  CHECK(borel["rows"][0]["borel_order"] == "12348");

  CHECK(run_cli({"lie", "order", "--series", "A", "--q", "7"}).code ==
        decwit::cli::kExitUsage);  // variable-rank series need --rank
  CHECK(run_cli({"lie", "order", "--series", "E6", "--rank", "5", "--q", "2"})
            .code == decwit::cli::kExitUsage);  // wrong forced rank
}

TEST_CASE("cli: classify flattens the certificate payload") {
  const Json cuspidal = run_json({"classify", "--family", "lie", "--series",
                                  "2A", "--rank", "2", "--q", "4", "--p",
                                  "5"});
  const Json& cusp_row = cuspidal["rows"][0];
  CHECK(cusp_row["group"] == "2A2(4)");
  CHECK(cusp_row["status"] == "covered");
  CHECK(cusp_row["case"] == "pgu3-cuspidal");
  CHECK(cusp_row["witness_degree"] == "2^2·3");

  const Json weil_lin = run_json({"classify", "--family", "lie", "--series",
                                  "A", "--rank", "2", "--q", "5", "--p",
                                  "5"});
  CHECK(weil_lin["rows"][0]["case"] == "weil-linear");
  CHECK(weil_lin["rows"][0]["solution_count"] == 0);

  const Json alt = run_json({"classify", "--family", "alt", "--n", "7",
                             "--p", "5"});
  CHECK(alt["rows"][0]["case"] == "alternating-witness");
  CHECK(alt["rows"][0]["lambda"] == "(2,1,1,1,1,1)");

  const Json sporadic = run_json({"classify", "--family", "sporadic",
                                  "--name", "M11", "--p", "11"});
  CHECK(sporadic["rows"][0]["case"] == "sporadic-table");
  CHECK(sporadic["rows"][0]["order"] == "2^4·3^2·5·11");

  const Json gate = run_json({"classify", "--family", "sporadic", "--name",
                              "M11", "--p", "13"});
  CHECK(gate["rows"][0]["status"] == "out-of-scope");
  CHECK(gate["rows"][0]["case"] == "");
}

TEST_CASE("cli: survey tables and the header-only empty csv") {
  const Json lie = run_json({"survey", "--family", "lie", "--series", "2B2",
                             "--q", "8", "--p-min", "5", "--p-max", "13"});
  REQUIRE(lie["rows"].size() == 3);
  CHECK(lie["rows"][0]["case"] == "big-primes");
  CHECK(lie["rows"][1]["case"] == "suzuki-ree-steinberg");
  CHECK(lie["rows"][2]["case"] == "big-primes");
  CHECK(lie["meta"]["row_count"] == 3);

  const Json defining = run_json({"survey", "--family", "lie", "--series",
                                  "A", "--rank-min", "3", "--rank-max", "3",
                                  "--q", "5", "--defining"});
  REQUIRE(defining["rows"].size() == 1);
  CHECK(defining["rows"][0]["group"] == "A3(5)");
  CHECK(defining["rows"][0]["status"] == "unresolved");
  CHECK(defining["rows"][0]["certificate"] == "");

  // M11 has no order divisor above 11, so this sweep is empty: CSV keeps
  // the header row only.
  const auto empty = run_cli({"survey", "--family", "sporadic", "--name",
                              "M11", "--p-min", "13", "--p-max", "13",
                              "--format", "csv"});
  CHECK(empty.code == decwit::cli::kExitOk);
  CHECK(empty.out == "group,p,status,case,certificate,notes\n");
  const auto empty_human = run_cli({"survey", "--family", "sporadic",
                                    "--name", "M11", "--p-min", "13",
                                    "--p-max", "13"});
  CHECK(empty_human.out.find("(no rows)") != std::string::npos);
}

TEST_CASE("cli: every JSON output validates against the shipped schema") {
  check_json_output({"alt-witness", "--n", "12", "--p", "7"});
  check_json_output({"weil", "count", "--kind", "su", "--n", "5", "--q", "9",
                     "--j", "0"});
  check_json_output({"weil", "search", "--kind", "sl", "--n", "3", "--q",
                     "25", "--aut"});
  check_json_output({"weil", "search", "--kind", "sl", "--n", "4", "--q",
                     "5"});
  check_json_output({"corollary", "--n-min", "3", "--n-max", "5"});
  check_json_output({"lie", "order", "--series", "2B2", "--q", "8"});
  check_json_output({"lie", "borel", "--series", "D", "--rank", "4", "--q",
                     "3"});
  check_json_output({"classify", "--family", "alt", "--n", "9", "--p", "7"});
  check_json_output({"classify", "--family", "sporadic", "--name", "Tits",
                     "--p", "13"});
  check_json_output({"classify", "--family", "lie", "--series", "C",
                     "--rank", "3", "--q", "9", "--p", "3"});
  check_json_output({"classify", "--family", "lie", "--series", "2A",
                     "--rank", "3", "--q", "5", "--p", "5"});
  check_json_output({"survey", "--family", "alt", "--n-min", "5", "--n-max",
                     "8", "--p-min", "5", "--p-max", "7"});
  check_json_output({"survey", "--family", "sporadic", "--name", "J1",
                     "--p-min", "5", "--p-max", "19"});
  check_json_output({"survey", "--family", "lie", "--series", "A",
                     "--rank-min", "1", "--rank-max", "3", "--q", "5", "--q",
                     "9", "--defining"});

  // And a malformed document is caught by the same checker.
  Json broken = run_json({"corollary"});
  broken["layout"] = "diagonal";
  CHECK(!schema_valid(shipped_schema(), broken));
  broken["layout"] = "table";
  broken["rows"][0]["n"] = Json::array({1});
  CHECK(!schema_valid(shipped_schema(), broken));
}

TEST_CASE("cli: --out writes the rendered bytes to a file") {
  const std::string path = "test_cli_out.tmp";
  const auto direct = run_cli({"corollary"});
  const auto redirected = run_cli({"corollary", "--out", path});
  CHECK(redirected.code == decwit::cli::kExitOk);
  CHECK(redirected.out.empty());
  CHECK(read_file(path) == direct.out);
  std::remove(path.c_str());

  const auto bad = run_cli({"corollary", "--out",
                            "no-such-directory/report.txt"});
  CHECK(bad.code == decwit::cli::kExitUsage);
  CHECK(bad.err.find("cannot open") != std::string::npos);
}
