#include "decwit/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "decwit/arith.hpp"
#include "decwit/classify.hpp"
#include "decwit/errors.hpp"
#include "decwit/lietype.hpp"
#include "decwit/partitions.hpp"
#include "decwit/report.hpp"
#include "decwit/version.hpp"
#include "decwit/weil.hpp"

namespace decwit::cli {

namespace {

using arith::u64;
using report::Json;
using report::Report;

// Exact numbers render factored by default; --expand switches to decimal
// digits behind a size cap (an unbounded schoolbook expansion of a huge
// order would be slow and unreadable).
constexpr std::size_t kExpandDigitCap = 1000;

std::string nat_string(const arith::FactoredNat& value, bool expand) {
  if (!expand) return value.factored_string();
  if (value.decimal_digits_estimate() > kExpandDigitCap) {
    throw std::invalid_argument(
        "--expand: the decimal expansion would exceed " +
        std::to_string(kExpandDigitCap) +
        " digits; drop --expand to get the factored form");
  }
  return value.decimal();
}

Report make_report(std::string command,
                   std::vector<std::pair<std::string, std::string>> parameters,
                   std::vector<std::string> columns, report::Layout layout) {
  Report result;
  result.command = std::move(command);
  result.version = kToolVersion;
  result.parameters = std::move(parameters);
  result.columns = std::move(columns);
  result.layout = layout;
  return result;
}

weil::Kind kind_from_token(const std::string& token) {
  if (token == "sl") return weil::Kind::SpecialLinear;
  if (token == "su") return weil::Kind::SpecialUnitary;
  throw std::invalid_argument("unknown kind '" + token +
                              "' (expected sl or su)");
}

lietype::Series series_or_throw(const std::string& token) {
  auto series = lietype::series_from_token(token);
  if (!series) {
    throw std::invalid_argument(
        "unknown series '" + token +
        "' (expected one of A, B, C, D, E6, E7, E8, F4, G2, 2A, 2D, 3D4, "
        "2E6, 2B2, 2G2, 2F4)");
  }
  return *series;
}

unsigned resolve_rank(lietype::Series series, bool rank_given, unsigned rank) {
  if (rank_given) return rank;
  if (auto fixed = lietype::fixed_rank(series)) return *fixed;
  throw std::invalid_argument("series " + lietype::to_string(series) +
                              " needs an explicit --rank");
}

// Certificate payloads, flattened into report columns (classify) or a
// one-line summary (survey).
void flatten_certificate(const classify::Certificate& certificate, bool expand,
                         std::vector<std::string>& columns, Json& row) {
  struct Visitor {
    bool expand;
    std::vector<std::string>& columns;
    Json& row;

    void operator()(const std::monostate&) const {}
    void operator()(const partitions::AltWitnessCertificate& cert) const {
      columns.insert(columns.end(),
                     {"lambda", "degree", "degree_not_one", "degree_prime_to_p",
                      "principal_block", "level"});
      row["lambda"] = cert.lambda.to_string();
      row["degree"] = nat_string(cert.degree, expand);
      row["degree_not_one"] = cert.degree_not_one;
      row["degree_prime_to_p"] = cert.degree_prime_to_p;
      row["principal_block"] = cert.principal_block;
      row["level"] = partitions::to_string(cert.level);
    }
    void operator()(const weil::WeilWitness& witness) const {
      columns.insert(columns.end(), {"kind", "n", "q", "modulus",
                                     "centre_order", "j", "solution_count",
                                     "gamma_invariant"});
      row["kind"] = weil::to_string(witness.kind);
      row["n"] = witness.n;
      row["q"] = witness.q.q;
      row["modulus"] = witness.modulus;
      row["centre_order"] = witness.centre_order;
      row["j"] = witness.j;
      row["solution_count"] = witness.solution_count;
      row["gamma_invariant"] = witness.gamma_invariant;
    }
    void operator()(const lietype::CrossCharCase& cross) const {
      if (cross.witness_degree) {
        columns.push_back("witness_degree");
        row["witness_degree"] = nat_string(*cross.witness_degree, expand);
      }
    }
    void operator()(const classify::SporadicNote& note) const {
      columns.push_back("order");
      row["order"] = nat_string(note.order, expand);
    }
  };
  std::visit(Visitor{expand, columns, row}, certificate);
}

std::string certificate_summary(const classify::Certificate& certificate,
                                bool expand) {
  struct Visitor {
    bool expand;

    std::string operator()(const std::monostate&) const { return {}; }
    std::string operator()(
        const partitions::AltWitnessCertificate& cert) const {
      return "lambda=" + cert.lambda.to_string() +
             " degree=" + nat_string(cert.degree, expand);
    }
    std::string operator()(const weil::WeilWitness& witness) const {
      std::string text = "j=" + std::to_string(witness.j) + " count=0";
      if (witness.gamma_invariant) text += " gamma-invariant";
      return text;
    }
    std::string operator()(const lietype::CrossCharCase& cross) const {
      if (!cross.witness_degree) return {};
      return "degree=" + nat_string(*cross.witness_degree, expand);
    }
    std::string operator()(const classify::SporadicNote& note) const {
      return "order=" + nat_string(note.order, expand);
    }
  };
  return std::visit(Visitor{expand}, certificate);
}

// ---------------------------------------------------------------------------
// Per-subcommand report builders.

Report build_alt_witness(u64 n, u64 p, bool expand) {
  const auto cert = partitions::alt_witness(n, p);
  Report result = make_report(
      "alt-witness", {{"n", std::to_string(n)}, {"p", std::to_string(p)}},
      {"n", "p", "case", "lambda", "degree", "degree_not_one",
       "degree_prime_to_p", "principal_block", "level", "note"},
      report::Layout::KeyValue);
  Json row = Json::object();
  row["n"] = cert.n;
  row["p"] = cert.p;
  row["case"] = partitions::to_string(cert.case_tag);
  row["lambda"] = cert.lambda.to_string();
  row["degree"] = nat_string(cert.degree, expand);
  row["degree_not_one"] = cert.degree_not_one;
  row["degree_prime_to_p"] = cert.degree_prime_to_p;
  row["principal_block"] = cert.principal_block;
  row["level"] = partitions::to_string(cert.level);
  row["note"] = cert.note;
  result.rows.push_back(std::move(row));
  return result;
}

Report build_weil_count(const std::string& kind_token, u64 n, u64 q, u64 j,
                        const std::string& engine_token) {
  const weil::Kind kind = kind_from_token(kind_token);
  const auto engine = engine_token == "brute" ? weil::CountEngine::Brute
                                              : weil::CountEngine::DP;
  const auto ctx = weil::make_context(kind, n, q);
  const u64 count = weil::count_solutions(ctx, j, engine);
  Report result = make_report(
      "weil count",
      {{"kind", kind_token},
       {"n", std::to_string(n)},
       {"q", std::to_string(q)},
       {"j", std::to_string(j)},
       {"engine", engine_token}},
      {"kind", "n", "q", "modulus", "centre_order", "j", "engine", "count"},
      report::Layout::KeyValue);
  result.meta["offset"] = ctx.offset;
  result.meta["coeffs"] = Json(ctx.coeffs);
  result.meta["weil_degree"] = ctx.weil_degree.factored_string();
  Json row = Json::object();
  row["kind"] = kind_token;
  row["n"] = ctx.n;
  row["q"] = ctx.q.q;
  row["modulus"] = ctx.modulus;
  row["centre_order"] = ctx.centre_order;
  row["j"] = j;
  row["engine"] = engine_token;
  row["count"] = count;
  result.rows.push_back(std::move(row));
  return result;
}

Report build_weil_search(const std::string& kind_token, u64 n, u64 q,
                         bool use_aut) {
  const weil::Kind kind = kind_from_token(kind_token);
  const auto ctx = weil::make_context(kind, n, q);
  std::optional<weil::FieldAutomorphismData> aut;
  if (use_aut) aut = weil::field_automorphism_data(ctx);
  const auto witness = weil::search_witness(ctx, aut);
  Report result = make_report(
      "weil search",
      {{"kind", kind_token},
       {"n", std::to_string(n)},
       {"q", std::to_string(q)},
       {"aut", use_aut ? "true" : "false"}},
      {"status", "kind", "n", "q", "modulus", "centre_order", "j",
       "solution_count", "gamma_invariant"},
      report::Layout::KeyValue);
  if (aut) {
    result.meta["automorphism"] = Json{{"a", aut->a},
                                       {"f_prime", aut->f_prime},
                                       {"q_prime", aut->q_prime},
                                       {"invariance_stride",
                                        aut->invariance_stride}};
  }
  Json row = Json::object();
  row["status"] = witness ? "witness-found" : "no-witness";
  row["kind"] = kind_token;
  row["n"] = ctx.n;
  row["q"] = ctx.q.q;
  row["modulus"] = ctx.modulus;
  row["centre_order"] = ctx.centre_order;
  if (witness) {
    row["j"] = witness->j;
    row["solution_count"] = witness->solution_count;
    row["gamma_invariant"] = witness->gamma_invariant;
  } else {
    row["j"] = nullptr;
    row["solution_count"] = nullptr;
    row["gamma_invariant"] = nullptr;
  }
  result.rows.push_back(std::move(row));
  return result;
}

Report build_corollary(u64 n_min, u64 n_max) {
  const auto exceptions = weil::enumerate_corollary(n_min, n_max);
  Report result = make_report(
      "corollary",
      {{"n-min", std::to_string(n_min)}, {"n-max", std::to_string(n_max)}},
      {"n", "q", "p", "f", "reason", "counts", "annotation"},
      report::Layout::Table);
  Json candidates = Json::object();
  for (u64 n = n_min; n <= n_max; ++n) {
    candidates[std::to_string(n)] = Json(weil::corollary_candidates(n));
  }
  result.meta["candidates"] = std::move(candidates);
  for (const auto& exception : exceptions) {
    Json row = Json::object();
    row["n"] = exception.n;
    row["q"] = exception.q.q;
    row["p"] = exception.q.p;
    row["f"] = exception.q.f;
    row["reason"] = weil::to_string(exception.reason);
    std::string counts;
    for (const auto& [j, count] : exception.admissible_counts) {
      if (!counts.empty()) counts += ' ';
      counts += std::to_string(j) + ":" + std::to_string(count);
    }
    row["counts"] = counts;
    row["annotation"] = exception.annotation.value_or("");
    result.rows.push_back(std::move(row));
  }
  return result;
}

Report build_lie(const lietype::LieGroupSpec& spec, bool borel, bool expand) {
  std::vector<std::string> columns =
      borel ? std::vector<std::string>{"group", "series", "rank", "q",
                                       "borel_order"}
            : std::vector<std::string>{"group", "series", "rank", "q", "order",
                                       "centre", "simple_order"};
  Report result = make_report(borel ? "lie borel" : "lie order",
                              {{"series", lietype::to_string(spec.series)},
                               {"rank", std::to_string(spec.rank)},
                               {"q", std::to_string(spec.field_param)}},
                              std::move(columns), report::Layout::KeyValue);
  Json row = Json::object();
  row["group"] = lietype::display_name(spec);
  row["series"] = lietype::to_string(spec.series);
  row["rank"] = spec.rank;
  row["q"] = spec.field_param;
  if (borel) {
    row["borel_order"] = nat_string(lietype::borel_order(spec), expand);
  } else {
    row["order"] = nat_string(lietype::group_order(spec), expand);
    row["centre"] = lietype::centre_order(spec);
    row["simple_order"] = nat_string(lietype::simple_group_order(spec), expand);
  }
  result.rows.push_back(std::move(row));
  return result;
}

Report build_classify(
    const classify::SimpleGroupId& id,
    std::vector<std::pair<std::string, std::string>> parameters, u64 p,
    bool expand) {
  const auto outcome = classify::property_star(id, p);
  std::vector<std::string> columns{"group", "p", "status", "case"};
  Json row = Json::object();
  row["group"] = id.display_name();
  row["p"] = p;
  row["status"] = classify::to_string(outcome.status);
  row["case"] =
      outcome.case_tag ? classify::to_string(*outcome.case_tag) : "";
  flatten_certificate(outcome.certificate, expand, columns, row);
  columns.push_back("notes");
  row["notes"] = outcome.notes;
  Report result = make_report("classify", std::move(parameters),
                              std::move(columns), report::Layout::KeyValue);
  result.rows.push_back(std::move(row));
  return result;
}

Report build_survey(
    const classify::SurveyRequest& request,
    std::vector<std::pair<std::string, std::string>> parameters, bool expand) {
  const auto survey_rows = classify::survey(request);
  Report result = make_report(
      "survey", std::move(parameters),
      {"group", "p", "status", "case", "certificate", "notes"},
      report::Layout::Table);
  result.meta["row_count"] = survey_rows.size();
  for (const auto& entry : survey_rows) {
    Json row = Json::object();
    row["group"] = entry.group.display_name();
    row["p"] = entry.p;
    row["status"] = classify::to_string(entry.outcome.status);
    row["case"] = entry.outcome.case_tag
                      ? classify::to_string(*entry.outcome.case_tag)
                      : "";
    row["certificate"] = certificate_summary(entry.outcome.certificate,
                                             expand);
    row["notes"] = entry.outcome.notes;
    result.rows.push_back(std::move(row));
  }
  return result;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  try {
    CLI::App app{"witness characters of p'-degree in principal blocks of "
                 "finite simple groups: certificates, searches, and surveys",
                 "decwit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    std::string format_token = "human";
    app.add_option("--format", format_token, "output format")
        ->check(CLI::IsMember({"human", "json", "csv"}))
        ->capture_default_str();
    std::string out_file;
    app.add_option("--out", out_file,
                   "write the rendered output to this file instead of stdout");
    bool expand = false;
    app.add_flag("--expand", expand,
                 "render exact numbers as decimal digits instead of factored "
                 "form (capped at 1000 digits)");

    std::optional<Report> result;

    // alt-witness ----------------------------------------------------------
    u64 alt_n = 0;
    u64 alt_p = 0;
    auto* alt = app.add_subcommand(
                       "alt-witness",
                       "witness character for an alternating group at a prime")
                    ->fallthrough();
    alt->add_option("--n", alt_n, "degree of the alternating group (n >= 5)")
        ->required();
    alt->add_option("--p", alt_p, "prime with 5 <= p <= n")->required();
    alt->callback([&] { result = build_alt_witness(alt_n, alt_p, expand); });

    // weil count / weil search ---------------------------------------------
    auto* weil_cmd =
        app.add_subcommand("weil",
                           "Weil-index solution counts and witness search")
            ->fallthrough();
    weil_cmd->require_subcommand(1);

    std::string wc_kind;
    std::string wc_engine = "dp";
    u64 wc_n = 0;
    u64 wc_q = 0;
    u64 wc_j = 0;
    auto* wc = weil_cmd
                   ->add_subcommand(
                       "count",
                       "count the 0/1 solutions of the index congruence")
                   ->fallthrough();
    wc->add_option("--kind", wc_kind,
                   "sl (special linear) or su (special unitary)")
        ->required()
        ->check(CLI::IsMember({"sl", "su"}));
    wc->add_option("--n", wc_n, "matrix rank (n >= 3)")->required();
    wc->add_option("--q", wc_q, "odd prime power")->required();
    wc->add_option("--j", wc_j, "index, 0 <= j < modulus")->required();
    wc->add_option("--engine", wc_engine, "counting engine")
        ->check(CLI::IsMember({"brute", "dp"}))
        ->capture_default_str();
    wc->callback(
        [&] { result = build_weil_count(wc_kind, wc_n, wc_q, wc_j, wc_engine); });

    std::string ws_kind;
    u64 ws_n = 0;
    u64 ws_q = 0;
    bool ws_aut = false;
    auto* ws = weil_cmd
                   ->add_subcommand("search",
                                    "smallest centre-trivial index with zero "
                                    "solution count")
                   ->fallthrough();
    ws->add_option("--kind", ws_kind,
                   "sl (special linear) or su (special unitary)")
        ->required()
        ->check(CLI::IsMember({"sl", "su"}));
    ws->add_option("--n", ws_n, "matrix rank (n >= 3)")->required();
    ws->add_option("--q", ws_q, "odd prime power")->required();
    ws->add_flag("--aut", ws_aut,
                 "restrict to indices invariant under the p-power field "
                 "automorphism");
    ws->callback(
        [&] { result = build_weil_search(ws_kind, ws_n, ws_q, ws_aut); });

    // corollary --------------------------------------------------------
    u64 cor_min = 3;
    u64 cor_max = 9;
    auto* cor =
        app.add_subcommand("corollary",
                           "sweep the finite candidate lists for linear-kind "
                           "pairs (n, q) with no Weil witness")
            ->fallthrough();
    cor->add_option("--n-min", cor_min, "smallest rank to sweep (>= 3)")
        ->capture_default_str();
    cor->add_option("--n-max", cor_max, "largest rank to sweep")
        ->capture_default_str();
    cor->callback([&] { result = build_corollary(cor_min, cor_max); });

    // lie order / lie borel --------------------------------------------
    auto* lie = app.add_subcommand("lie", "orders of finite groups of Lie type")
                    ->fallthrough();
    lie->require_subcommand(1);
    std::string lie_series_token;
    unsigned lie_rank = 0;
    u64 lie_q = 0;
    auto* lo = lie->add_subcommand("order",
                                   "simply connected, centre, and simple "
                                   "group orders")
                   ->fallthrough();
    lo->add_option("--series", lie_series_token,
                   "series token (A, B, C, D, E6, E7, E8, F4, G2, 2A, 2D, "
                   "3D4, 2E6, 2B2, 2G2, 2F4)")
        ->required();
    auto* lo_rank = lo->add_option(
        "--rank", lie_rank, "rank (defaulted for the fixed-rank series)");
    lo->add_option("--q", lie_q, "field parameter")->required();
    lo->callback([&] {
      const auto series = series_or_throw(lie_series_token);
      const auto spec = lietype::make_spec(
          series, resolve_rank(series, lo_rank->count() > 0, lie_rank), lie_q);
      result = build_lie(spec, /*borel=*/false, expand);
    });
    auto* lb = lie->add_subcommand("borel", "Borel subgroup order")
                   ->fallthrough();
    lb->add_option("--series", lie_series_token,
                   "series token (A, B, C, D, E6, E7, E8, F4, G2, 2A, 2D, "
                   "3D4, 2E6, 2B2, 2G2, 2F4)")
        ->required();
    auto* lb_rank = lb->add_option(
        "--rank", lie_rank, "rank (defaulted for the fixed-rank series)");
    lb->add_option("--q", lie_q, "field parameter")->required();
    lb->callback([&] {
      const auto series = series_or_throw(lie_series_token);
      const auto spec = lietype::make_spec(
          series, resolve_rank(series, lb_rank->count() > 0, lie_rank), lie_q);
      result = build_lie(spec, /*borel=*/true, expand);
    });

    // classify -----------------------------------------------------------
    std::string cls_family;
    unsigned cls_n = 0;
    std::string cls_name;
    std::string cls_series_token;
    unsigned cls_rank = 0;
    u64 cls_q = 0;
    u64 cls_p = 0;
    auto* cls = app.add_subcommand("classify",
                                   "decide which witness construction covers "
                                   "a (group, prime) pair")
                    ->fallthrough();
    cls->add_option("--family", cls_family, "alt, sporadic, or lie")
        ->required()
        ->check(CLI::IsMember({"alt", "sporadic", "lie"}));
    auto* cls_n_opt =
        cls->add_option("--n", cls_n, "alternating degree (family alt)");
    cls->add_option("--name", cls_name, "group name (family sporadic)");
    auto* cls_series_opt = cls->add_option("--series", cls_series_token,
                                           "series token (family lie)");
    auto* cls_rank_opt = cls->add_option(
        "--rank", cls_rank,
        "rank (family lie; defaulted for the fixed-rank series)");
    auto* cls_q_opt =
        cls->add_option("--q", cls_q, "field parameter (family lie)");
    cls->add_option("--p", cls_p, "prime to classify at")->required();
    cls->callback([&] {
      std::optional<classify::SimpleGroupId> id;
      std::vector<std::pair<std::string, std::string>> parameters{
          {"family", cls_family}};
      if (cls_family == "alt") {
        if (cls_n_opt->count() == 0) {
          throw std::invalid_argument("classify --family alt requires --n");
        }
        id = classify::alternating(cls_n);
        parameters.emplace_back("n", std::to_string(cls_n));
      } else if (cls_family == "sporadic") {
        if (cls_name.empty()) {
          throw std::invalid_argument(
              "classify --family sporadic requires --name");
        }
        id = classify::sporadic(cls_name);
        parameters.emplace_back("name", cls_name);
      } else {
        if (cls_series_opt->count() == 0 || cls_q_opt->count() == 0) {
          throw std::invalid_argument(
              "classify --family lie requires --series and --q");
        }
        const auto series = series_or_throw(cls_series_token);
        const auto spec = lietype::make_spec(
            series, resolve_rank(series, cls_rank_opt->count() > 0, cls_rank),
            cls_q);
        id = classify::lie_group(spec);
        parameters.emplace_back("series", lietype::to_string(series));
        parameters.emplace_back("rank", std::to_string(spec.rank));
        parameters.emplace_back("q", std::to_string(spec.field_param));
      }
      parameters.emplace_back("p", std::to_string(cls_p));
      result = build_classify(*id, std::move(parameters), cls_p, expand);
    });

    // survey --------------------------------------------------------------
    std::string sv_family;
    unsigned sv_nmin = 5;
    unsigned sv_nmax = 5;
    std::string sv_name;
    std::string sv_series_token;
    unsigned sv_rmin = 1;
    unsigned sv_rmax = 1;
    std::vector<u64> sv_fields;
    bool sv_defining = false;
    u64 sv_pmin = 5;
    u64 sv_pmax = 5;
    auto* sv = app.add_subcommand("survey", "batch classification table")
                   ->fallthrough();
    sv->add_option("--family", sv_family, "alt, sporadic, or lie")
        ->required()
        ->check(CLI::IsMember({"alt", "sporadic", "lie"}));
    sv->add_option("--n-min", sv_nmin, "alternating degree lower bound")
        ->capture_default_str();
    sv->add_option("--n-max", sv_nmax, "alternating degree upper bound")
        ->capture_default_str();
    sv->add_option("--name", sv_name,
                   "restrict the sporadic sweep to one group");
    auto* sv_series_opt =
        sv->add_option("--series", sv_series_token, "series token (family lie)");
    auto* sv_rmin_opt = sv->add_option("--rank-min", sv_rmin,
                                       "rank lower bound (family lie)");
    auto* sv_rmax_opt = sv->add_option("--rank-max", sv_rmax,
                                       "rank upper bound (family lie)");
    sv->add_option("--q", sv_fields, "field parameter (repeatable)");
    sv->add_flag("--defining", sv_defining,
                 "classify each group at its defining characteristic only");
    sv->add_option("--p-min", sv_pmin, "smallest prime to classify at")
        ->capture_default_str();
    sv->add_option("--p-max", sv_pmax, "largest prime to classify at")
        ->capture_default_str();
    sv->callback([&] {
      classify::SurveyRequest request;
      request.p_min = sv_pmin;
      request.p_max = sv_pmax;
      std::vector<std::pair<std::string, std::string>> parameters{
          {"family", sv_family}};
      if (sv_family == "alt") {
        request.family = classify::Family::Alternating;
        request.n_min = sv_nmin;
        request.n_max = sv_nmax;
        parameters.emplace_back("n-min", std::to_string(sv_nmin));
        parameters.emplace_back("n-max", std::to_string(sv_nmax));
      } else if (sv_family == "sporadic") {
        request.family = classify::Family::Sporadic;
        request.sporadic_name = sv_name;
        if (!sv_name.empty()) parameters.emplace_back("name", sv_name);
      } else {
        request.family = classify::Family::LieType;
        if (sv_series_opt->count() == 0) {
          throw std::invalid_argument("survey --family lie requires --series");
        }
        request.series = series_or_throw(sv_series_token);
        const auto fixed = lietype::fixed_rank(request.series);
        if (fixed && sv_rmin_opt->count() == 0 && sv_rmax_opt->count() == 0) {
          request.rank_min = *fixed;
          request.rank_max = *fixed;
        } else {
          request.rank_min = sv_rmin;
          request.rank_max = sv_rmax;
        }
        request.field_params = sv_fields;
        request.defining_only = sv_defining;
        parameters.emplace_back("series", lietype::to_string(request.series));
        parameters.emplace_back("rank-min",
                                std::to_string(request.rank_min));
        parameters.emplace_back("rank-max",
                                std::to_string(request.rank_max));
        std::string fields_text;
        for (u64 q : sv_fields) {
          if (!fields_text.empty()) fields_text += ' ';
          fields_text += std::to_string(q);
        }
        parameters.emplace_back("q", fields_text);
        if (sv_defining) parameters.emplace_back("defining", "true");
      }
      if (!(request.family == classify::Family::LieType &&
            request.defining_only)) {
        parameters.emplace_back("p-min", std::to_string(sv_pmin));
        parameters.emplace_back("p-max", std::to_string(sv_pmax));
      }
      result = build_survey(request, std::move(parameters), expand);
    });

    // Parse (CLI11's vector entry point expects reversed arguments).
    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
      const CLI::App* scope = &app;
      while (!scope->get_subcommands().empty()) {
        scope = scope->get_subcommands().back();
      }
      out << scope->help();
      return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (const CLI::CallForVersion& e) {
      out << e.what() << '\n';
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << '\n';
      err << "run 'decwit --help' for usage\n";
      return kExitUsage;
    }

    if (!result) throw internal_error("no subcommand produced a report");
    const auto format = report::format_from_token(format_token);
    if (!format) throw internal_error("format token escaped validation");
    const std::string text = report::render(*result, *format);
    if (out_file.empty()) {
      out << text;
    } else {
      std::ofstream file(out_file, std::ios::binary);
      if (!file) {
        throw std::invalid_argument("cannot open output file '" + out_file +
                                    "'");
      }
      file << text;
      file.flush();
      if (!file) {
        throw std::invalid_argument("failed while writing output file '" +
                                    out_file + "'");
      }
    }
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what()
        << " (value outside the supported 64-bit range)\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  if (argc > 1) args.reserve(static_cast<std::size_t>(argc - 1));
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace decwit::cli
