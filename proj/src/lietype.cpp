#include "decwit/lietype.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "decwit/errors.hpp"

namespace decwit::lietype {

namespace {

struct SeriesInfo {
  Series series;
  const char* token;
  // 0 = variable rank (record lookup decides); otherwise the only rank.
  unsigned fixed_rank;
};

constexpr SeriesInfo kSeriesInfo[] = {
    {Series::A, "A", 0},           {Series::B, "B", 0},
    {Series::C, "C", 0},           {Series::D, "D", 0},
    {Series::E6, "E6", 6},         {Series::E7, "E7", 7},
    {Series::E8, "E8", 8},         {Series::F4, "F4", 4},
    {Series::G2, "G2", 2},         {Series::TwistedA, "2A", 0},
    {Series::TwistedD, "2D", 0},   {Series::TrialityD4, "3D4", 4},
    {Series::TwistedE6, "2E6", 6}, {Series::Suzuki, "2B2", 2},
    {Series::Ree, "2G2", 2},       {Series::LargeRee, "2F4", 4},
};

const SeriesInfo& info_for(Series series) {
  for (const auto& info : kSeriesInfo) {
    if (info.series == series) return info;
  }
  throw internal_error("unknown series enumerator");
}

std::string data_file_path() {
  return std::string(DECWIT_DATA_DIR) + "/lie_orders.txt";
}

[[noreturn]] void malformed(const std::string& what, const std::string& token) {
  throw internal_error("lie_orders.txt: " + what + " in '" + token + "'");
}

unsigned parse_unsigned(const std::string& text, const std::string& context) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(),
                   [](unsigned char c) { return c >= '0' && c <= '9'; })) {
    malformed("expected a number", context);
  }
  unsigned long value = std::stoul(text);
  if (value == 0 || value > 1000000) malformed("number out of range", context);
  return static_cast<unsigned>(value);
}

// Factor token: optional '/', then qD-1 or qD+1, then optional ^M.
OrderFactor parse_factor(const std::string& token) {
  OrderFactor factor;
  std::size_t pos = 0;
  if (pos < token.size() && token[pos] == '/') {
    factor.divides = true;
    ++pos;
  }
  if (pos >= token.size() || token[pos] != 'q') malformed("factor", token);
  ++pos;
  std::size_t sign_pos = token.find_first_of("+-", pos);
  if (sign_pos == std::string::npos || sign_pos == pos) {
    malformed("factor", token);
  }
  factor.degree = parse_unsigned(token.substr(pos, sign_pos - pos), token);
  factor.eps = token[sign_pos] == '-' ? +1 : -1;
  pos = sign_pos + 1;
  std::size_t caret = token.find('^', pos);
  std::string unit = token.substr(pos, caret == std::string::npos
                                           ? std::string::npos
                                           : caret - pos);
  if (unit != "1") malformed("factor must end in 1", token);
  if (caret != std::string::npos) {
    factor.multiplicity = parse_unsigned(token.substr(caret + 1), token);
  }
  return factor;
}

std::vector<OrderFactor> parse_factor_list(const std::string& text) {
  std::vector<OrderFactor> factors;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::size_t end = comma == std::string::npos ? text.size() : comma;
    factors.push_back(parse_factor(text.substr(start, end - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (factors.empty()) malformed("empty factor list", text);
  return factors;
}

CentreFormula parse_centre(const std::string& token) {
  CentreFormula centre;
  if (token.rfind("gcd(", 0) != 0) {
    centre.constant = parse_unsigned(token, token);
    return centre;
  }
  if (token.back() != ')') malformed("centre", token);
  std::string body = token.substr(4, token.size() - 5);
  std::size_t comma = body.find(',');
  if (comma == std::string::npos) malformed("centre", token);
  centre.constant = parse_unsigned(body.substr(0, comma), token);
  OrderFactor factor = parse_factor(body.substr(comma + 1));
  if (factor.divides || factor.multiplicity != 1) malformed("centre", token);
  centre.degree = factor.degree;
  centre.eps = factor.eps;
  return centre;
}

std::vector<OrderRecord> load_table() {
  const std::string path = data_file_path();
  std::ifstream in(path);
  if (!in) throw internal_error("cannot open order table: " + path);
  std::vector<OrderRecord> table;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string series_token, order_text, torus_text, centre_text;
    unsigned long rank = 0, roots = 0;
    if (!(fields >> series_token >> rank >> roots >> order_text >>
          torus_text >> centre_text)) {
      malformed("short record", line);
    }
    std::string trailing;
    if (fields >> trailing) malformed("trailing field", line);
    auto series = series_from_token(series_token);
    if (!series) malformed("unknown series", line);
    OrderRecord record;
    record.series = *series;
    record.rank = static_cast<unsigned>(rank);
    record.num_positive_roots = static_cast<unsigned>(roots);
    record.order_factors = parse_factor_list(order_text);
    record.torus_factors = parse_factor_list(torus_text);
    record.centre = parse_centre(centre_text);
    if (record.rank == 0 || record.num_positive_roots == 0) {
      malformed("bad rank or root count", line);
    }
    const unsigned fixed = info_for(record.series).fixed_rank;
    if (fixed != 0 && record.rank != fixed) {
      malformed("rank disagrees with series", line);
    }
    for (const auto& existing : table) {
      if (existing.series == record.series && existing.rank == record.rank) {
        malformed("duplicate record", line);
      }
    }
    table.push_back(std::move(record));
  }
  if (table.empty()) throw internal_error("order table is empty: " + path);
  return table;
}

// Multiplies (q^degree - eps)^multiplicity into the running product,
// splitting numerator and denominator factors.
void accumulate(const OrderFactor& factor, u64 q, arith::FactoredNat& num,
                arith::FactoredNat& den) {
  arith::FactoredNat value = arith::factor_pow_minus_eps(q, factor.degree,
                                                         factor.eps);
  arith::FactoredNat& target = factor.divides ? den : num;
  for (unsigned i = 0; i < factor.multiplicity; ++i) target *= value;
}

arith::FactoredNat evaluate_product(const std::vector<OrderFactor>& factors,
                                    const LieGroupSpec& spec) {
  const OrderRecord& record = order_record(spec.series, spec.rank);
  const arith::PrimePower pp = arith::require_prime_power(spec.field_param);
  arith::FactoredNat num = arith::FactoredNat::from_prime_power(
      pp.p, pp.f * record.num_positive_roots);
  arith::FactoredNat den;
  for (const auto& factor : factors) {
    accumulate(factor, spec.field_param, num, den);
  }
  return num.divide_exact(den);
}

u64 residue_mod(u64 q, unsigned degree, int eps, u64 m) {
  const u64 r = arith::powmod(q % m, degree, m);
  return eps == +1 ? (r + m - 1) % m : (r + 1) % m;
}

}  // namespace

std::string to_string(Series series) { return info_for(series).token; }

std::optional<Series> series_from_token(const std::string& token) {
  for (const auto& info : kSeriesInfo) {
    if (token == info.token) return info.series;
  }
  return std::nullopt;
}

std::optional<unsigned> fixed_rank(Series series) {
  const SeriesInfo& info = info_for(series);
  if (info.fixed_rank == 0) return std::nullopt;
  return info.fixed_rank;
}

bool is_very_twisted(Series series) {
  return series == Series::Suzuki || series == Series::Ree ||
         series == Series::LargeRee;
}

LieGroupSpec make_spec(Series series, unsigned rank, u64 field_param) {
  const SeriesInfo& info = info_for(series);
  if (info.fixed_rank != 0 && rank != info.fixed_rank) {
    throw std::invalid_argument("series " + std::string(info.token) +
                                " has fixed rank " +
                                std::to_string(info.fixed_rank));
  }
  LieGroupSpec spec{series, rank, field_param};
  order_record(series, rank);  // rejects ranks outside the shipped table
  const arith::PrimePower pp = arith::require_prime_power(field_param);
  if (is_very_twisted(series)) {
    const u64 wanted = series == Series::Ree ? 3 : 2;
    if (pp.p != wanted || pp.f % 2 == 0 || pp.f < 3) {
      throw std::invalid_argument(
          "series " + std::string(info.token) + " needs field size " +
          std::to_string(wanted) + "^(2m+1) with m >= 1; got " +
          std::to_string(field_param));
    }
  }
  return spec;
}

const std::vector<OrderRecord>& order_table() {
  static const std::vector<OrderRecord> table = load_table();
  return table;
}

const OrderRecord& order_record(Series series, unsigned rank) {
  for (const auto& record : order_table()) {
    if (record.series == series && record.rank == rank) return record;
  }
  throw std::invalid_argument("no order record for series " +
                              to_string(series) + " with rank " +
                              std::to_string(rank));
}

arith::FactoredNat group_order(const LieGroupSpec& spec) {
  return evaluate_product(order_record(spec.series, spec.rank).order_factors,
                          spec);
}

arith::FactoredNat borel_order(const LieGroupSpec& spec) {
  return evaluate_product(order_record(spec.series, spec.rank).torus_factors,
                          spec);
}

u64 centre_order(const LieGroupSpec& spec) {
  const CentreFormula& centre = order_record(spec.series, spec.rank).centre;
  if (centre.constant == 1) return 1;
  const u64 c = centre.constant;
  const u64 v = residue_mod(spec.field_param, centre.degree, centre.eps, c);
  return v == 0 ? c : arith::gcd(c, v);
}

arith::FactoredNat simple_group_order(const LieGroupSpec& spec) {
  arith::FactoredNat order = group_order(spec);
  return order.divide_exact(arith::factor_natural(centre_order(spec)));
}

u64 defining_characteristic(const LieGroupSpec& spec) {
  return arith::require_prime_power(spec.field_param).p;
}

std::string display_name(const LieGroupSpec& spec) {
  const SeriesInfo& info = info_for(spec.series);
  std::string name = info.token;
  if (info.fixed_rank == 0) name += std::to_string(spec.rank);
  return name + "(" + std::to_string(spec.field_param) + ")";
}

std::string to_string(CrossCharTag tag) {
  switch (tag) {
    case CrossCharTag::BigPrimes:
      return "big-primes";
    case CrossCharTag::SuzukiReeSteinberg:
      return "suzuki-ree-steinberg";
    case CrossCharTag::SteinbergSplit:
      return "steinberg-split";
    case CrossCharTag::PGU3Cuspidal:
      return "pgu3-cuspidal";
    case CrossCharTag::TwistedSteinberg:
      return "twisted-steinberg";
  }
  throw internal_error("unknown cross-characteristic tag");
}

CrossCharCase classify_cross_char(const LieGroupSpec& spec, u64 p) {
  if (p <= 3 || !arith::is_prime(p)) {
    throw std::invalid_argument("classifier requires a prime p > 3");
  }
  if (p == defining_characteristic(spec)) {
    throw std::invalid_argument(
        "classifier handles non-defining characteristic only");
  }
  if (!group_order(spec).divisible_by_prime(p)) {
    throw std::invalid_argument("p = " + std::to_string(p) +
                                " does not divide the order of " +
                                display_name(spec));
  }

  if (!borel_order(spec).divisible_by_prime(p)) {
    return {CrossCharTag::BigPrimes,
            "p does not divide the order of a Borel subgroup; witnessed by "
            "a semisimple character of degree prime to p (existential case; "
            "no numeric certificate at this level)",
            std::nullopt};
  }

  const u64 q = spec.field_param;
  if (is_very_twisted(spec.series)) {
    if (residue_mod(q, 1, +1, p) != 0) {
      throw internal_error("very twisted Borel divisor must divide Q - 1");
    }
    return {CrossCharTag::SuzukiReeSteinberg,
            "p divides Q - 1 in a Suzuki or Ree group; witnessed by the "
            "Steinberg character of degree Q^N",
            std::nullopt};
  }
  if (residue_mod(q, 1, +1, p) == 0) {
    return {CrossCharTag::SteinbergSplit,
            "p divides q - 1; witnessed by the Steinberg character of "
            "degree q^N",
            std::nullopt};
  }
  const bool p_divides_q_plus_1 = residue_mod(q, 1, -1, p) == 0;
  if (spec.series == Series::TwistedA && spec.rank == 2 &&
      p_divides_q_plus_1) {
    arith::FactoredNat degree =
        arith::FactoredNat::from_prime_power(
            arith::require_prime_power(q).p, arith::require_prime_power(q).f);
    degree *= arith::factor_pow_minus_eps(q, 1, +1);
    return {CrossCharTag::PGU3Cuspidal,
            "rank-2 unitary group with p dividing q + 1; witnessed by the "
            "cuspidal unipotent character of degree q(q - 1)",
            std::move(degree)};
  }
  const bool plus_type_series = spec.series == Series::TwistedA ||
                                spec.series == Series::TwistedD ||
                                spec.series == Series::TwistedE6;
  if (plus_type_series && p_divides_q_plus_1) {
    return {CrossCharTag::TwistedSteinberg,
            "twisted group with p dividing q + 1; witnessed by the "
            "Steinberg character of degree q^N",
            std::nullopt};
  }
  if (spec.series == Series::TrialityD4) {
    const u64 qp = q % p;
    if ((arith::mulmod(qp, qp, p) + qp + 1) % p == 0) {
      return {CrossCharTag::TwistedSteinberg,
              "triality group with p dividing q^2 + q + 1; witnessed by the "
              "Steinberg character of degree q^12",
              std::nullopt};
    }
  }
  throw internal_error("cross-characteristic classifier fell through for " +
                       display_name(spec) + ", p = " + std::to_string(p));
}

}  // namespace decwit::lietype
