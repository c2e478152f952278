#include "decwit/classify.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <utility>

#include "decwit/errors.hpp"

namespace decwit::classify {

namespace {

arith::FactoredNat make_order(
    std::initializer_list<std::pair<arith::u64, arith::u64>> factors) {
  arith::FactoredNat order;
  for (const auto& [p, e] : factors) order.mul_prime(p, e);
  return order;
}

std::vector<SporadicGroup> build_sporadic_table() {
  // Factored orders from the standard published tables; each row was
  // cross-checked against the decimal order before being frozen here (see
  // the unit tests, which pin the decimal expansions).
  std::vector<SporadicGroup> table;
  auto add = [&table](const char* name,
                      std::initializer_list<std::pair<arith::u64, arith::u64>>
                          factors) {
    table.push_back({name, make_order(factors)});
  };
  add("M11", {{2, 4}, {3, 2}, {5, 1}, {11, 1}});
  add("M12", {{2, 6}, {3, 3}, {5, 1}, {11, 1}});
  add("M22", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}});
  add("M23", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {23, 1}});
  add("M24", {{2, 10}, {3, 3}, {5, 1}, {7, 1}, {11, 1}, {23, 1}});
  add("J1", {{2, 3}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {19, 1}});
  add("J2", {{2, 7}, {3, 3}, {5, 2}, {7, 1}});
  add("J3", {{2, 7}, {3, 5}, {5, 1}, {17, 1}, {19, 1}});
  add("J4", {{2, 21},
             {3, 3},
             {5, 1},
             {7, 1},
             {11, 3},
             {23, 1},
             {29, 1},
             {31, 1},
             {37, 1},
             {43, 1}});
  add("Co1", {{2, 21}, {3, 9}, {5, 4}, {7, 2}, {11, 1}, {13, 1}, {23, 1}});
  add("Co2", {{2, 18}, {3, 6}, {5, 3}, {7, 1}, {11, 1}, {23, 1}});
  add("Co3", {{2, 10}, {3, 7}, {5, 3}, {7, 1}, {11, 1}, {23, 1}});
  add("McL", {{2, 7}, {3, 6}, {5, 3}, {7, 1}, {11, 1}});
  add("HS", {{2, 9}, {3, 2}, {5, 3}, {7, 1}, {11, 1}});
  add("Suz", {{2, 13}, {3, 7}, {5, 2}, {7, 1}, {11, 1}, {13, 1}});
  add("He", {{2, 10}, {3, 3}, {5, 2}, {7, 3}, {17, 1}});
  add("HN", {{2, 14}, {3, 6}, {5, 6}, {7, 1}, {11, 1}, {19, 1}});
  add("Th", {{2, 15}, {3, 10}, {5, 3}, {7, 2}, {13, 1}, {19, 1}, {31, 1}});
  add("Fi22", {{2, 17}, {3, 9}, {5, 2}, {7, 1}, {11, 1}, {13, 1}});
  add("Fi23",
      {{2, 18}, {3, 13}, {5, 2}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {23, 1}});
  add("Fi24'", {{2, 21},
                {3, 16},
                {5, 2},
                {7, 3},
                {11, 1},
                {13, 1},
                {17, 1},
                {23, 1},
                {29, 1}});
  add("B", {{2, 41},
            {3, 13},
            {5, 6},
            {7, 2},
            {11, 1},
            {13, 1},
            {17, 1},
            {19, 1},
            {23, 1},
            {31, 1},
            {47, 1}});
  add("M", {{2, 46},
            {3, 20},
            {5, 9},
            {7, 6},
            {11, 2},
            {13, 3},
            {17, 1},
            {19, 1},
            {23, 1},
            {29, 1},
            {31, 1},
            {41, 1},
            {47, 1},
            {59, 1},
            {71, 1}});
  add("ON", {{2, 9}, {3, 4}, {5, 1}, {7, 3}, {11, 1}, {19, 1}, {31, 1}});
  add("Ly", {{2, 8}, {3, 7}, {5, 6}, {7, 1}, {11, 1}, {31, 1}, {37, 1},
             {67, 1}});
  add("Ru", {{2, 14}, {3, 3}, {5, 3}, {7, 1}, {13, 1}, {29, 1}});
  add("2F4(2)'", {{2, 11}, {3, 3}, {5, 2}, {13, 1}});
  return table;
}

std::vector<arith::u64> primes_in_range(arith::u64 lo, arith::u64 hi) {
  std::vector<arith::u64> primes;
  for (arith::u64 v = std::max<arith::u64>(lo, 2); v <= hi; ++v) {
    if (arith::is_prime(v)) primes.push_back(v);
  }
  return primes;
}

ClassificationOutcome out_of_scope(std::string notes) {
  return {Status::OutOfScope, std::nullopt, std::monostate{},
          std::move(notes)};
}

ClassificationOutcome classify_alternating(const AlternatingId& id, u64 p) {
  if (id.n < 5) {
    throw std::invalid_argument("alternating degree must be at least 5");
  }
  if (p > id.n) {
    return out_of_scope("out of scope: p does not divide the group order");
  }
  auto certificate = partitions::alt_witness(id.n, p);
  std::string notes = "witness partition " + certificate.lambda.to_string() +
                      " of degree " + certificate.degree.factored_string();
  return {Status::Covered, CaseTag::AlternatingWitness, std::move(certificate),
          std::move(notes)};
}

ClassificationOutcome classify_sporadic(const SporadicId& id, u64 p) {
  const SporadicGroup* group = find_sporadic(id.name);
  if (group == nullptr) {
    throw std::invalid_argument("unknown sporadic group: " + id.name);
  }
  if (!group->order.divisible_by_prime(p)) {
    return out_of_scope("out of scope: p does not divide the group order");
  }
  return {Status::Covered, CaseTag::SporadicTable,
          SporadicNote{group->name, group->order},
          "covered by the sporadic and Tits group table"};
}

ClassificationOutcome classify_lie(const lietype::LieGroupSpec& spec, u64 p) {
  if (!lietype::simple_group_order(spec).divisible_by_prime(p)) {
    return out_of_scope(
        "out of scope: p does not divide the simple group order");
  }
  if (p == lietype::defining_characteristic(spec)) {
    return lietype::classify_defining_char(spec, p);
  }
  lietype::CrossCharCase cross = lietype::classify_cross_char(spec, p);
  std::string notes = cross.witness_note;
  return {Status::Covered, case_tag_for(cross.tag), std::move(cross),
          std::move(notes)};
}

}  // namespace

const std::vector<SporadicGroup>& sporadic_table() {
  static const std::vector<SporadicGroup> table = build_sporadic_table();
  return table;
}

const SporadicGroup* find_sporadic(const std::string& name) {
  const std::string& wanted =
      (name == "Tits" || name == "T") ? std::string("2F4(2)'") : name;
  for (const auto& group : sporadic_table()) {
    if (group.name == wanted) return &group;
  }
  return nullptr;
}

std::string SimpleGroupId::display_name() const {
  struct Visitor {
    std::string operator()(const AlternatingId& id) const {
      return "Alt(" + std::to_string(id.n) + ")";
    }
    std::string operator()(const SporadicId& id) const { return id.name; }
    std::string operator()(const lietype::LieGroupSpec& spec) const {
      return lietype::display_name(spec);
    }
  };
  return std::visit(Visitor{}, group);
}

SimpleGroupId alternating(unsigned n) {
  if (n < 5) {
    throw std::invalid_argument("alternating degree must be at least 5");
  }
  return {AlternatingId{n}};
}

SimpleGroupId sporadic(const std::string& name) {
  const SporadicGroup* group = find_sporadic(name);
  if (group == nullptr) {
    throw std::invalid_argument("unknown sporadic group: " + name);
  }
  return {SporadicId{group->name}};
}

SimpleGroupId lie_group(const lietype::LieGroupSpec& spec) {
  return {lietype::make_spec(spec.series, spec.rank, spec.field_param)};
}

std::string to_string(Status status) {
  switch (status) {
    case Status::Covered:
      return "covered";
    case Status::Unresolved:
      return "unresolved";
    case Status::OutOfScope:
      return "out-of-scope";
  }
  throw internal_error("unknown status");
}

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::SporadicTable:
      return "sporadic-table";
    case CaseTag::AlternatingWitness:
      return "alternating-witness";
    case CaseTag::BigPrimes:
      return "big-primes";
    case CaseTag::SuzukiReeSteinberg:
      return "suzuki-ree-steinberg";
    case CaseTag::SteinbergSplit:
      return "steinberg-split";
    case CaseTag::PGU3Cuspidal:
      return "pgu3-cuspidal";
    case CaseTag::TwistedSteinberg:
      return "twisted-steinberg";
    case CaseTag::SymplecticDefining:
      return "symplectic-defining";
    case CaseTag::WeilLinear:
      return "weil-linear";
    case CaseTag::WeilUnitary:
      return "weil-unitary";
  }
  throw internal_error("unknown case tag");
}

CaseTag case_tag_for(lietype::CrossCharTag tag) {
  switch (tag) {
    case lietype::CrossCharTag::BigPrimes:
      return CaseTag::BigPrimes;
    case lietype::CrossCharTag::SuzukiReeSteinberg:
      return CaseTag::SuzukiReeSteinberg;
    case lietype::CrossCharTag::SteinbergSplit:
      return CaseTag::SteinbergSplit;
    case lietype::CrossCharTag::PGU3Cuspidal:
      return CaseTag::PGU3Cuspidal;
    case lietype::CrossCharTag::TwistedSteinberg:
      return CaseTag::TwistedSteinberg;
  }
  throw internal_error("unknown cross-characteristic tag");
}

std::string to_string(Family family) {
  switch (family) {
    case Family::Alternating:
      return "alternating";
    case Family::Sporadic:
      return "sporadic";
    case Family::LieType:
      return "lie-type";
  }
  throw internal_error("unknown family");
}

ClassificationOutcome property_star(const SimpleGroupId& s, u64 p) {
  if (!arith::is_prime(p)) {
    throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  }
  if (p <= 3) {
    return out_of_scope("out of scope: requires p > 3 (the gate is sharp; "
                        "see the small-prime boundary note)");
  }
  struct Visitor {
    u64 p;
    ClassificationOutcome operator()(const AlternatingId& id) const {
      return classify_alternating(id, p);
    }
    ClassificationOutcome operator()(const SporadicId& id) const {
      return classify_sporadic(id, p);
    }
    ClassificationOutcome operator()(const lietype::LieGroupSpec& spec) const {
      return classify_lie(spec, p);
    }
  };
  return std::visit(Visitor{p}, s.group);
}

ClassificationOutcome sporadic_status(const std::string& name, u64 p) {
  return property_star(sporadic(name), p);
}

namespace {

bool check_alt_certificate(const SimpleGroupId& s, u64 p,
                           const partitions::AltWitnessCertificate& cert) {
  const auto* id = std::get_if<AlternatingId>(&s.group);
  if (id == nullptr || cert.n != id->n || cert.p != p) return false;
  if (!cert.degree_not_one || !cert.degree_prime_to_p || !cert.principal_block) {
    return false;
  }
  if (cert.lambda.size() != cert.n) return false;
  const arith::FactoredNat degree = partitions::character_degree(cert.lambda);
  return degree == cert.degree && !degree.is_one() &&
         degree.residue_mod(p) != 0 &&
         partitions::in_principal_block(cert.lambda, p);
}

bool check_weil_certificate(const SimpleGroupId& s, u64 p,
                            const weil::WeilWitness& witness) {
  const auto* spec = std::get_if<lietype::LieGroupSpec>(&s.group);
  if (spec == nullptr || witness.q.q != spec->field_param ||
      witness.q.p != p) {
    return false;
  }
  const auto ctx = weil::make_context(witness.kind, witness.n, witness.q.q);
  if (witness.modulus != ctx.modulus ||
      witness.centre_order != ctx.centre_order) {
    return false;
  }
  if (witness.j == 0 || witness.j >= ctx.modulus ||
      witness.j % ctx.centre_order != 0) {
    return false;
  }
  if (witness.solution_count != 0 ||
      weil::count_solutions(ctx, witness.j, weil::CountEngine::DP) != 0) {
    return false;
  }
  const auto aut = weil::field_automorphism_data(ctx);
  return witness.gamma_invariant == (witness.j % aut.invariance_stride == 0);
}

bool check_cross_char_certificate(const SimpleGroupId& s, u64 p,
                                  const lietype::CrossCharCase& cert) {
  const auto* spec = std::get_if<lietype::LieGroupSpec>(&s.group);
  if (spec == nullptr) return false;
  const lietype::CrossCharCase fresh = lietype::classify_cross_char(*spec, p);
  if (!(fresh == cert)) return false;
  if (cert.tag == lietype::CrossCharTag::PGU3Cuspidal) {
    if (!cert.witness_degree.has_value()) return false;
    const u64 q = spec->field_param;
    auto expected = arith::factor_natural(q);
    expected *= arith::factor_pow_minus_eps(q, 1, +1);
    return *cert.witness_degree == expected;
  }
  return !cert.witness_degree.has_value();
}

bool check_sporadic_certificate(const SimpleGroupId& s, u64 p,
                                const SporadicNote& note) {
  const auto* id = std::get_if<SporadicId>(&s.group);
  if (id == nullptr || id->name != note.name) return false;
  const SporadicGroup* group = find_sporadic(note.name);
  return group != nullptr && group->order == note.order &&
         note.order.divisible_by_prime(p);
}

}  // namespace

bool revalidate(const SimpleGroupId& s, u64 p,
                const ClassificationOutcome& outcome) {
  try {
    if (!(property_star(s, p) == outcome)) return false;
    if (outcome.status == Status::Covered && !outcome.case_tag.has_value()) {
      return false;
    }
    struct Visitor {
      const SimpleGroupId& s;
      u64 p;
      const ClassificationOutcome& outcome;
      bool operator()(const std::monostate&) const {
        return outcome.status != Status::Covered ||
               outcome.case_tag == CaseTag::SymplecticDefining;
      }
      bool operator()(const partitions::AltWitnessCertificate& cert) const {
        return check_alt_certificate(s, p, cert);
      }
      bool operator()(const weil::WeilWitness& witness) const {
        return check_weil_certificate(s, p, witness);
      }
      bool operator()(const lietype::CrossCharCase& cert) const {
        return check_cross_char_certificate(s, p, cert);
      }
      bool operator()(const SporadicNote& note) const {
        return check_sporadic_certificate(s, p, note);
      }
    };
    return std::visit(Visitor{s, p, outcome}, outcome.certificate);
  } catch (...) {
    return false;
  }
}

std::vector<SurveyRow> survey(const SurveyRequest& request) {
  if (request.p_min > request.p_max) {
    throw std::invalid_argument("survey: empty prime range");
  }
  const std::vector<u64> primes = primes_in_range(request.p_min,
                                                  request.p_max);
  std::vector<SurveyRow> rows;
  auto emit = [&rows](SimpleGroupId group, u64 p) {
    ClassificationOutcome outcome = property_star(group, p);
    if (outcome.status == Status::OutOfScope) return;
    rows.push_back({std::move(group), p, std::move(outcome)});
  };

  switch (request.family) {
    case Family::Alternating: {
      if (request.n_min < 5 || request.n_min > request.n_max) {
        throw std::invalid_argument("survey: bad alternating degree range");
      }
      for (unsigned n = request.n_min; n <= request.n_max; ++n) {
        for (u64 p : primes) emit(alternating(n), p);
      }
      break;
    }
    case Family::Sporadic: {
      if (!request.sporadic_name.empty()) {
        for (u64 p : primes) emit(sporadic(request.sporadic_name), p);
        break;
      }
      for (const auto& group : sporadic_table()) {
        for (u64 p : primes) emit(sporadic(group.name), p);
      }
      break;
    }
    case Family::LieType: {
      if (request.rank_min == 0 || request.rank_min > request.rank_max) {
        throw std::invalid_argument("survey: bad rank range");
      }
      if (request.field_params.empty()) {
        throw std::invalid_argument("survey: no field sizes given");
      }
      std::vector<u64> fields = request.field_params;
      std::sort(fields.begin(), fields.end());
      fields.erase(std::unique(fields.begin(), fields.end()), fields.end());
      bool any_valid = false;
      for (unsigned rank = request.rank_min; rank <= request.rank_max;
           ++rank) {
        for (u64 q : fields) {
          lietype::LieGroupSpec spec;
          try {
            spec = lietype::make_spec(request.series, rank, q);
          } catch (const std::invalid_argument&) {
            continue;  // rank/field combinations outside the series
          }
          any_valid = true;
          if (request.defining_only) {
            emit(lie_group(spec), lietype::defining_characteristic(spec));
          } else {
            for (u64 p : primes) emit(lie_group(spec), p);
          }
        }
      }
      if (!any_valid) {
        throw std::invalid_argument(
            "survey: no valid group in the requested range");
      }
      break;
    }
  }
  return rows;
}

}  // namespace decwit::classify

namespace decwit::lietype {

classify::ClassificationOutcome classify_defining_char(const LieGroupSpec& spec,
                                                       arith::u64 p) {
  using classify::CaseTag;
  using classify::ClassificationOutcome;
  using classify::Status;
  if (!arith::is_prime(p) || p <= 3) {
    throw std::invalid_argument(
        "defining-characteristic classification requires a prime p > 3");
  }
  if (p != defining_characteristic(spec)) {
    throw std::invalid_argument(
        "p is not the defining characteristic of " + display_name(spec));
  }

  if (spec.series == Series::C ||
      (spec.series == Series::A && spec.rank == 1)) {
    return {Status::Covered, CaseTag::SymplecticDefining, std::monostate{},
            "symplectic group in defining characteristic (rank-1 linear "
            "equals rank-1 symplectic); covered wholesale, no computed "
            "certificate"};
  }

  const bool linear = spec.series == Series::A;
  const bool unitary = spec.series == Series::TwistedA;
  if ((linear || unitary) && spec.rank >= 2) {
    const arith::u64 n = spec.rank + 1;
    const auto kind = linear ? weil::Kind::SpecialLinear
                             : weil::Kind::SpecialUnitary;
    const auto ctx = weil::make_context(kind, n, spec.field_param);
    const auto aut = weil::field_automorphism_data(ctx);
    std::optional<weil::FieldAutomorphismData> filter;
    if (aut.a > 0) filter = aut;  // field automorphism of p-power order
    if (auto witness = weil::search_witness(ctx, filter)) {
      std::string notes = "Weil index " + std::to_string(witness->j) +
                          " has zero solution count";
      if (filter.has_value()) {
        notes += " and is invariant under the field automorphism";
      }
      return {Status::Covered,
              linear ? CaseTag::WeilLinear : CaseTag::WeilUnitary,
              std::move(*witness), std::move(notes)};
    }
    std::string notes =
        "no admissible Weil index with zero solution count; the pair stays "
        "on the finite exception list at this level";
    if (linear) {
      if (auto annotation = weil::annotate_exception(n, spec.field_param)) {
        notes += "; " + *annotation;
      }
    }
    return {Status::Unresolved, std::nullopt, std::monostate{},
            std::move(notes)};
  }

  return {Status::Unresolved, std::nullopt, std::monostate{},
          "no defining-characteristic construction for series " +
              to_string(spec.series) + " at this level"};
}

}  // namespace decwit::lietype
