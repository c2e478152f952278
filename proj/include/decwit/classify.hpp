#pragma once

// Top-level dispatcher: for a simple group S and a prime p > 3 dividing
// |S|, decide which witness construction certifies a principal-block
// character of p'-degree with trivial-character decomposition number zero,
// and report the outcome with a re-checkable certificate where one exists.
//
// Outcomes are deliberately three-valued: Covered (a known construction
// applies, certificate attached where computable), Unresolved (no
// construction applies at this toolkit's level; explicitly NOT a claim that
// no witness exists), and OutOfScope (the p <= 3 or p not dividing |S|
// gate).

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "decwit/arith.hpp"
#include "decwit/lietype.hpp"
#include "decwit/partitions.hpp"
#include "decwit/weil.hpp"

namespace decwit::classify {

using arith::u64;

// ---------------------------------------------------------------------------
// Sporadic groups (the 26 sporadic groups plus the Tits group), with their
// orders in factored form.  Coverage for these is table-level: the witness
// existence rests on published block-theoretic computations, so the
// certificate records the table row only.
struct SporadicGroup {
  std::string name;  // Atlas-style name, e.g. "M11", "Fi24'", "2F4(2)'"
  arith::FactoredNat order;
};

const std::vector<SporadicGroup>& sporadic_table();  // 27 entries

// Lookup by name; the alias "Tits" (or "T") resolves to "2F4(2)'".
// Returns nullptr when the name is unknown.
const SporadicGroup* find_sporadic(const std::string& name);

// ---------------------------------------------------------------------------
// Identity of a finite simple group (the inputs this toolkit understands).
struct AlternatingId {
  unsigned n = 5;  // degree, n >= 5

  bool operator==(const AlternatingId&) const = default;
};

struct SporadicId {
  std::string name;  // canonical table name

  bool operator==(const SporadicId&) const = default;
};

using GroupVariant =
    std::variant<AlternatingId, SporadicId, lietype::LieGroupSpec>;

struct SimpleGroupId {
  GroupVariant group;

  std::string display_name() const;  // "Alt(7)", "M11", "2A3(4)", ...
  bool operator==(const SimpleGroupId&) const = default;
};

// Validating constructors.
SimpleGroupId alternating(unsigned n);            // n >= 5
SimpleGroupId sporadic(const std::string& name);  // known table name
SimpleGroupId lie_group(const lietype::LieGroupSpec& spec);

// ---------------------------------------------------------------------------
// Classification outcome.
enum class Status { Covered, Unresolved, OutOfScope };

// Which construction covers the pair (S, p).  The five middle tags mirror
// the cross-characteristic classifier; the last three are the
// defining-characteristic constructions.
enum class CaseTag {
  SporadicTable,
  AlternatingWitness,
  BigPrimes,
  SuzukiReeSteinberg,
  SteinbergSplit,
  PGU3Cuspidal,
  TwistedSteinberg,
  SymplecticDefining,
  WeilLinear,
  WeilUnitary,
};

std::string to_string(Status status);
std::string to_string(CaseTag tag);
CaseTag case_tag_for(lietype::CrossCharTag tag);

struct SporadicNote {
  std::string name;
  arith::FactoredNat order;

  bool operator==(const SporadicNote&) const = default;
};

using Certificate =
    std::variant<std::monostate, partitions::AltWitnessCertificate,
                 weil::WeilWitness, lietype::CrossCharCase, SporadicNote>;

struct ClassificationOutcome {
  Status status = Status::OutOfScope;
  std::optional<CaseTag> case_tag;  // always present when Covered
  Certificate certificate;          // monostate when none applies
  std::string notes;

  bool operator==(const ClassificationOutcome&) const = default;
};

// The p > 3 gate is a mathematical boundary, not a tooling shortcut: for
// p = 3 the witness pattern genuinely fails for some extensions (a rank-1
// symplectic group over the 27-element field extended by its order-3 field
// automorphism admits no suitable principal-block character).  Recorded
// here as a regression note; nothing below p = 5 is ever classified.
inline constexpr const char* kSmallPrimeBoundaryNote =
    "p <= 3 is out of scope: for p = 3 there are extensions (e.g. a rank-1 "
    "symplectic group over F_27 extended by its order-3 field automorphism) "
    "with no principal-block witness character, so the gate is sharp";

// ---------------------------------------------------------------------------
// Operations.

// Main entry: gates on p (prime, > 3, dividing |S| -- |S| computed as the
// central quotient order for Lie-type inputs) and dispatches to the family
// construction.  Composite p is an input error; everything else yields an
// outcome rather than an exception.
ClassificationOutcome property_star(const SimpleGroupId& s, u64 p);

// Sporadic-only convenience used by the CLI; unknown names are input
// errors.
ClassificationOutcome sporadic_status(const std::string& name, u64 p);

// Re-derives every checkable claim of a previously computed outcome
// (certificates are re-checked, not trusted): recomputes the dispatch and
// verifies certificate payloads (degrees, block membership, solution
// counts, case tags) against fresh computations.  Returns false on any
// disagreement or if verification throws.
bool revalidate(const SimpleGroupId& s, u64 p, const ClassificationOutcome& outcome);

// ---------------------------------------------------------------------------
// Batch survey.
enum class Family { Alternating, Sporadic, LieType };

std::string to_string(Family family);

struct SurveyRequest {
  Family family = Family::Alternating;

  // Alternating: degrees n_min..n_max (n >= 5).
  unsigned n_min = 5;
  unsigned n_max = 5;

  // Sporadic: restrict to one name, or empty for the whole table.
  std::string sporadic_name;

  // LieType: one series, ranks rank_min..rank_max restricted to the shipped
  // table, explicit field sizes (each validated per series).
  lietype::Series series = lietype::Series::A;
  unsigned rank_min = 1;
  unsigned rank_max = 1;
  std::vector<u64> field_params;

  // Primes: every prime in [p_min, p_max].  For LieType, defining_only
  // ignores the range and takes exactly the defining characteristic.
  u64 p_min = 5;
  u64 p_max = 5;
  bool defining_only = false;
};

struct SurveyRow {
  SimpleGroupId group;
  u64 p = 0;
  ClassificationOutcome outcome;

  bool operator==(const SurveyRow&) const = default;
};

// Deterministic batch classification.  Rows are emitted in construction
// order (degree/table/rank-field order, then p ascending) and only for
// in-scope pairs: OutOfScope rows (p not dividing the order, or a
// defining_only request whose characteristic is <= 3) are skipped, so every
// emitted row is Covered or Unresolved.
std::vector<SurveyRow> survey(const SurveyRequest& request);

}  // namespace decwit::classify

namespace decwit::lietype {

// Defining-characteristic dispatcher (declared here because it returns the
// classify outcome type): symplectic series and rank-1 linear are covered
// wholesale; linear and unitary series of rank >= 2 are decided by the
// Weil-index search (automorphism-invariant search when the field exponent
// is divisible by p); everything else is Unresolved at this level.
classify::ClassificationOutcome classify_defining_char(const LieGroupSpec& spec,
                                                       arith::u64 p);

}  // namespace decwit::lietype
