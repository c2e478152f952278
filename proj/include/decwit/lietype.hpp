#pragma once

// Finite groups of Lie type: order and Borel-order arithmetic driven by a
// versioned static table of order polynomials, plus the cross-characteristic
// case classifier.  The table rows describe the simply connected groups; the
// simple quotient's order is obtained by dividing out the centre.
//
// Field-parameter convention: for classical and untwisted exceptional series
// `field_param` is the defining field size q.  For the very twisted series
// (2B2, 2G2, 2F4) it is the full field size Q = 2^{2m+1} or 3^{2m+1} with
// m >= 1, so all arithmetic stays in integers; Q < 8 (resp. 27) is rejected,
// which keeps the non-simple smallest members (and the Tits group, handled
// elsewhere as an honorary sporadic group) out of this module.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "decwit/arith.hpp"

namespace decwit::lietype {

using arith::u64;

enum class Series {
  A,
  B,
  C,
  D,
  E6,
  E7,
  E8,
  F4,
  G2,
  TwistedA,    // 2A: unitary
  TwistedD,    // 2D
  TrialityD4,  // 3D4
  TwistedE6,   // 2E6
  Suzuki,      // 2B2
  Ree,         // 2G2
  LargeRee,    // 2F4
};

// Token forms used in the data file and on the command line: "A", "B", "C",
// "D", "E6", "E7", "E8", "F4", "G2", "2A", "2D", "3D4", "2E6", "2B2",
// "2G2", "2F4".
std::string to_string(Series series);
std::optional<Series> series_from_token(const std::string& token);

// The forced rank of a fixed-rank series (E6 -> 6, 3D4 -> 4, 2B2 -> 2, ...);
// nullopt for the variable-rank classical series.
std::optional<unsigned> fixed_rank(Series series);

// True for 2B2, 2G2, 2F4 (field_param is the full field size Q).
bool is_very_twisted(Series series);

struct LieGroupSpec {
  Series series;
  unsigned rank = 0;
  u64 field_param = 0;

  bool operator==(const LieGroupSpec&) const = default;
};

// Validates the series/rank combination (classical series are shipped
// through rank 8), that field_param is a prime power, and the very twisted
// parity/characteristic constraints.  Throws std::invalid_argument.
LieGroupSpec make_spec(Series series, unsigned rank, u64 field_param);

// One multiplicand of an order polynomial: (q^degree - eps)^multiplicity,
// with eps = +1 for tokens like "q4-1" and eps = -1 for "q3+1".  A factor
// with divides == true contributes its reciprocal (only 3D4 uses this).
struct OrderFactor {
  unsigned degree = 0;
  int eps = +1;
  unsigned multiplicity = 1;
  bool divides = false;

  bool operator==(const OrderFactor&) const = default;
};

// Centre of the simply connected group as gcd(constant, q^degree - eps);
// constant == 1 encodes a trivial centre.
struct CentreFormula {
  u64 constant = 1;
  unsigned degree = 1;
  int eps = +1;
};

struct OrderRecord {
  Series series{};
  unsigned rank = 0;
  unsigned num_positive_roots = 0;  // N: |G| = q^N * prod(order_factors)
  std::vector<OrderFactor> order_factors;
  std::vector<OrderFactor> torus_factors;  // |B| = q^N * prod(torus_factors)
  CentreFormula centre;
};

// The parsed static table (loaded once from the shipped data file).  Lookup
// failures throw std::invalid_argument; a malformed data file throws
// internal_error.
const std::vector<OrderRecord>& order_table();
const OrderRecord& order_record(Series series, unsigned rank);

// Exact order of the simply connected member, e.g. SL_{r+1}(q) for series A.
arith::FactoredNat group_order(const LieGroupSpec& spec);

// Order of a Borel subgroup: q^N times the maximally split torus order.
arith::FactoredNat borel_order(const LieGroupSpec& spec);

// |Z(G_sc)| and the simple quotient's order |G_sc| / |Z(G_sc)|.
u64 centre_order(const LieGroupSpec& spec);
arith::FactoredNat simple_group_order(const LieGroupSpec& spec);

// The defining prime of the underlying field.
u64 defining_characteristic(const LieGroupSpec& spec);

// Compact display form, e.g. "A2(7)", "2A3(4)", "2B2(8)".
std::string display_name(const LieGroupSpec& spec);

// Case tags of the cross-characteristic classifier, in evaluation order.
enum class CrossCharTag {
  BigPrimes,           // p does not divide the Borel order
  SuzukiReeSteinberg,  // very twisted series (p then divides Q - 1)
  SteinbergSplit,      // p | q - 1
  PGU3Cuspidal,        // rank-2 unitary with p | q + 1
  TwistedSteinberg,    // remaining twisted torus cases
};

std::string to_string(CrossCharTag tag);

struct CrossCharCase {
  CrossCharTag tag{};
  std::string witness_note;
  // Present only for PGU3Cuspidal: the cuspidal unipotent degree q(q - 1).
  std::optional<arith::FactoredNat> witness_degree;

  bool operator==(const CrossCharCase&) const = default;
};

// Decides which witness family covers the pair (spec, p) when p is not the
// defining characteristic.  Requires p > 3 prime, p not equal to the
// defining characteristic, and p dividing the group order; exactly one case
// always matches (a fall-through would be an internal error).
CrossCharCase classify_cross_char(const LieGroupSpec& spec, u64 p);

}  // namespace decwit::lietype
