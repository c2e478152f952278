#pragma once

// Weil-character witness machinery for special linear and special unitary
// groups in their defining characteristic.  The decomposition multiplicity
// of the trivial modular character in the Weil character with index j is the
// number of 0/1 vectors x over the field-degree positions s with
//
//   offset + sum_s x_s * c_s  ==  j   (mod m),
//
// where m = q -+ 1, c_s = n(p-1)p^s mod m, offset = 0 (linear) or -n mod m
// (unitary).  A witness is an index j that is trivial on the centre
// (z = gcd(n, m) divides j) and has solution count zero.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "decwit/arith.hpp"

namespace decwit::weil {

using u64 = std::uint64_t;

enum class Kind { SpecialLinear, SpecialUnitary };

const char* to_string(Kind k);

struct WeilContext {
  Kind kind = Kind::SpecialLinear;
  u64 n = 0;                    // matrix rank, >= 3
  arith::PrimePower q;          // odd prime power
  u64 modulus = 0;              // m = q - 1 (linear) or q + 1 (unitary)
  u64 centre_order = 0;         // z = gcd(n, m)
  std::vector<u64> coeffs;      // c_s = n(p-1)p^s mod m, s = 0..f-1
  u64 offset = 0;               // constant term of the congruence, mod m
  arith::FactoredNat weil_degree;  // (q^n - 1)/(q - 1) or (q^n - (-1)^n)/(q + 1)
};

// Build a context.  n >= 3; q an odd prime power.  offset_shift is an
// optional constant added to the offset (mod m); the canonical contexts use
// shift 0, and shifting by multiples of z must not change witness existence
// (sensitivity knob for the published +-(q+1)/2 labelling discrepancy).
WeilContext make_context(Kind kind, u64 n, u64 q, u64 offset_shift = 0);

enum class CountEngine { Brute, DP };

// Number of solutions x in {0,1}^f of the context congruence for index j.
// Brute walks all 2^f vectors (refused for f > 25); DP folds one position
// at a time over the residue classes mod m.  Counts are exact u64; DP is
// refused for f > 62 (counts could reach 2^f).
u64 count_solutions(const WeilContext& ctx, u64 j, CountEngine engine);

// Data attached to the field automorphism of p-power order: write
// f = p^a * f' with p not dividing f', and let q' = p^(f').  An index j is
// invariant under that automorphism iff invariance_stride divides j.
struct FieldAutomorphismData {
  u64 a = 0;
  u64 f_prime = 0;
  u64 q_prime = 0;
  u64 invariance_stride = 0;  // (q -+ 1) / (q' -+ 1)
};

FieldAutomorphismData field_automorphism_data(const WeilContext& ctx);

struct WeilWitness {
  Kind kind = Kind::SpecialLinear;
  u64 n = 0;
  arith::PrimePower q;
  u64 modulus = 0;
  u64 centre_order = 0;
  u64 j = 0;               // witness index, z | j, 1 <= j <= m-1
  u64 solution_count = 0;  // always 0 for a witness
  bool gamma_invariant = false;

  bool operator==(const WeilWitness&) const = default;
};

// Smallest centre-trivial index with zero solution count: scans j = z*j'
// for j' = 1..(m-z)/z, additionally requiring invariance_stride | j when
// aut is given.  Returns nullopt when no admissible index works (including
// the empty-range case z = m).
std::optional<WeilWitness> search_witness(
    const WeilContext& ctx,
    const std::optional<FieldAutomorphismData>& aut = std::nullopt);

// Sufficient conditions for witness existence, cheap arithmetic only.
//  criterion_a (linear):  gcd(p-1, m/z) > 1, or 2^f < m/z - 1.
//  criterion_a (unitary): 2^f < m/z - 1.
//  criterion_b: a = 0, or 2^f < (q' -+ 1)/gcd(q' -+ 1, n) - 1.
// Soundness (criterion true implies search succeeds) is covered by tests.
bool criterion_a(const WeilContext& ctx);
bool criterion_b(const WeilContext& ctx);

enum class ExceptionReason { EmptyAdmissibleRange, AllCountsPositive };

const char* to_string(ExceptionReason r);

struct CorollaryException {
  u64 n = 0;
  arith::PrimePower q;
  ExceptionReason reason = ExceptionReason::EmptyAdmissibleRange;
  // (j, solution count) for every admissible index, in increasing j.
  std::vector<std::pair<u64, u64>> admissible_counts;
  std::optional<std::string> annotation;
};

// The finite candidate list for a given n: every odd prime power q with
// q <= n * (2^f + 1) + 1 (writing q = p^f), which is implied by the
// pigeonhole bound (m - z)/z - 1 <= 2^f necessary for witness failure.
// Sorted ascending; makes the completeness of the sweep auditable.
std::vector<u64> corollary_candidates(u64 n);

// Sweep n = n_min..n_max over the candidate lists and report every (n, q)
// whose linear-kind search finds no witness.  Sorted by (n, q).  The
// certified range is 3 <= n_min <= n_max <= 9; larger n is permitted but
// exploratory.
std::vector<CorollaryException> enumerate_corollary(u64 n_min, u64 n_max);

// External-resolution note for an exception pair, when one is on record.
std::optional<std::string> annotate_exception(u64 n, u64 q);

}  // namespace decwit::weil
