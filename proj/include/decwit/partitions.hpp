#pragma once

// Partition combinatorics for symmetric and alternating groups: hook
// lengths, exact character degrees, p-cores via the abacus, principal-block
// membership, and the alternating-group witness construction.

#include <cstdint>
#include <string>
#include <vector>

#include "decwit/arith.hpp"

namespace decwit::partitions {

using u64 = std::uint64_t;

// A partition of n: weakly decreasing positive parts.  The empty partition
// (n = 0) is allowed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<u64> parts);  // validates shape

  static Partition one_row(u64 n);  // (n), or () when n = 0

  const std::vector<u64>& parts() const { return parts_; }
  std::size_t rows() const { return parts_.size(); }
  u64 size() const;  // sum of parts
  u64 part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  std::string to_string() const;  // "(3,2,1)", "()" for empty

  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& other) const { return parts_ < other.parts_; }

 private:
  std::vector<u64> parts_;
};

Partition conjugate(const Partition& lambda);

// Multiset of hook lengths, sorted descending.  Its size equals |lambda|.
std::vector<u64> hook_lengths(const Partition& lambda);

// Exact degree of the irreducible symmetric-group character indexed by
// lambda: n! divided by the product of all hook lengths, in factored form.
arith::FactoredNat character_degree(const Partition& lambda);

// p-core by abacus bead sliding.  bead_count = 0 means "use the number of
// parts"; any larger value pads with zero parts and must give the same
// answer (tested).  p must be prime.
Partition p_core(const Partition& lambda, u64 p, std::size_t bead_count = 0);

// Whether the character indexed by lambda lies in the principal p-block of
// the symmetric group on |lambda| letters: same p-core as the trivial
// character's one-row partition.
bool in_principal_block(const Partition& lambda, u64 p);

// Number of standard Young tableaux of shape lambda, by corner-removal
// recursion.  Independent oracle for character_degree; refused above
// |lambda| = 12 (exact u64, exponential recursion kept deliberately naive).
u64 count_standard_tableaux(const Partition& lambda);

enum class AltCase {
  PDividesN,            // p | n
  FirstDigitAtLeastTwo, // first base-p digit of n is >= 2
  FirstDigitOne,        // first base-p digit of n is 1
};

enum class CertificationLevel {
  // Restriction to p-regular classes stays irreducible (hook shape, first
  // digit >= 2), so the degree and block checks certify the vanishing
  // claim outright.
  FullViaPeel,
  // Degree and block membership are verified here; the vanishing claim
  // additionally relies on a cited construction that is recorded in the
  // certificate note but not recomputed.
  DegreeAndBlockOnly,
};

struct AltWitnessCertificate {
  u64 n = 0;
  u64 p = 0;
  AltCase case_tag = AltCase::PDividesN;
  Partition lambda;
  arith::FactoredNat degree;
  bool degree_not_one = false;
  bool degree_prime_to_p = false;
  bool principal_block = false;
  CertificationLevel level = CertificationLevel::DegreeAndBlockOnly;
  std::string note;

  bool operator==(const AltWitnessCertificate&) const = default;
};

const char* to_string(AltCase c);
const char* to_string(CertificationLevel l);

// Witness character for the alternating group on n letters at the prime p.
// Requires n >= 5 and 5 <= p <= n with p prime.  All three boolean checks
// are recomputed here; a failure throws check_failure (it would mean a bug
// or a false certified assumption, never bad input).
AltWitnessCertificate alt_witness(u64 n, u64 p);

}  // namespace decwit::partitions
