#include "decwit/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "decwit/errors.hpp"

namespace decwit::partitions {

Partition::Partition(std::vector<u64> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0)
      throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

Partition Partition::one_row(u64 n) {
  return n == 0 ? Partition{} : Partition{{n}};
}

u64 Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), u64{0});
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ",";
    out << parts_[i];
  }
  out << ")";
  return out.str();
}

Partition conjugate(const Partition& lambda) {
  const auto& parts = lambda.parts();
  if (parts.empty()) return {};
  std::vector<u64> cols(parts[0], 0);
  for (u64 part : parts) {
    for (u64 j = 0; j < part; ++j) ++cols[j];
  }
  return Partition{std::move(cols)};
}

std::vector<u64> hook_lengths(const Partition& lambda) {
  const auto& parts = lambda.parts();
  Partition conj = conjugate(lambda);
  std::vector<u64> hooks;
  hooks.reserve(lambda.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (u64 j = 0; j < parts[i]; ++j) {
      // arm + leg + 1, all 0-indexed
      hooks.push_back((parts[i] - 1 - j) + (conj.part(j) - 1 - i) + 1);
    }
  }
  std::sort(hooks.rbegin(), hooks.rend());
  return hooks;
}

arith::FactoredNat character_degree(const Partition& lambda) {
  arith::FactoredNat deg;
  for (u64 k = 2; k <= lambda.size(); ++k) deg *= arith::factor_natural(k);
  for (u64 h : hook_lengths(lambda)) {
    if (h > 1) deg.divide_exact(arith::factor_natural(h));
  }
  return deg;
}

Partition p_core(const Partition& lambda, u64 p, std::size_t bead_count) {
  if (!arith::is_prime(p)) throw std::invalid_argument("p_core: p not prime");
  std::size_t b = bead_count == 0 ? lambda.rows() : bead_count;
  if (b < lambda.rows())
    throw std::invalid_argument("p_core: bead_count below number of parts");
  if (b == 0) return {};

  // First-column beta-numbers: beta_i = lambda_i + (b - 1 - i), 0-indexed.
  // They are strictly decreasing, hence pairwise distinct.
  std::vector<u64> beads(b);
  for (std::size_t i = 0; i < b; ++i) beads[i] = lambda.part(i) + (b - 1 - i);

  // Slide every bead down its runner: the k beads with residue r end up at
  // r, r + p, ..., r + (k-1)p.
  std::vector<u64> runner_count(p, 0);
  for (u64 bead : beads) ++runner_count[bead % p];
  std::vector<u64> slid;
  slid.reserve(b);
  for (u64 r = 0; r < p; ++r) {
    for (u64 t = 0; t < runner_count[r]; ++t) slid.push_back(r + t * p);
  }
  std::sort(slid.rbegin(), slid.rend());

  std::vector<u64> parts;
  for (std::size_t i = 0; i < slid.size(); ++i) {
    u64 offset = b - 1 - i;
    if (slid[i] > offset) parts.push_back(slid[i] - offset);
  }
  return Partition{std::move(parts)};
}

bool in_principal_block(const Partition& lambda, u64 p) {
  return p_core(lambda, p) == p_core(Partition::one_row(lambda.size()), p);
}

namespace {

u64 count_syt_rec(std::vector<u64>& parts, std::map<std::vector<u64>, u64>& memo) {
  if (parts.empty()) return 1;
  auto it = memo.find(parts);
  if (it != memo.end()) return it->second;
  u64 total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    // (i, parts[i]-1) is a removable corner iff it is the last row or the
    // next row is strictly shorter.
    if (i + 1 < parts.size() && parts[i + 1] == parts[i]) continue;
    if (parts[i] == 1) {
      std::vector<u64> rest(parts.begin(), parts.end() - 1);
      total += count_syt_rec(rest, memo);
    } else {
      --parts[i];
      total += count_syt_rec(parts, memo);
      ++parts[i];
    }
  }
  memo.emplace(parts, total);
  return total;
}

}  // namespace

u64 count_standard_tableaux(const Partition& lambda) {
  if (lambda.size() > 12)
    throw std::invalid_argument(
        "count_standard_tableaux: refused above size 12 (oracle only)");
  std::vector<u64> parts = lambda.parts();
  std::map<std::vector<u64>, u64> memo;
  return count_syt_rec(parts, memo);
}

const char* to_string(AltCase c) {
  switch (c) {
    case AltCase::PDividesN: return "p-divides-n";
    case AltCase::FirstDigitAtLeastTwo: return "first-digit-at-least-two";
    case AltCase::FirstDigitOne: return "first-digit-one";
  }
  return "?";
}

const char* to_string(CertificationLevel l) {
  switch (l) {
    case CertificationLevel::FullViaPeel: return "full-via-peel";
    case CertificationLevel::DegreeAndBlockOnly: return "degree-and-block-only";
  }
  return "?";
}

namespace {

const char* kDescentNote =
    "descent: every irreducible constituent of the restriction to the "
    "alternating group keeps p'-degree, principal-block membership, and "
    "zero multiplicity of the trivial modular character.";

}  // namespace

AltWitnessCertificate alt_witness(u64 n, u64 p) {
  if (n < 5) throw std::invalid_argument("alt_witness: n must be >= 5");
  if (p < 5 || !arith::is_prime(p))
    throw std::invalid_argument("alt_witness: p must be a prime >= 5");
  if (p > n)
    throw std::invalid_argument("alt_witness: p must divide n!/2, so p <= n");

  AltWitnessCertificate cert;
  cert.n = n;
  cert.p = p;

  u64 a0 = n % p;
  std::string claim_note;
  if (a0 == 0) {
    cert.case_tag = AltCase::PDividesN;
    cert.lambda = Partition{{n - 2, 1, 1}};
    cert.level = CertificationLevel::DegreeAndBlockOnly;
    claim_note =
        "cited, not recomputed: on p-regular classes the reduction of this "
        "character splits into two irreducible modular constituents, of "
        "degrees n-2 and (n-2)(n-3)/2, neither of them trivial. ";
  } else if (a0 >= 2) {
    cert.case_tag = AltCase::FirstDigitAtLeastTwo;
    std::vector<u64> parts{a0};
    parts.insert(parts.end(), n - a0, 1);
    cert.lambda = Partition{std::move(parts)};
    cert.level = CertificationLevel::FullViaPeel;
    claim_note =
        "hook shape: the restriction to p-regular classes is irreducible, "
        "so the checks below certify the vanishing claim outright. ";
  } else {
    cert.case_tag = AltCase::FirstDigitOne;
    cert.lambda = Partition{{n - 3, 2, 1}};
    cert.level = CertificationLevel::DegreeAndBlockOnly;
    claim_note =
        "cited, not recomputed: the vanishing of the trivial-character "
        "multiplicity for this shape. ";
  }
  cert.note = claim_note + kDescentNote;

  if (cert.lambda.size() != n)
    throw internal_error("alt_witness: selected shape has wrong size");

  cert.degree = character_degree(cert.lambda);
  cert.degree_not_one = !cert.degree.is_one();
  cert.degree_prime_to_p = !cert.degree.divisible_by_prime(p);
  cert.principal_block = in_principal_block(cert.lambda, p);

  if (!cert.degree_not_one)
    throw check_failure("degree_not_one", "n=" + std::to_string(n) +
                                              " p=" + std::to_string(p));
  if (!cert.degree_prime_to_p)
    throw check_failure("degree_prime_to_p", "n=" + std::to_string(n) +
                                                 " p=" + std::to_string(p));
  if (!cert.principal_block)
    throw check_failure("principal_block", "n=" + std::to_string(n) +
                                               " p=" + std::to_string(p));
  return cert;
}

}  // namespace decwit::partitions
