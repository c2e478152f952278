#pragma once

// Exact elementary number theory used by every other module: deterministic
// primality, prime-power recognition, p-adic digits, binomials mod p via
// Lucas' rule, and exact factored naturals (the only representation we use
// for quantities that can exceed 64 bits, e.g. group orders and character
// degrees).  Everything here is pure and safe for concurrent use.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace decwit::arith {

using u64 = std::uint64_t;

// (a * b) mod m and (b ^ e) mod m without overflow, for any m >= 1.
u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 b, u64 e, u64 m);

// Deterministic Miller-Rabin, valid for every 64-bit input.
bool is_prime(u64 n);

// gcd with the degenerate case rejected: gcd(0, 0) has no sensible value
// here and always indicates a caller bug.
u64 gcd(u64 a, u64 b);

struct PrimePower {
  u64 p = 0;  // prime
  u64 f = 0;  // exponent, >= 1
  u64 q = 0;  // p^f

  bool operator==(const PrimePower&) const = default;
};

// Recognise q = p^f (q >= 2).  Returns nullopt when q is not a prime power.
std::optional<PrimePower> factor_prime_power(u64 q);

// Same, but a non-prime-power argument is an input error.
PrimePower require_prime_power(u64 q);

struct PAdicExpansion {
  u64 base = 0;            // prime p
  std::vector<u64> digits; // least significant first, last digit nonzero
  u64 value = 0;           // the expanded integer

  u64 digit(std::size_t i) const { return i < digits.size() ? digits[i] : 0; }
};

// Base-p digits of n (n >= 1, p prime).
PAdicExpansion p_adic_digits(u64 n, u64 p);

// C(m, k) mod p for prime p, computed digit-wise (Lucas).  Requires k <= m.
u64 binom_mod_p(u64 m, u64 k, u64 p);

// An exact natural number kept in fully factored form: a map prime ->
// exponent, empty map meaning 1.  Multiplication and exact division are
// exponent arithmetic; a decimal rendering is available for display and
// cross-checks against published values.
class FactoredNat {
 public:
  FactoredNat() = default;

  static FactoredNat from_prime_power(u64 p, u64 e);

  const std::map<u64, u64>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  u64 exponent_of(u64 p) const;
  bool divisible_by_prime(u64 p) const { return exponent_of(p) > 0; }

  FactoredNat& mul_prime(u64 p, u64 e);
  FactoredNat& operator*=(const FactoredNat& other);
  friend FactoredNat operator*(FactoredNat a, const FactoredNat& b) {
    a *= b;
    return a;
  }

  // Exact division; throws internal_error if any exponent would go negative.
  FactoredNat& divide_exact(const FactoredNat& other);
  bool divides(const FactoredNat& other) const;

  // The value as u64 if it fits, nullopt otherwise.
  std::optional<u64> value_u64() const;

  // The value reduced mod m (m >= 1).
  u64 residue_mod(u64 m) const;

  // Exact decimal expansion (schoolbook bignum; fine up to thousands of
  // digits) and a human-readable factored form like "2^4·3^2·5".
  std::string decimal() const;
  std::string factored_string() const;

  // Upper bound on the number of decimal digits (cheap, for display caps).
  std::size_t decimal_digits_estimate() const;

  bool operator==(const FactoredNat&) const = default;

 private:
  std::map<u64, u64> factors_;
};

// Full factorisation of n >= 1.  Trial division by small primes, then
// deterministic Brent-rho splitting with Miller-Rabin certificates; exact
// for every 64-bit input.  Not meant for adversarial semiprimes.
FactoredNat factor_natural(u64 n);

// Coefficients of the e-th cyclotomic polynomial, ascending degree.
// Supported for 1 <= e <= 64, which covers every index used by the order
// formulas and Weil degrees in this project.
const std::vector<long long>& cyclotomic_coeffs(u64 e);

// Phi_e(x) for x >= 2; throws std::overflow_error if the value exceeds u64.
u64 cyclotomic_value(u64 e, u64 x);

// x^d - eps (eps = +1 or -1) in factored form, split along cyclotomic
// polynomials so that no intermediate value exceeds 64 bits:
//   x^d - 1 = prod_{e | d} Phi_e(x)
//   x^d + 1 = prod_{e | 2d, e not | d} Phi_e(x)
// Results are memoised; x >= 2, d >= 1.
FactoredNat factor_pow_minus_eps(u64 x, u64 d, int eps);

}  // namespace decwit::arith
