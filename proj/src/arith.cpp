#include "decwit/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "decwit/errors.hpp"

namespace decwit::arith {

namespace {

using u128 = unsigned __int128;

// Factor out powers of d from n; returns the exponent.
u64 strip_factor(u64& n, u64 d) {
  u64 e = 0;
  while (n % d == 0) {
    n /= d;
    ++e;
  }
  return e;
}

}  // namespace

u64 mulmod(u64 a, u64 b, u64 m) {
  if (m == 0) throw std::invalid_argument("mulmod: modulus must be >= 1");
  return static_cast<u64>((u128(a % m) * u128(b % m)) % m);
}

u64 powmod(u64 b, u64 e, u64 m) {
  if (m == 0) throw std::invalid_argument("powmod: modulus must be >= 1");
  if (m == 1) return 0;
  u64 r = 1;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  // This base set is proven sufficient for all n < 3.3 * 10^24.
  static constexpr std::array<u64, 12> bases = {2,  3,  5,  7,  11, 13,
                                                17, 19, 23, 29, 31, 37};
  for (u64 b : bases) {
    if (n % b == 0) return n == b;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 b : bases) {
    u64 x = powmod(b, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

u64 gcd(u64 a, u64 b) {
  if (a == 0 && b == 0)
    throw std::invalid_argument("gcd(0, 0) is undefined here");
  return std::gcd(a, b);
}

std::optional<PrimePower> factor_prime_power(u64 q) {
  if (q < 2) throw std::invalid_argument("factor_prime_power: q must be >= 2");
  if (is_prime(q)) return PrimePower{q, 1, q};
  FactoredNat f = factor_natural(q);
  if (f.factors().size() != 1) return std::nullopt;
  const auto& [p, e] = *f.factors().begin();
  return PrimePower{p, e, q};
}

PrimePower require_prime_power(u64 q) {
  auto pp = factor_prime_power(q);
  if (!pp)
    throw std::invalid_argument("expected a prime power, got " +
                                std::to_string(q));
  return *pp;
}

PAdicExpansion p_adic_digits(u64 n, u64 p) {
  if (n == 0) throw std::invalid_argument("p_adic_digits: n must be >= 1");
  if (!is_prime(p)) throw std::invalid_argument("p_adic_digits: p not prime");
  PAdicExpansion e;
  e.base = p;
  e.value = n;
  while (n > 0) {
    e.digits.push_back(n % p);
    n /= p;
  }
  return e;
}

namespace {

// C(a, b) mod p for 0 <= a, b < p, p prime.
u64 small_binom_mod_p(u64 a, u64 b, u64 p) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  u64 num = 1, den = 1;
  for (u64 i = 1; i <= b; ++i) {
    num = mulmod(num, a - b + i, p);
    den = mulmod(den, i, p);
  }
  if (p == 2) return num;  // den is 1 mod 2 here
  return mulmod(num, powmod(den, p - 2, p), p);
}

}  // namespace

u64 binom_mod_p(u64 m, u64 k, u64 p) {
  if (!is_prime(p)) throw std::invalid_argument("binom_mod_p: p not prime");
  if (k > m) throw std::invalid_argument("binom_mod_p: requires k <= m");
  u64 acc = 1;
  while (m > 0 || k > 0) {
    acc = mulmod(acc, small_binom_mod_p(m % p, k % p, p), p);
    if (acc == 0) return 0;
    m /= p;
    k /= p;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// FactoredNat

FactoredNat FactoredNat::from_prime_power(u64 p, u64 e) {
  FactoredNat n;
  n.mul_prime(p, e);
  return n;
}

u64 FactoredNat::exponent_of(u64 p) const {
  auto it = factors_.find(p);
  return it == factors_.end() ? 0 : it->second;
}

FactoredNat& FactoredNat::mul_prime(u64 p, u64 e) {
  if (!is_prime(p))
    throw std::invalid_argument("FactoredNat: " + std::to_string(p) +
                                " is not prime");
  if (e > 0) factors_[p] += e;
  return *this;
}

FactoredNat& FactoredNat::operator*=(const FactoredNat& other) {
  for (const auto& [p, e] : other.factors_) factors_[p] += e;
  return *this;
}

FactoredNat& FactoredNat::divide_exact(const FactoredNat& other) {
  for (const auto& [p, e] : other.factors_) {
    auto it = factors_.find(p);
    if (it == factors_.end() || it->second < e)
      throw internal_error("FactoredNat: inexact division by " +
                           std::to_string(p) + "^" + std::to_string(e));
    it->second -= e;
    if (it->second == 0) factors_.erase(it);
  }
  return *this;
}

bool FactoredNat::divides(const FactoredNat& other) const {
  for (const auto& [p, e] : factors_) {
    if (other.exponent_of(p) < e) return false;
  }
  return true;
}

std::optional<u64> FactoredNat::value_u64() const {
  u128 v = 1;
  for (const auto& [p, e] : factors_) {
    for (u64 i = 0; i < e; ++i) {
      v *= p;
      if (v > u128(~u64(0))) return std::nullopt;
    }
  }
  return static_cast<u64>(v);
}

u64 FactoredNat::residue_mod(u64 m) const {
  if (m == 0) throw std::invalid_argument("residue_mod: modulus >= 1");
  u64 r = 1 % m;
  for (const auto& [p, e] : factors_) r = mulmod(r, powmod(p, e, m), m);
  return r;
}

std::string FactoredNat::decimal() const {
  // Little-endian limbs, base 10^9.
  std::vector<std::uint32_t> limbs{1};
  constexpr std::uint64_t kBase = 1000000000;
  auto mul_small = [&limbs](u64 x) {
    u128 carry = 0;
    for (auto& limb : limbs) {
      u128 cur = u128(limb) * x + carry;
      limb = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    while (carry > 0) {
      limbs.push_back(static_cast<std::uint32_t>(carry % kBase));
      carry /= kBase;
    }
  };
  for (const auto& [p, e] : factors_) {
    for (u64 i = 0; i < e; ++i) mul_small(p);
  }
  std::ostringstream out;
  out << limbs.back();
  for (auto it = limbs.rbegin() + 1; it != limbs.rend(); ++it) {
    out.width(9);
    out.fill('0');
    out << *it;
  }
  return out.str();
}

std::string FactoredNat::factored_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, e] : factors_) {
    if (!first) out << "·";
    first = false;
    out << p;
    if (e > 1) out << "^" << e;
  }
  return out.str();
}

std::size_t FactoredNat::decimal_digits_estimate() const {
  double bits = 0;
  for (const auto& [p, e] : factors_)
    bits += static_cast<double>(e) * std::log2(static_cast<double>(p));
  return static_cast<std::size_t>(bits * 0.30103) + 2;
}

// ---------------------------------------------------------------------------
// Factorisation

namespace {

u64 rho_step(u64 x, u64 c, u64 n) { return (mulmod(x, x, n) + c) % n; }

// Brent's variant of Pollard rho with a fixed parameter schedule, so the
// whole factorisation is deterministic.  n must be odd, composite, and free
// of small factors.  Returns a nontrivial divisor.
u64 brent_rho(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1, q = 1, ys = 2;
    u64 r = 1;
    constexpr u64 kBatch = 128;
    while (d == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = rho_step(y, c, n);
      for (u64 k = 0; k < r && d == 1; k += kBatch) {
        ys = y;
        u64 lim = std::min(kBatch, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = rho_step(y, c, n);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
      }
      r <<= 1;
    }
    if (d == n) {
      // Backtrack one step at a time.
      d = 1;
      while (d == 1) {
        ys = rho_step(ys, c, n);
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (d != n) return d;
    // This c found only the trivial divisor; try the next one.
  }
}

void split_composite(u64 n, FactoredNat& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.mul_prime(n, 1);
    return;
  }
  u64 d = brent_rho(n);
  split_composite(d, out);
  split_composite(n / d, out);
}

}  // namespace

FactoredNat factor_natural(u64 n) {
  if (n == 0) throw std::invalid_argument("factor_natural: n must be >= 1");
  FactoredNat out;
  for (u64 p : {2, 3, 5}) {
    u64 e = strip_factor(n, p);
    if (e) out.mul_prime(p, e);
  }
  // 30-wheel trial division for small factors.
  static constexpr std::array<u64, 8> wheel = {4, 2, 4, 2, 4, 6, 2, 6};
  u64 d = 7;
  std::size_t w = 0;
  while (d <= 65536 && d * d <= n) {
    u64 e = strip_factor(n, d);
    if (e) out.mul_prime(d, e);
    d += wheel[w];
    w = (w + 1) % wheel.size();
  }
  if (n > 1) {
    if (d * d > n) {
      out.mul_prime(n, 1);  // what is left is prime
    } else {
      split_composite(n, out);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

namespace {

constexpr u64 kMaxCyclotomicIndex = 64;

// Exact division of integer polynomials, divisor monic.
std::vector<long long> poly_divide_exact(const std::vector<long long>& num,
                                         const std::vector<long long>& den) {
  std::vector<long long> rem = num;
  std::vector<long long> quot(num.size() - den.size() + 1, 0);
  for (std::size_t i = quot.size(); i-- > 0;) {
    long long c = rem[i + den.size() - 1];
    quot[i] = c;
    if (c == 0) continue;
    for (std::size_t k = 0; k < den.size(); ++k) rem[i + k] -= c * den[k];
  }
  for (long long r : rem) {
    if (r != 0) throw internal_error("cyclotomic: inexact polynomial division");
  }
  return quot;
}

std::vector<std::vector<long long>> build_cyclotomics() {
  std::vector<std::vector<long long>> phi(kMaxCyclotomicIndex + 1);
  for (u64 e = 1; e <= kMaxCyclotomicIndex; ++e) {
    std::vector<long long> poly(e + 1, 0);
    poly[0] = -1;
    poly[e] = 1;  // x^e - 1
    for (u64 d = 1; d < e; ++d) {
      if (e % d == 0) poly = poly_divide_exact(poly, phi[d]);
    }
    phi[e] = std::move(poly);
  }
  return phi;
}

std::vector<u64> divisors_of(u64 n) {
  std::vector<u64> out;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

const std::vector<long long>& cyclotomic_coeffs(u64 e) {
  static const auto table = build_cyclotomics();
  if (e < 1 || e > kMaxCyclotomicIndex)
    throw std::invalid_argument("cyclotomic_coeffs: index out of range");
  return table[e];
}

u64 cyclotomic_value(u64 e, u64 x) {
  if (x < 2) throw std::invalid_argument("cyclotomic_value: x must be >= 2");
  const auto& coeffs = cyclotomic_coeffs(e);
  __int128 acc = 0;
  constexpr __int128 kGuard = (__int128(1) << 100);
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * __int128(x) + coeffs[i];
    if (acc > kGuard || acc < -kGuard)
      throw std::overflow_error("cyclotomic_value: intermediate overflow");
  }
  if (acc < 1 || acc > __int128(~u64(0)))
    throw std::overflow_error("cyclotomic_value: result does not fit u64");
  return static_cast<u64>(acc);
}

FactoredNat factor_pow_minus_eps(u64 x, u64 d, int eps) {
  if (x < 2) throw std::invalid_argument("factor_pow_minus_eps: x >= 2");
  if (d < 1) throw std::invalid_argument("factor_pow_minus_eps: d >= 1");
  if (eps != 1 && eps != -1)
    throw std::invalid_argument("factor_pow_minus_eps: eps must be +-1");

  static std::mutex cache_mutex;
  static std::map<std::array<u64, 3>, FactoredNat> cache;
  std::array<u64, 3> key{x, d, static_cast<u64>(eps == 1 ? 1 : 0)};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  FactoredNat out;
  if (eps == 1) {
    for (u64 e : divisors_of(d)) out *= factor_natural(cyclotomic_value(e, x));
  } else {
    for (u64 e : divisors_of(2 * d)) {
      if (d % e != 0) out *= factor_natural(cyclotomic_value(e, x));
    }
  }

  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(key, out);
  return out;
}

}  // namespace decwit::arith
