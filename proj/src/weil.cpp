#include "decwit/weil.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "decwit/errors.hpp"

namespace decwit::weil {

const char* to_string(Kind k) {
  return k == Kind::SpecialLinear ? "sl" : "su";
}

const char* to_string(ExceptionReason r) {
  switch (r) {
    case ExceptionReason::EmptyAdmissibleRange: return "empty-admissible-range";
    case ExceptionReason::AllCountsPositive: return "all-counts-positive";
  }
  return "?";
}

namespace {

// (q^n - 1)/(q - 1) or (q^n - (-1)^n)/(q + 1), assembled from cyclotomic
// pieces so nothing overflows.
arith::FactoredNat weil_degree_of(Kind kind, u64 n, const arith::PrimePower& q) {
  if (kind == Kind::SpecialLinear) {
    auto deg = arith::factor_pow_minus_eps(q.q, n, +1);
    deg.divide_exact(arith::factor_pow_minus_eps(q.q, 1, +1));
    return deg;
  }
  auto deg = arith::factor_pow_minus_eps(q.q, n, n % 2 == 0 ? +1 : -1);
  deg.divide_exact(arith::factor_pow_minus_eps(q.q, 1, -1));
  return deg;
}

}  // namespace

WeilContext make_context(Kind kind, u64 n, u64 q, u64 offset_shift) {
  if (n < 3) throw std::invalid_argument("make_context: n must be >= 3");
  arith::PrimePower pp = arith::require_prime_power(q);
  if (pp.p == 2) throw std::invalid_argument("make_context: q must be odd");

  WeilContext ctx;
  ctx.kind = kind;
  ctx.n = n;
  ctx.q = pp;
  ctx.modulus = kind == Kind::SpecialLinear ? q - 1 : q + 1;
  ctx.centre_order = arith::gcd(n, ctx.modulus);
  ctx.coeffs.reserve(pp.f);
  u64 m = ctx.modulus;
  u64 pw = 1 % m;
  for (u64 s = 0; s < pp.f; ++s) {
    ctx.coeffs.push_back(
        arith::mulmod(arith::mulmod(n, (pp.p - 1) % m, m), pw, m));
    pw = arith::mulmod(pw, pp.p, m);
  }
  u64 base_offset = kind == Kind::SpecialLinear ? 0 : (m - n % m) % m;
  ctx.offset = (base_offset + offset_shift % m) % m;
  ctx.weil_degree = weil_degree_of(kind, n, pp);
  return ctx;
}

u64 count_solutions(const WeilContext& ctx, u64 j, CountEngine engine) {
  u64 m = ctx.modulus;
  if (j >= m) throw std::invalid_argument("count_solutions: j must be < m");
  u64 f = ctx.coeffs.size();

  if (engine == CountEngine::Brute) {
    if (f > 25)
      throw std::invalid_argument(
          "count_solutions: Brute engine refused for f > 25, use DP");
    // Gray-code walk: exactly one coordinate flips between steps.
    u64 sum = ctx.offset % m;
    u64 count = (sum == j) ? 1 : 0;
    u64 prev_gray = 0;
    for (u64 k = 1; k < (u64(1) << f); ++k) {
      u64 gray = k ^ (k >> 1);
      u64 flipped = std::countr_zero(prev_gray ^ gray);
      u64 c = ctx.coeffs[flipped] % m;
      if (gray & (u64(1) << flipped)) {
        sum = (sum + c) % m;
      } else {
        sum = (sum + m - c) % m;
      }
      if (sum == j) ++count;
      prev_gray = gray;
    }
    return count;
  }

  if (f > 62)
    throw std::invalid_argument(
        "count_solutions: counts could exceed u64 for f > 62");
  std::vector<u64> counts(m, 0);
  counts[ctx.offset % m] = 1;
  std::vector<u64> next(m);
  for (u64 s = 0; s < f; ++s) {
    u64 c = ctx.coeffs[s] % m;
    for (u64 r = 0; r < m; ++r) {
      next[(r + c) % m] = counts[r];
    }
    for (u64 r = 0; r < m; ++r) counts[r] += next[r];
    // total is 2^(s+1) <= 2^62: no overflow possible
  }
  return counts[j];
}

FieldAutomorphismData field_automorphism_data(const WeilContext& ctx) {
  FieldAutomorphismData data;
  u64 f = ctx.q.f;
  data.a = 0;
  data.f_prime = f;
  while (data.f_prime % ctx.q.p == 0) {
    data.f_prime /= ctx.q.p;
    ++data.a;
  }
  data.q_prime = 1;
  for (u64 i = 0; i < data.f_prime; ++i) data.q_prime *= ctx.q.p;
  u64 sub_modulus = ctx.kind == Kind::SpecialLinear ? data.q_prime - 1
                                                    : data.q_prime + 1;
  if (ctx.modulus % sub_modulus != 0)
    throw internal_error("field_automorphism_data: stride is not integral");
  data.invariance_stride = ctx.modulus / sub_modulus;
  return data;
}

std::optional<WeilWitness> search_witness(
    const WeilContext& ctx, const std::optional<FieldAutomorphismData>& aut) {
  u64 m = ctx.modulus;
  u64 z = ctx.centre_order;
  for (u64 j = z; j <= m - z; j += z) {
    if (aut && j % aut->invariance_stride != 0) continue;
    if (count_solutions(ctx, j, CountEngine::DP) == 0) {
      WeilWitness w;
      w.kind = ctx.kind;
      w.n = ctx.n;
      w.q = ctx.q;
      w.modulus = m;
      w.centre_order = z;
      w.j = j;
      w.solution_count = 0;
      w.gamma_invariant =
          aut ? true : (j % field_automorphism_data(ctx).invariance_stride == 0);
      return w;
    }
  }
  return std::nullopt;
}

namespace {

// 2^f < bound, safely for any f.
bool pow2_below(u64 f, u64 bound) {
  if (f >= 64) return false;  // 2^f >= 2^64 > any u64 bound
  return (u64(1) << f) < bound;
}

}  // namespace

bool criterion_a(const WeilContext& ctx) {
  u64 quotient = ctx.modulus / ctx.centre_order;
  if (quotient < 1) throw internal_error("criterion_a: malformed context");
  bool pigeonhole = quotient >= 1 && pow2_below(ctx.q.f, quotient - 1);
  if (ctx.kind == Kind::SpecialUnitary) return pigeonhole;
  return arith::gcd(ctx.q.p - 1, quotient) > 1 || pigeonhole;
}

bool criterion_b(const WeilContext& ctx) {
  FieldAutomorphismData aut = field_automorphism_data(ctx);
  if (aut.a == 0) return true;
  u64 sub_modulus = ctx.kind == Kind::SpecialLinear ? aut.q_prime - 1
                                                    : aut.q_prime + 1;
  u64 quotient = sub_modulus / arith::gcd(sub_modulus, ctx.n);
  return quotient >= 1 && pow2_below(ctx.q.f, quotient - 1);
}

std::vector<u64> corollary_candidates(u64 n) {
  if (n < 3) throw std::invalid_argument("corollary_candidates: n >= 3");
  std::vector<u64> out;
  for (u64 f = 1; f < 40; ++f) {
    u64 bound = n * ((u64(1) << f) + 1) + 1;
    // For f with 3^f > bound nothing fits, and the gap only grows.
    u64 three_f = 1;
    bool any_fit = true;
    for (u64 i = 0; i < f; ++i) {
      three_f *= 3;
      if (three_f > bound) {
        any_fit = false;
        break;
      }
    }
    if (!any_fit || three_f > bound) break;
    for (u64 p = 3;; p += 2) {
      if (!arith::is_prime(p)) continue;
      u64 q = 1;
      bool over = false;
      for (u64 i = 0; i < f; ++i) {
        q *= p;
        if (q > bound) {
          over = true;
          break;
        }
      }
      if (over || q > bound) break;
      out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CorollaryException> enumerate_corollary(u64 n_min, u64 n_max) {
  if (n_min < 3 || n_min > n_max)
    throw std::invalid_argument("enumerate_corollary: need 3 <= n_min <= n_max");
  std::vector<CorollaryException> out;
  for (u64 n = n_min; n <= n_max; ++n) {
    for (u64 q : corollary_candidates(n)) {
      WeilContext ctx = make_context(Kind::SpecialLinear, n, q);
      if (search_witness(ctx).has_value()) continue;
      CorollaryException ex;
      ex.n = n;
      ex.q = ctx.q;
      u64 m = ctx.modulus, z = ctx.centre_order;
      if (z == m) {
        ex.reason = ExceptionReason::EmptyAdmissibleRange;
      } else {
        ex.reason = ExceptionReason::AllCountsPositive;
        for (u64 j = z; j <= m - z; j += z) {
          ex.admissible_counts.emplace_back(
              j, count_solutions(ctx, j, CountEngine::DP));
        }
      }
      ex.annotation = annotate_exception(n, q);
      out.push_back(std::move(ex));
    }
  }
  return out;
}

std::optional<std::string> annotate_exception(u64 n, u64 q) {
  if (n == 4 && q == 3) return "resolved externally by decomposition matrix";
  return std::nullopt;
}

}  // namespace decwit::weil
