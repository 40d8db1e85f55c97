#pragma once

// Continued fractions and two-bridge knots b(p, q).

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibknot/cover_lift.hpp"
#include "fibknot/invariants.hpp"

namespace fibknot {

using ContinuedFraction = std::vector<std::int64_t>;

/// p/q with p >= 1, 0 <= q < p and gcd(p, q) = 1.  `mirrored` records that
/// the continued fraction evaluated to a negative number.
struct TwoBridgeFraction {
  std::int64_t p = 1;
  std::int64_t q = 0;
  bool mirrored = false;

  bool is_knot() const { return p % 2 == 1; }
  std::string to_string() const { return std::to_string(p) + "/" + std::to_string(q); }
  friend bool operator==(const TwoBridgeFraction&, const TwoBridgeFraction&) = default;
};

/// Exact value a_1 + 1/(a_2 + 1/(... + 1/a_k)) as an unreduced-sign pair.
struct FractionValue {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

namespace twobridge_detail {

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("continued fraction overflow");
  return r;
}
inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("continued fraction overflow");
  return r;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace twobridge_detail

inline FractionValue evaluate_continued_fraction(const ContinuedFraction& cf) {
  using namespace twobridge_detail;
  if (cf.empty()) throw std::invalid_argument("empty continued fraction");
  for (auto a : cf)
    if (a == 0) throw std::invalid_argument("continued fraction entries must be nonzero");
  // value = num/den, built from the innermost term outward
  std::int64_t num = cf.back(), den = 1;
  for (auto it = cf.rbegin() + 1; it != cf.rend(); ++it) {
    if (num == 0) throw std::domain_error("zero denominator while evaluating continued fraction");
    // a + den/num
    std::int64_t nn = add(mul(*it, num), den);
    den = num;
    num = nn;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g == 0) throw std::domain_error("degenerate continued fraction");
  return {num / g, den / g};
}

inline TwoBridgeFraction cf_to_fraction(const ContinuedFraction& cf) {
  FractionValue v = evaluate_continued_fraction(cf);
  if (v.num == 0) throw std::domain_error("continued fraction evaluates to 0");
  TwoBridgeFraction f;
  f.mirrored = v.num < 0;
  f.p = v.num < 0 ? -v.num : v.num;
  f.q = ((v.den % f.p) + f.p) % f.p;
  return f;
}

/// Alternating sum over the partial sums e_k of eps_i = (-1)^floor(i q / p),
/// with q replaced by q - p when even.
inline AlexanderPolynomial twobridge_alexander(const TwoBridgeFraction& f) {
  using twobridge_detail::floor_div;
  if (!f.is_knot()) throw std::invalid_argument("two-bridge fraction with even p is a link");
  if (f.p == 1) return AlexanderPolynomial(LaurentPoly(1));
  const std::int64_t p = f.p;
  const std::int64_t q = f.q % 2 == 0 ? f.q - p : f.q;
  std::int64_t e = 0, lo = 0, hi = 0;
  std::vector<std::int64_t> exps{0};
  exps.reserve(static_cast<std::size_t>(p));
  for (std::int64_t i = 1; i < p; ++i) {
    std::int64_t fl = floor_div(twobridge_detail::mul(i, q), p);
    e += (fl % 2 == 0) ? 1 : -1;
    exps.push_back(e);
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  std::vector<BigInt> coeffs(static_cast<std::size_t>(hi - lo + 1), BigInt(0));
  for (std::size_t k = 0; k < exps.size(); ++k) coeffs[exps[k] - lo] += (k % 2 == 0) ? 1 : -1;
  return AlexanderPolynomial(LaurentPoly(static_cast<int>(lo), std::move(coeffs)));
}

struct CrosscheckResult {
  bool agree = false;
  TwoBridgeFraction fraction;
  AlexanderPolynomial twobridge;
  AlexanderPolynomial monodromy;
};

/// Compares the rational knot [2, 2, ..., 2] (2g terms) with the fibred
/// Alexander polynomial of w_0 in genus g.
inline CrosscheckResult crosscheck_w0_detail(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  CrosscheckResult r;
  r.fraction = cf_to_fraction(ContinuedFraction(2 * genus, 2));
  r.twobridge = twobridge_alexander(r.fraction);
  r.monodromy = fibred_alexander({genus, 0, Variant::original});
  r.agree = r.twobridge == r.monodromy;
  return r;
}

inline bool crosscheck_w0(int genus) { return crosscheck_w0_detail(genus).agree; }

}  // namespace fibknot
