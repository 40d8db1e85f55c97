#pragma once

// Dense univariate Laurent polynomials over an exact coefficient ring.
//
// Laurent<R> stores c_k t^(low + k).  The representation is canonical: the
// lowest and highest stored coefficients are nonzero, and the zero polynomial
// has no coefficients and low() == 0.

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <complex>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fibknot {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an exact division leaves a remainder.
class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class R>
class Laurent {
 public:
  using coefficient_type = R;

  Laurent() = default;
  Laurent(R constant) {  // NOLINT: implicit scalars keep arithmetic readable
    if (constant != 0) coeffs_.push_back(std::move(constant));
  }
  Laurent(int constant) : Laurent(R(constant)) {}  // NOLINT

  /// Coefficients listed from t^low upward.
  Laurent(int low, std::vector<R> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
    trim();
  }

  static Laurent monomial(R c, int exponent) { return Laurent(exponent, {std::move(c)}); }
  static Laurent t() { return monomial(R(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int low() const { return low_; }
  int high() const { return is_zero() ? 0 : low_ + static_cast<int>(coeffs_.size()) - 1; }
  /// Exponent span high - low; -1 for zero.
  int span() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<R>& coefficients() const { return coeffs_; }

  R coeff(int exponent) const {
    int k = exponent - low_;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return R(0);
    return coeffs_[k];
  }
  const R& leading() const { return coeffs_.back(); }
  const R& trailing() const { return coeffs_.front(); }

  bool is_constant() const { return coeffs_.empty() || (coeffs_.size() == 1 && low_ == 0); }
  bool is_monomial() const { return coeffs_.size() == 1; }

  Laurent shifted(int by) const {
    Laurent r = *this;
    if (!r.is_zero()) r.low_ += by;
    return r;
  }

  /// f(t) -> f(1/t)
  Laurent reflected() const {
    if (is_zero()) return {};
    std::vector<R> c(coeffs_.rbegin(), coeffs_.rend());
    return Laurent(-high(), std::move(c));
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Laurent& operator+=(const Laurent& o) { return add_scaled(o, 1); }
  Laurent& operator-=(const Laurent& o) { return add_scaled(o, -1); }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> c(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Laurent(a.low_ + b.low_, std::move(c));
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  /// Exact quotient a / b.  Throws InexactDivision if b does not divide a.
  friend Laurent exact_divide(Laurent a, const Laurent& b) {
    if (b.is_zero()) throw std::domain_error("Laurent division by zero");
    std::vector<std::pair<int, R>> terms;
    while (!a.is_zero()) {
      int e = a.high() - b.high();
      if (a.low() - b.low() > e) throw InexactDivision("Laurent polynomial division is not exact");
      R q = div_coeff(a.leading(), b.leading());
      terms.emplace_back(e, q);
      a -= b.shifted(e) * Laurent(q);
    }
    if (terms.empty()) return {};
    int lo = terms.back().first;
    std::vector<R> c(terms.front().first - lo + 1, R(0));
    for (auto& [e, q] : terms) c[e - lo] = q;
    return Laurent(lo, std::move(c));
  }

  /// Polynomial division with remainder; both operands must be genuine
  /// polynomials (low() >= 0) over a field.
  friend std::pair<Laurent, Laurent> divmod(Laurent a, const Laurent& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.low() < 0 || b.low() < 0) throw std::domain_error("divmod needs polynomials");
    Laurent q;
    while (!a.is_zero() && a.high() >= b.high()) {
      Laurent term = monomial(a.leading() / b.leading(), a.high() - b.high());
      q += term;
      a -= term * b;
    }
    return {q, a};
  }

  template <class V>
  V evaluate(const V& x) const {
    // Horner over the stored range, then scale by x^low.
    auto lift = [](const R& c) -> V {
      if constexpr (std::is_same_v<V, double> || std::is_same_v<V, std::complex<double>>)
        return V(static_cast<double>(c));
      else
        return V(c);
    };
    V acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + lift(*it);
    if (low_ > 0)
      for (int i = 0; i < low_; ++i) acc = acc * x;
    if (low_ < 0)
      for (int i = 0; i < -low_; ++i) acc = acc / x;
    return acc;
  }

  R sum_of_coefficients() const {
    R s(0);
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  /// Value at t = -1, exact.
  R at_minus_one() const {
    R s(0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      bool odd = ((low_ + static_cast<int>(k)) % 2) != 0;
      s += odd ? R(-coeffs_[k]) : coeffs_[k];
    }
    return s;
  }

  /// f(t) = f(1/t) up to a monomial shift.
  bool is_palindromic() const {
    return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
  }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
      const R& c = coeffs_[k];
      if (c == 0) continue;
      int e = low_ + k;
      R mag = c < 0 ? R(-c) : c;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      bool unit = (mag == 1);
      if (!unit || e == 0) os << mag;
      if (e != 0) {
        os << var;
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.to_string(); }

 private:
  static R div_coeff(const R& a, const R& b) {
    if constexpr (std::is_same_v<R, Rational>) {
      return a / b;
    } else {
      if (a % b != 0) throw InexactDivision("coefficient division is not exact");
      return a / b;
    }
  }

  Laurent& add_scaled(const Laurent& o, int sign) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = o;
      if (sign < 0) *this = -*this;
      return *this;
    }
    int lo = std::min(low_, o.low_);
    int hi = std::max(high(), o.high());
    std::vector<R> c(hi - lo + 1, R(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[low_ - lo + k] = coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
      if (sign > 0)
        c[o.low_ - lo + k] += o.coeffs_[k];
      else
        c[o.low_ - lo + k] -= o.coeffs_[k];
    }
    low_ = lo;
    coeffs_ = std::move(c);
    trim();
    return *this;
  }

  void trim() {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const R& c) { return c != 0; });
    if (first == coeffs_.end()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    low_ += static_cast<int>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
    while (coeffs_.back() == 0) coeffs_.pop_back();
  }

  int low_ = 0;
  std::vector<R> coeffs_;
};

using LaurentPoly = Laurent<BigInt>;
using RationalPoly = Laurent<Rational>;

/// Multiplies out to a monic rational polynomial; zero stays zero.
inline RationalPoly make_monic(const RationalPoly& p) {
  if (p.is_zero()) return p;
  return p * RationalPoly(Rational(1) / p.leading());
}

inline RationalPoly to_rational(const LaurentPoly& p) {
  std::vector<Rational> c(p.coefficients().begin(), p.coefficients().end());
  return RationalPoly(p.low(), std::move(c));
}

template <class R>
Laurent<R> poly_gcd(Laurent<R> a, Laurent<R> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

}  // namespace fibknot
