#pragma once

// Reduced Burau representation, Alexander polynomials of braid closures,
// Bennequin (brick) Seifert matrices and signature functions.
//
// Conventions (recorded in reports through convention_fingerprint()):
//  * reduced Burau acts by right multiplication; sigma_i replaces column i-1
//    (0-based) by t*c_{i-2} - t*c_{i-1} + c_i, truncated at the edges, so
//    sigma_1 in B_2 is the 1x1 matrix (-t).
//  * Alexander polynomials are normalized to lowest exponent 0 and positive
//    constant term.
//  * brick matrices give positive braids a negative-definite symmetrization.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "fibknot/braid.hpp"
#include "fibknot/matrix.hpp"

namespace fibknot {

/// Normalized Alexander polynomial; equality is equality up to units +-t^k.
class AlexanderPolynomial {
 public:
  AlexanderPolynomial() : poly_(1) {}
  explicit AlexanderPolynomial(const LaurentPoly& p) : poly_(normalize(p)) {}

  static LaurentPoly normalize(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly q = p.shifted(-p.low());
    return q.trailing() < 0 ? -q : q;
  }

  const LaurentPoly& poly() const { return poly_; }
  int degree() const { return poly_.high(); }
  BigInt determinant() const { return abs(poly_.at_minus_one()); }
  std::string to_string() const { return poly_.to_string(); }

  friend bool operator==(const AlexanderPolynomial& a, const AlexanderPolynomial& b) {
    return a.poly_ == b.poly_;
  }
  friend bool operator!=(const AlexanderPolynomial& a, const AlexanderPolynomial& b) { return !(a == b); }

 private:
  LaurentPoly poly_;
};

/// Integer coefficients low..high as an Alexander polynomial.
inline AlexanderPolynomial alexander_of(std::initializer_list<int> coeffs) {
  std::vector<BigInt> c(coeffs.begin(), coeffs.end());
  return AlexanderPolynomial(LaurentPoly(0, std::move(c)));
}

// ---------------------------------------------------------------------------
// Burau

namespace burau_detail {

/// Right-multiplies m by the reduced Burau matrix of one letter, touching only
/// the single affected column.
inline void apply_letter(LaurentMatrix& m, int strands, BraidLetter l) {
  const int dim = strands - 1;
  const int r = l.index() - 1;
  const LaurentPoly t = LaurentPoly::t();
  const LaurentPoly tinv = LaurentPoly::monomial(1, -1);
  // column r of the generator: coefficients on rows r-1, r, r+1
  LaurentPoly a, b, c;
  if (l.sign() > 0) {
    a = t;
    b = -t;
    c = 1;
  } else {
    a = 1;
    b = -tinv;
    c = tinv;
  }
  for (int row = 0; row < static_cast<int>(m.rows()); ++row) {
    LaurentPoly v = b * m(row, r);
    if (r - 1 >= 0) v += a * m(row, r - 1);
    if (r + 1 < dim) v += c * m(row, r + 1);
    m(row, r) = std::move(v);
  }
}

}  // namespace burau_detail

/// Generator matrix of one letter, built densely.
inline LaurentMatrix burau_generator(int strands, BraidLetter l) {
  LaurentMatrix g = LaurentMatrix::identity(strands - 1);
  burau_detail::apply_letter(g, strands, l);
  return g;
}

inline LaurentMatrix reduced_burau(const BraidWord& w) {
  LaurentMatrix m = LaurentMatrix::identity(w.strands() - 1);
  for (auto l : w.letters()) burau_detail::apply_letter(m, w.strands(), l);
  return m;
}

/// 1 + t + ... + t^{n-1}
inline LaurentPoly strand_polynomial(int n) {
  return LaurentPoly(0, std::vector<BigInt>(n, BigInt(1)));
}

inline AlexanderPolynomial alexander_from_burau(const BraidWord& w) {
  if (closure_components(w) != 1) throw std::invalid_argument("Alexander polynomial needs a knot closure");
  const int n = w.strands();
  if (n == 1) return AlexanderPolynomial(LaurentPoly(1));
  LaurentMatrix m = reduced_burau(w) - LaurentMatrix::identity(n - 1);
  LaurentPoly d = determinant(std::move(m));
  return AlexanderPolynomial(exact_divide(d, strand_polynomial(n)));
}

// ---------------------------------------------------------------------------
// Seifert matrices

using SeifertMatrix = IntMatrix;

/// Homology generator of the braided surface: the loop through two
/// consecutive bands with the same index.
struct BrickLoop {
  int column;  // generator index i
  int first;   // letter positions, first < second
  int second;
};

inline std::vector<BrickLoop> brick_loops(const BraidWord& w) {
  std::vector<BrickLoop> loops;
  for (int i = 1; i < w.strands(); ++i) {
    int prev = -1;
    for (int k = 0; k < static_cast<int>(w.length()); ++k) {
      if (w.letters()[k].index() != i) continue;
      if (prev >= 0) loops.push_back({i, prev, k});
      prev = k;
    }
  }
  return loops;
}

/// Seifert matrix of the Bennequin surface (n disks, one twisted band per letter).
inline SeifertMatrix brick_seifert(const BraidWord& w) {
  if (closure_components(w) != 1) throw std::invalid_argument("brick surface: closure is not a knot");
  for (int i = 1; i < w.strands(); ++i)
    if (w.occurrences(i) == 0)
      throw std::invalid_argument("brick surface is disconnected: sigma_" + std::to_string(i) + " unused");
  const auto loops = brick_loops(w);
  const auto& ls = w.letters();
  const std::size_t m = loops.size();
  SeifertMatrix s(m, m);
  for (std::size_t x = 0; x < m; ++x) {
    const auto& a = loops[x];
    s(x, x) = -(ls[a.first].sign() + ls[a.second].sign()) / 2;
    for (std::size_t y = 0; y < m; ++y) {
      if (x == y) continue;
      const auto& b = loops[y];
      if (a.column == b.column && a.second == b.first) {
        // consecutive loops sharing one band
        if (ls[a.second].sign() > 0)
          s(x, y) = 1;
        else
          s(y, x) = -1;
      } else if (b.column == a.column + 1) {
        if (a.first < b.first && b.first < a.second && a.second < b.second)
          s(x, y) = -1;
        else if (b.first < a.first && a.first < b.second && b.second < a.second)
          s(x, y) = 1;
      }
    }
  }
  return s;
}

inline LaurentMatrix seifert_pencil(const SeifertMatrix& s) {
  // S - t S^T
  LaurentMatrix p(s.rows(), s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      p(i, j) = LaurentPoly(BigInt(s(i, j))) - LaurentPoly::monomial(BigInt(s(j, i)), 1);
  return p;
}

inline AlexanderPolynomial alexander_from_seifert(const SeifertMatrix& s) {
  if (!s.square()) throw std::invalid_argument("Seifert matrix must be square");
  return AlexanderPolynomial(determinant(seifert_pencil(s)));
}

/// A point exp(2 pi i num/den) on the unit circle.
struct CirclePoint {
  std::int64_t num = 1;
  std::int64_t den = 2;

  bool is_minus_one() const { return den != 0 && (2 * num) % den == 0 && ((2 * num) / den) % 2 != 0; }
  bool is_one() const { return den != 0 && num % den == 0; }
  std::complex<double> value() const {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(theta), std::sin(theta)};
  }
};

class JumpPoint : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Signature of the symmetrization S + S^T, computed exactly.
inline int classical_signature(const SeifertMatrix& s) {
  RationalMatrix sym = convert<Rational>(s) + convert<Rational>(s.transpose());
  return inertia(sym).signature();
}

/// Levine-Tristram signature of (1 - w) S + (1 - conj w) S^T.  Exact at w = -1;
/// elsewhere by Hermitian eigenvalues, refusing to answer within 1e-9 of a
/// root of the Alexander polynomial or of a zero eigenvalue.
inline int signature_function(const SeifertMatrix& s, const CirclePoint& w) {
  if (w.den == 0) throw std::invalid_argument("circle point with zero denominator");
  if (s.rows() == 0 || w.is_one()) return 0;
  if (w.is_minus_one()) return classical_signature(s);
  constexpr double margin = 1e-9;
  const std::complex<double> z = w.value();
  const AlexanderPolynomial delta = alexander_from_seifert(s);
  if (std::abs(delta.poly().evaluate(z)) < margin)
    throw JumpPoint("signature requested at a root of the Alexander polynomial");
  const auto n = static_cast<Eigen::Index>(s.rows());
  Eigen::MatrixXcd h(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      h(i, j) = (1.0 - z) * static_cast<double>(s(i, j)) + (1.0 - std::conj(z)) * static_cast<double>(s(j, i));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  int sig = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    double ev = solver.eigenvalues()(k);
    if (std::abs(ev) < margin) throw JumpPoint("signature form is numerically degenerate");
    sig += ev > 0 ? 1 : -1;
  }
  return sig;
}

inline BigInt knot_determinant(const AlexanderPolynomial& a) { return a.determinant(); }
inline BigInt knot_determinant(const BraidWord& w) { return alexander_from_burau(w).determinant(); }
inline BigInt knot_determinant(const SeifertMatrix& s) { return alexander_from_seifert(s).determinant(); }

inline BraidWord mirror(const BraidWord& w) {
  std::vector<BraidLetter> ls;
  for (auto l : w.letters()) ls.push_back(l.inverse());
  return BraidWord(w.strands(), std::move(ls));
}

}  // namespace fibknot
