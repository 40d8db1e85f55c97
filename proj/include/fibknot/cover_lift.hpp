#pragma once

// Homological Birman-Hilden lift.  A braid on 2g+1 strands lifts to the
// double cover of the disk branched at the punctures, a genus-g surface with
// one boundary circle.  Half-twist sigma_i lifts to the Dehn twist about the
// chain curve a_i, which acts on H_1 by the transvection x -> x + <x, a_i> a_i.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibknot/braid.hpp"
#include "fibknot/invariants.hpp"
#include "fibknot/matrix.hpp"

namespace fibknot {

/// Homology of the chain surface with basis a_1..a_{2g} and
/// <a_i, a_{i+1}> = 1.
class ChainSurface {
 public:
  explicit ChainSurface(int genus) : genus_(genus) {
    if (genus < 1) throw std::invalid_argument("chain surface genus must be >= 1");
  }

  int genus() const { return genus_; }
  int rank() const { return 2 * genus_; }
  int strands() const { return 2 * genus_ + 1; }

  IntMatrix form() const {
    IntMatrix j(rank(), rank());
    for (int i = 0; i + 1 < rank(); ++i) {
      j(i, i + 1) = 1;
      j(i + 1, i) = -1;
    }
    return j;
  }

  /// Transvection along a_index (1-based) with the given sign.
  IntMatrix transvection(int index, int sign) const {
    if (index < 1 || index > rank()) throw std::invalid_argument("chain curve index out of range");
    // column c is the image of basis vector e_c; <e_c, a_i> = J(c, i)
    IntMatrix t = IntMatrix::identity(rank());
    const IntMatrix j = form();
    const int i = index - 1;
    for (int c = 0; c < rank(); ++c) t(i, c) += sign * j(c, i);
    return t;
  }

  bool preserves_form(const IntMatrix& m) const {
    const IntMatrix j = form();
    return checked_product(checked_product(m.transpose(), j), m) == j;
  }

 private:
  int genus_;
};

using SymplecticMatrix = IntMatrix;

class NotSymplectic : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Ordered product of transvections, one per letter.
inline SymplecticMatrix lift_homological(const BraidWord& w, const ChainSurface& surface) {
  if (w.strands() != surface.strands()) throw StrandMismatch(w.strands(), surface.strands());
  SymplecticMatrix m = IntMatrix::identity(surface.rank());
  for (auto l : w.letters()) m = checked_product(m, surface.transvection(l.index(), l.sign()));
  if (!surface.preserves_form(m)) throw NotSymplectic("lifted matrix does not preserve the chain form");
  return m;
}

inline SymplecticMatrix lift_homological(const BraidWord& w) {
  if (w.strands() % 2 == 0) throw std::invalid_argument("homological lift needs an odd strand count");
  return lift_homological(w, ChainSurface((w.strands() - 1) / 2));
}

/// Alexander polynomial of the fibred knot w_n: characteristic polynomial of
/// its homological monodromy.
inline AlexanderPolynomial fibred_alexander(const FamilySpec& spec, const PhiRule& rule = {}) {
  Family f = build_family(spec, rule);
  return AlexanderPolynomial(characteristic_polynomial(lift_homological(f.beta)));
}

inline AlexanderPolynomial monodromy_alexander(const SymplecticMatrix& m) {
  return AlexanderPolynomial(characteristic_polynomial(m));
}

// ---------------------------------------------------------------------------
// Branched covers

struct BranchedCoverData {
  int base_euler = 1;
  int branch_points = 0;
  int cover_euler = 0;
  int boundary_components = 0;
  int genus = 0;
};

/// Double cover of a disk (base_euler == 1) or of another surface with one
/// boundary circle, branched at k points.
inline BranchedCoverData branched_cover_euler(int base_euler, int branch_points) {
  if (branch_points < 0) throw std::invalid_argument("negative branch point count");
  BranchedCoverData d;
  d.base_euler = base_euler;
  d.branch_points = branch_points;
  d.cover_euler = 2 * base_euler - branch_points;
  // the boundary circle lifts connected iff the monodromy around it is odd
  d.boundary_components = branch_points % 2 == 1 ? 1 : 2;
  const int twice_genus = 2 - d.cover_euler - d.boundary_components;
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw std::domain_error("inconsistent branched cover Euler characteristic");
  d.genus = twice_genus / 2;
  return d;
}

// ---------------------------------------------------------------------------
// Seifert form from monodromy

class SeifertSolveError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Sign e in S - S^T = e J.  Chosen so positive twists give negative
/// signature, agreeing with brick_seifert.
inline constexpr int seifert_form_sign = -1;

/// The integer matrix S with S^T = S M and S - S^T = -J.
inline SeifertMatrix seifert_from_monodromy(const SymplecticMatrix& m, const IntMatrix& j) {
  if (!m.square() || m.rows() != j.rows()) throw std::invalid_argument("monodromy/form shape mismatch");
  const std::size_t n = m.rows();
  // S (I - M) = S - S^T = e J
  RationalMatrix a = convert<Rational>(IntMatrix::identity(n)) - convert<Rational>(m);
  if (determinant(IntMatrix::identity(n) - m) == 0)
    throw SeifertSolveError("det(M - I) = 0: monodromy has eigenvalue 1");
  RationalMatrix rhs = convert<Rational>(j);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) rhs(r, c) *= seifert_form_sign;
  RationalMatrix x = solve_right(a, rhs);
  SeifertMatrix s(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& v = x(r, c);
      if (denominator(v) != 1) throw SeifertSolveError("Seifert solution is not integral");
      s(r, c) = static_cast<std::int64_t>(numerator(v));
    }
  if (s.transpose() != checked_product(s, m)) throw SeifertSolveError("S^T = S M fails");
  return s;
}

inline SeifertMatrix seifert_from_monodromy(const SymplecticMatrix& m, const ChainSurface& surface) {
  return seifert_from_monodromy(m, surface.form());
}

// ---------------------------------------------------------------------------
// Alexander module over Q[t]

/// Nontrivial invariant factors (monic, in divisibility order) of tI - M over
/// Q[t], by Smith reduction with polynomial division.
inline std::vector<RationalPoly> alexander_module_invariants(const SymplecticMatrix& m) {
  if (!m.square()) throw std::invalid_argument("module presentation must be square");
  const std::size_t n = m.rows();
  Matrix<RationalPoly> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = RationalPoly(Rational(-m(i, j)));
      if (i == j) a(i, j) += RationalPoly::t();
    }

  auto swap_rows = [&](std::size_t r1, std::size_t r2) {
    for (std::size_t c = 0; c < n; ++c) std::swap(a(r1, c), a(r2, c));
  };
  auto swap_cols = [&](std::size_t c1, std::size_t c2) {
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, c1), a(r, c2));
  };

  std::vector<RationalPoly> diag;
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      // smallest-degree nonzero entry of the trailing block to the pivot
      std::size_t pr = n, pc = n;
      for (std::size_t r = k; r < n; ++r)
        for (std::size_t c = k; c < n; ++c) {
          if (a(r, c).is_zero()) continue;
          if (pr == n || a(r, c).high() < a(pr, pc).high()) {
            pr = r;
            pc = c;
          }
        }
      if (pr == n) break;
      swap_rows(k, pr);
      swap_cols(k, pc);
      bool clean = true;
      for (std::size_t r = k + 1; r < n; ++r) {
        if (a(r, k).is_zero()) continue;
        auto [q, rem] = divmod(a(r, k), a(k, k));
        for (std::size_t c = k; c < n; ++c) a(r, c) -= q * a(k, c);
        if (!rem.is_zero()) clean = false;
      }
      for (std::size_t c = k + 1; c < n; ++c) {
        if (a(k, c).is_zero()) continue;
        auto [q, rem] = divmod(a(k, c), a(k, k));
        for (std::size_t r = k; r < n; ++r) a(r, c) -= q * a(r, k);
        if (!rem.is_zero()) clean = false;
      }
      if (!clean) continue;
      // pivot must divide the whole trailing block
      std::size_t bad_row = n;
      for (std::size_t r = k + 1; r < n && bad_row == n; ++r)
        for (std::size_t c = k + 1; c < n; ++c)
          if (!divmod(a(r, c), a(k, k)).second.is_zero()) {
            bad_row = r;
            break;
          }
      if (bad_row == n) break;
      for (std::size_t c = k; c < n; ++c) a(k, c) += a(bad_row, c);
    }
    if (a(k, k).is_zero()) {
      diag.emplace_back();
    } else {
      diag.push_back(make_monic(a(k, k)));
    }
  }
  std::vector<RationalPoly> out;
  for (auto& d : diag)
    if (d.is_zero() || d.high() > 0) out.push_back(d);
  return out;
}

}  // namespace fibknot
