#pragma once

// Thurston-Veech certification for words in two multitwists.
//
// For multicurves A, B with intersection matrix N and mu the Perron root of
// N N^T, the multitwists act through
//   T_A -> [[1, -s], [0, 1]],   T_B -> [[1, 0], [s, 1]],   s = sqrt(mu).
// A word whose image has |trace| > 2 is pseudo-Anosov.
//
// Matrix entries live in Z[mu][s] / (s^2 - mu), so traces are exact; mu is
// enclosed by Sturm-sequence bisection on the integer characteristic
// polynomial of N N^T.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibknot/laurent.hpp"
#include "fibknot/matrix.hpp"

namespace fibknot {

// ---------------------------------------------------------------------------
// Multicurves

struct MulticurvePair {
  IntMatrix intersections;  // |A| x |B|, nonnegative
  bool punctured = true;

  std::size_t a_count() const { return intersections.rows(); }
  std::size_t b_count() const { return intersections.cols(); }
};

inline void validate(const MulticurvePair& p) {
  for (auto v : p.intersections.data())
    if (v < 0) throw std::invalid_argument("intersection numbers must be nonnegative");
}

/// The chain a_1..a_{2g}: A = even-index curves, B = odd-index curves,
/// one intersection point between consecutive curves.
inline MulticurvePair chain_pair(int genus, bool punctured) {
  if (genus < 1) throw std::invalid_argument("chain genus must be >= 1");
  IntMatrix n(genus, genus);
  for (int a = 0; a < genus; ++a) {
    const int ia = 2 * (a + 1);  // curve index
    for (int b = 0; b < genus; ++b) {
      const int ib = 2 * b + 1;
      if (std::abs(ia - ib) == 1) n(a, b) = 1;
    }
  }
  return {n, punctured};
}

/// Whether the union of the curves is connected.
inline bool curves_connected(const MulticurvePair& p) {
  const std::size_t na = p.a_count(), nb = p.b_count();
  if (na + nb == 0) return false;
  std::vector<std::size_t> parent(na + nb);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b)
      if (p.intersections(a, b) != 0) parent[find(a)] = find(na + b);
  const std::size_t root = find(0);
  for (std::size_t x = 1; x < na + nb; ++x)
    if (find(x) != root) return false;
  return true;
}

/// chi(surface) - chi(union of curves), the Euler characteristic of the
/// complement.  The curve graph has one vertex per intersection point and
/// each curve with k > 0 points contributes k edges.
inline int complement_euler(const MulticurvePair& p, int genus) {
  std::int64_t vertices = 0, edges = 0;
  std::vector<std::int64_t> a_points(p.a_count(), 0), b_points(p.b_count(), 0);
  for (std::size_t a = 0; a < p.a_count(); ++a)
    for (std::size_t b = 0; b < p.b_count(); ++b) {
      vertices += p.intersections(a, b);
      a_points[a] += p.intersections(a, b);
      b_points[b] += p.intersections(a, b);
    }
  for (auto k : a_points) edges += k > 0 ? k : 0;
  for (auto k : b_points) edges += k > 0 ? k : 0;
  // a curve missing every other curve is a circle: chi 0, adds nothing
  const std::int64_t surface_chi = p.punctured ? 1 - 2 * genus : 2 - 2 * genus;
  return static_cast<int>(surface_chi - (vertices - edges));
}

inline int complement_euler(int genus, bool punctured) {
  return complement_euler(chain_pair(genus, punctured), genus);
}

// ---------------------------------------------------------------------------
// Perron root enclosure

struct Enclosure {
  Rational lo;
  Rational hi;
  double midpoint() const { return static_cast<double>((lo + hi) / 2); }
  double width() const { return static_cast<double>(hi - lo); }
  bool contains(double x) const { return Rational(x) >= lo && Rational(x) <= hi; }
};

namespace pa_detail {

inline std::vector<RationalPoly> sturm_chain(const RationalPoly& p) {
  std::vector<RationalPoly> chain{p};
  // derivative
  std::vector<Rational> d;
  for (int e = 1; e <= p.high(); ++e) d.push_back(p.coeff(e) * e);
  chain.emplace_back(0, d);
  while (!chain.back().is_zero()) {
    auto rem = divmod(chain[chain.size() - 2], chain.back()).second;
    if (rem.is_zero()) break;
    chain.push_back(-rem);
  }
  return chain;
}

inline int sign_changes(const std::vector<RationalPoly>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& q : chain) {
    Rational v = q.evaluate(x);
    int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace pa_detail

/// Largest real root of a polynomial with at least one real root, enclosed to
/// the requested width.
inline Enclosure largest_real_root(const LaurentPoly& poly, const Rational& width = Rational(1, 1000000000000LL)) {
  if (poly.low() < 0 || poly.high() < 1) throw std::invalid_argument("need a nonconstant polynomial");
  RationalPoly p = to_rational(poly);
  // square-free part keeps the Sturm count exact at multiple roots
  RationalPoly dp;
  {
    std::vector<Rational> d;
    for (int e = 1; e <= p.high(); ++e) d.push_back(p.coeff(e) * e);
    dp = RationalPoly(0, d);
  }
  RationalPoly g = poly_gcd(p, dp);
  RationalPoly sf = g.high() > 0 ? divmod(p, g).first : p;
  const auto chain = pa_detail::sturm_chain(sf);
  // Cauchy bound
  Rational bound = 0;
  for (int e = 0; e < sf.high(); ++e) {
    Rational r = abs(sf.coeff(e) / sf.leading());
    if (r > bound) bound = r;
  }
  Rational hi = bound + 1, lo = -hi;
  const int at_inf = pa_detail::sign_changes(chain, hi);
  if (pa_detail::sign_changes(chain, lo) == at_inf) throw std::domain_error("polynomial has no real root");
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    if (pa_detail::sign_changes(chain, mid) > at_inf)
      lo = mid;  // a root lies above mid
    else
      hi = mid;
  }
  return {lo, hi};
}

/// Characteristic polynomial of N N^T.
inline LaurentPoly gram_characteristic_polynomial(const IntMatrix& n) {
  return characteristic_polynomial(checked_product(n, n.transpose()));
}

/// Perron-Frobenius root of N N^T.
inline Enclosure mu(const IntMatrix& n) {
  bool nonzero = std::any_of(n.data().begin(), n.data().end(), [](std::int64_t v) { return v != 0; });
  if (!nonzero) throw std::invalid_argument("intersection matrix is zero");
  return largest_real_root(gram_characteristic_polynomial(n));
}

// ---------------------------------------------------------------------------
// Exact 2x2 representation

/// even(mu) + odd(mu) * s with s^2 = mu.
struct SqrtMuElement {
  LaurentPoly even;
  LaurentPoly odd;

  static SqrtMuElement constant(int c) { return {LaurentPoly(c), LaurentPoly()}; }
  static SqrtMuElement s(int c) { return {LaurentPoly(), LaurentPoly(c)}; }

  friend SqrtMuElement operator+(const SqrtMuElement& a, const SqrtMuElement& b) {
    return {a.even + b.even, a.odd + b.odd};
  }
  friend SqrtMuElement operator-(const SqrtMuElement& a, const SqrtMuElement& b) {
    return {a.even - b.even, a.odd - b.odd};
  }
  friend SqrtMuElement operator*(const SqrtMuElement& a, const SqrtMuElement& b) {
    const LaurentPoly mu = LaurentPoly::t();
    return {a.even * b.even + mu * a.odd * b.odd, a.even * b.odd + a.odd * b.even};
  }
  friend bool operator==(const SqrtMuElement& a, const SqrtMuElement& b) {
    return a.even == b.even && a.odd == b.odd;
  }

  std::string to_string() const {
    std::string e = even.to_string("mu");
    if (odd.is_zero()) return e;
    return "(" + e + ") + (" + odd.to_string("mu") + ") s";
  }
};

struct RepMatrix {
  SqrtMuElement a, b, c, d;

  static RepMatrix identity() {
    return {SqrtMuElement::constant(1), SqrtMuElement::constant(0), SqrtMuElement::constant(0),
            SqrtMuElement::constant(1)};
  }
  friend RepMatrix operator*(const RepMatrix& x, const RepMatrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  SqrtMuElement trace() const { return a + d; }
  SqrtMuElement det() const { return a * d - b * c; }
};

enum class Multitwist { A, B };

struct TwistLetter {
  Multitwist curve;
  int power;  // +1 or -1
  friend bool operator==(const TwistLetter&, const TwistLetter&) = default;
};

using TwistWord2 = std::vector<TwistLetter>;

/// Tokens "A", "B", "A^-1", "B^-1"; lowercase "a", "b" are the inverses.
inline TwistWord2 parse_twist_word(const std::string& text) {
  TwistWord2 w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "A") w.push_back({Multitwist::A, 1});
    else if (tok == "B") w.push_back({Multitwist::B, 1});
    else if (tok == "a" || tok == "A^-1") w.push_back({Multitwist::A, -1});
    else if (tok == "b" || tok == "B^-1") w.push_back({Multitwist::B, -1});
    else throw std::invalid_argument("bad twist letter '" + tok + "'");
  }
  return w;
}

inline std::string to_text(const TwistWord2& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += l.curve == Multitwist::A ? "A" : "B";
    if (l.power < 0) out += "^-1";
  }
  return out;
}

inline TwistWord2 inverse(const TwistWord2& w) {
  TwistWord2 r(w.rbegin(), w.rend());
  for (auto& l : r) l.power = -l.power;
  return r;
}

inline RepMatrix represent(const TwistWord2& w) {
  RepMatrix m = RepMatrix::identity();
  for (const auto& l : w) {
    const int p = l.power;
    if (p != 1 && p != -1) throw std::invalid_argument("twist letters have power +-1");
    RepMatrix g = RepMatrix::identity();
    if (l.curve == Multitwist::A)
      g.b = SqrtMuElement::s(-p);
    else
      g.c = SqrtMuElement::s(p);
    m = m * g;
  }
  return m;
}

// Rational interval arithmetic, enough for polynomial enclosures.
struct RationalInterval {
  Rational lo, hi;
  friend RationalInterval operator+(const RationalInterval& x, const RationalInterval& y) {
    return {x.lo + y.lo, x.hi + y.hi};
  }
  friend RationalInterval operator*(const RationalInterval& x, const RationalInterval& y) {
    Rational c[4] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
    return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
  }
};

inline RationalInterval enclose(const LaurentPoly& p, const RationalInterval& x) {
  if (p.low() < 0) throw std::invalid_argument("enclose needs a polynomial");
  RationalInterval acc{0, 0};
  for (int e = p.high(); e >= 0; --e) {
    Rational c(p.coeff(e));
    acc = acc * x + RationalInterval{c, c};
  }
  return acc;
}

/// Rational enclosure of sqrt over a nonnegative interval.
inline RationalInterval enclose_sqrt(const RationalInterval& x) {
  auto down = [](const Rational& v) {
    Rational r(std::nextafter(std::sqrt(static_cast<double>(v)), 0.0));
    while (r > 0 && r * r > v) r = r * Rational(999999, 1000000);
    return r < 0 ? Rational(0) : r;
  };
  auto up = [](const Rational& v) {
    Rational r(std::nextafter(std::sqrt(static_cast<double>(v)), 1e300));
    while (r * r < v) r = r * Rational(1000001, 1000000);
    return r;
  };
  return {down(x.lo), up(x.hi)};
}

enum class MappingClassType { pseudo_anosov, parabolic, elliptic };

inline std::string to_string(MappingClassType t) {
  switch (t) {
    case MappingClassType::pseudo_anosov: return "pseudoAnosov";
    case MappingClassType::parabolic: return "parabolic";
    case MappingClassType::elliptic: return "elliptic";
  }
  return "?";
}

class Indeterminate : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Classification {
  MappingClassType type;
  SqrtMuElement trace;          // exact, in terms of mu and s
  Enclosure mu;
  RationalInterval trace_range;
  double trace_value = 0;
  double dilatation = 1;        // of the PSL(2,R) image
};

inline constexpr double classification_margin = 1e-9;

inline Classification classify(const TwistWord2& word, const IntMatrix& n) {
  if (word.empty()) throw std::invalid_argument("cannot classify the empty twist word");
  Classification out;
  out.mu = mu(n);
  RepMatrix m = represent(word);
  if (!(m.det() == SqrtMuElement::constant(1))) throw std::logic_error("representation left SL(2)");
  out.trace = m.trace();
  const RationalInterval mu_iv{out.mu.lo, out.mu.hi};
  RationalInterval tr = enclose(out.trace.even, mu_iv);
  if (!out.trace.odd.is_zero()) tr = tr + enclose(out.trace.odd, mu_iv) * enclose_sqrt(mu_iv);
  out.trace_range = tr;
  out.trace_value = static_cast<double>((tr.lo + tr.hi) / 2);

  const bool exact_two = out.trace.odd.is_zero() && out.trace.even.is_constant() &&
                         (out.trace.even == LaurentPoly(2) || out.trace.even == LaurentPoly(-2));
  if (exact_two) {
    out.type = MappingClassType::parabolic;
    return out;
  }
  const Rational margin(classification_margin);
  const Rational abs_lo = tr.lo > 0 ? tr.lo : (tr.hi < 0 ? Rational(-tr.hi) : Rational(0));
  const Rational abs_hi = std::max(abs(tr.lo), abs(tr.hi));
  if (abs_lo > 2 + margin) {
    out.type = MappingClassType::pseudo_anosov;
    const double t = std::abs(out.trace_value);
    out.dilatation = (t + std::sqrt(t * t - 4.0)) / 2.0;
  } else if (abs_hi < 2 - margin) {
    out.type = MappingClassType::elliptic;
  } else {
    throw Indeterminate("|trace| is within the margin of 2: " + std::to_string(out.trace_value));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ribbon graphs

/// An oriented ribbon graph: half-edges 0..2E-1, edge k pairs half-edges
/// (2k, 2k+1), and each vertex lists its half-edges in cyclic order.
struct RibbonGraph {
  std::vector<std::vector<int>> rotation;
  int edge_count = 0;

  int vertex_count() const { return static_cast<int>(rotation.size()); }
};

inline int ribbon_faces(const RibbonGraph& g) {
  const int h = 2 * g.edge_count;
  std::vector<int> next(h, -1);  // successor in the vertex rotation
  for (const auto& cyc : g.rotation) {
    if (cyc.empty()) throw std::invalid_argument("vertex without half-edges");
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int he = cyc[k];
      if (he < 0 || he >= h || next[he] != -1) throw std::invalid_argument("malformed rotation system");
      next[he] = cyc[(k + 1) % cyc.size()];
    }
  }
  if (std::find(next.begin(), next.end(), -1) != next.end())
    throw std::invalid_argument("rotation system misses a half-edge");
  std::vector<bool> seen(h, false);
  int faces = 0;
  for (int s = 0; s < h; ++s) {
    if (seen[s]) continue;
    ++faces;
    for (int x = s; !seen[x]; x = next[x ^ 1]) seen[x] = true;
  }
  return faces;
}

/// The chain graph of a_1..a_{2g}: vertex v_i = a_i cap a_{i+1}.  Bit i of
/// `orientations` picks which of the two transverse cyclic orders is used at
/// v_i.
inline RibbonGraph chain_ribbon_graph(int genus, std::uint64_t orientations) {
  if (genus < 1) throw std::invalid_argument("chain genus must be >= 1");
  const int curves = 2 * genus;
  const int vertices = curves - 1;
  RibbonGraph g;
  g.rotation.assign(vertices, {});
  // Half-edge ends of curve c at vertex v (in, out).  Curve c (0-based) passes
  // through v_{c-1} and v_c when they exist.
  std::vector<std::array<int, 2>> at_left(curves), at_right(curves);  // ends at v_{c-1}, v_c
  int edge = 0;
  for (int c = 0; c < curves; ++c) {
    const bool left = c >= 1, right = c + 1 <= vertices;
    if (left && right) {
      // two edges between v_{c-1} and v_c
      const int e1 = edge++, e2 = edge++;
      at_left[c] = {2 * e1, 2 * e2 + 1};
      at_right[c] = {2 * e1 + 1, 2 * e2};
    } else {
      // a loop at the single vertex
      const int e = edge++;
      (left ? at_left[c] : at_right[c]) = {2 * e, 2 * e + 1};
    }
  }
  g.edge_count = edge;
  for (int v = 0; v < vertices; ++v) {
    const auto& p = at_right[v];     // curve v
    const auto& q = at_left[v + 1];  // curve v+1
    if ((orientations >> v) & 1U)
      g.rotation[v] = {p[0], q[0], p[1], q[1]};
    else
      g.rotation[v] = {p[0], q[1], p[1], q[0]};
  }
  return g;
}

struct RotationSearch {
  std::optional<std::uint64_t> orientations;  // first assignment with one face
  int assignments_tried = 0;
};

/// Searches the transverse rotation choices for an embedding of the chain
/// graph whose thickening has a single boundary circle.
inline RotationSearch search_chain_rotation(int genus) {
  const int vertices = 2 * genus - 1;
  if (vertices > 20) throw std::invalid_argument("rotation search limited to genus <= 10");
  RotationSearch out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << vertices); ++bits) {
    ++out.assignments_tried;
    if (ribbon_faces(chain_ribbon_graph(genus, bits)) == 1) {
      out.orientations = bits;
      break;
    }
  }
  return out;
}

}  // namespace fibknot
