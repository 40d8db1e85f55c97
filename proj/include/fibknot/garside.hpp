#pragma once

// Left-greedy (Garside) normal form in B_n.  Simple elements are positive
// permutation braids, stored as their permutations.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibknot/braid.hpp"

namespace fibknot {

namespace garside {

inline Permutation delta(int n) {
  std::vector<int> img(n);
  for (int k = 0; k < n; ++k) img[k] = n - 1 - k;
  return Permutation(std::move(img));
}

/// Conjugation by Delta: sigma_i <-> sigma_{n-i}.
inline Permutation flip(const Permutation& p) {
  const int n = p.size();
  std::vector<int> img(n);
  for (int k = 0; k < n; ++k) img[k] = n - 1 - p[n - 1 - k];
  return Permutation(std::move(img));
}

/// i (0-based) is in the starting set iff the simple element has sigma_{i+1}
/// as a left divisor.
inline bool starts_with(const Permutation& p, int i) { return p[i] > p[i + 1]; }

inline bool finishes_with(const Permutation& p, int i) {
  Permutation inv = p.inverse();
  return inv[i] > inv[i + 1];
}

inline std::vector<int> starting_set(const Permutation& p) {
  std::vector<int> s;
  for (int i = 0; i + 1 < p.size(); ++i)
    if (starts_with(p, i)) s.push_back(i);
  return s;
}

inline std::vector<int> finishing_set(const Permutation& p) {
  Permutation inv = p.inverse();
  std::vector<int> s;
  for (int i = 0; i + 1 < p.size(); ++i)
    if (inv[i] > inv[i + 1]) s.push_back(i);
  return s;
}

/// Number of crossings of the permutation braid.
inline int crossing_length(const Permutation& p) {
  int inv = 0;
  for (int a = 0; a < p.size(); ++a)
    for (int b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) ++inv;
  return inv;
}

/// Canonical positive word: repeatedly peel the smallest left divisor.
inline BraidWord simple_word(const Permutation& p) {
  std::vector<BraidLetter> out;
  Permutation cur = p;
  const int n = p.size();
  while (!cur.is_identity()) {
    int i = 0;
    while (!starts_with(cur, i)) ++i;
    out.emplace_back(i + 1, 1);
    cur = then(Permutation::transposition(n, i), cur);
  }
  return BraidWord(n, std::move(out));
}

/// Makes (a, b) left-weighted in place; returns whether anything moved.
inline bool left_weight(Permutation& a, Permutation& b) {
  bool changed = false;
  const int n = a.size();
  for (;;) {
    Permutation ainv = a.inverse();
    int found = -1;
    for (int i = 0; i + 1 < n; ++i)
      if (b[i] > b[i + 1] && !(ainv[i] > ainv[i + 1])) {
        found = i;
        break;
      }
    if (found < 0) return changed;
    Permutation s = Permutation::transposition(n, found);
    a = then(a, s);
    b = then(s, b);
    changed = true;
  }
}

}  // namespace garside

struct NormalForm {
  int strands = 1;
  int infimum = 0;
  std::vector<Permutation> factors;

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.strands == b.strands && a.infimum == b.infimum && a.factors == b.factors;
  }
  friend bool operator!=(const NormalForm& a, const NormalForm& b) { return !(a == b); }

  int supremum() const { return infimum + static_cast<int>(factors.size()); }
};

inline NormalForm normal_form(const BraidWord& w) {
  const int n = w.strands();
  NormalForm nf;
  nf.strands = n;
  if (n == 1) return nf;

  const Permutation del = garside::delta(n);
  // w = Delta^{-m} F_1 ... F_r.  Each sigma_i^{-1} becomes Delta^{-1} (Delta sigma_i^{-1});
  // the Delta^{-1} is pulled left, flipping every factor already placed.
  struct Pending {
    Permutation p;
    int negatives_before;
  };
  std::vector<Pending> raw;
  int m = 0;
  for (auto l : w.letters()) {
    Permutation s = Permutation::transposition(n, l.index() - 1);
    if (l.sign() > 0) {
      raw.push_back({s, m});
    } else {
      ++m;
      raw.push_back({then(del, s), m});
    }
  }
  std::vector<Permutation> factors;
  factors.reserve(raw.size());
  for (auto& f : raw) {
    Permutation p = ((m - f.negatives_before) % 2) ? garside::flip(f.p) : f.p;
    // Insert, then restore left-weightedness from the right end backwards.
    factors.push_back(std::move(p));
    for (std::size_t k = factors.size() - 1; k > 0; --k)
      if (!garside::left_weight(factors[k - 1], factors[k])) break;
  }
  int inf = -m;
  std::size_t lead = 0;
  while (lead < factors.size() && factors[lead] == del) ++lead;
  inf += static_cast<int>(lead);
  std::size_t end = factors.size();
  while (end > lead && factors[end - 1].is_identity()) --end;
  nf.infimum = inf;
  nf.factors.assign(factors.begin() + lead, factors.begin() + end);
  return nf;
}

inline BraidWord half_twist(int n) {
  return garside::simple_word(garside::delta(n));
}

/// Delta^2, generator of the centre of B_n.
inline BraidWord full_twist(int n) {
  if (n < 2) throw std::invalid_argument("full twist needs at least two strands");
  return power(half_twist(n), 2);
}

/// A word realizing the normal form: Delta^inf followed by canonical factor words.
inline BraidWord to_word(const NormalForm& nf) {
  BraidWord out = power(half_twist(nf.strands), nf.infimum);
  for (const auto& f : nf.factors) out = compose(out, garside::simple_word(f));
  return out;
}

inline bool words_equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw StrandMismatch(u.strands(), v.strands());
  return normal_form(compose(u, inverse(v))) == NormalForm{u.strands(), 0, {}};
}

/// (Pi sigma_1)^{2g+1} = Delta^2 in B_{2g+1}, with Pi the all-positive
/// descending product sigma_{2g} ... sigma_2.
inline bool periodic_identity_check(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  const int n = 2 * genus + 1;
  Family f = build_family({genus, 0, Variant::enhanced}, [](int g) { return BraidWord(2 * g + 1); });
  BraidWord periodic = compose(f.pi, BraidWord(n, {1}));
  return words_equal(power(periodic, n), full_twist(n));
}

// ---------------------------------------------------------------------------
// Band generators

/// a_{i,j} = (sigma_{j-1} ... sigma_{i+1}) sigma_i (sigma_{j-1} ... sigma_{i+1})^{-1}
struct BandGenerator {
  int i = 1;
  int j = 2;
  friend bool operator==(const BandGenerator&, const BandGenerator&) = default;
};

using BandWitness = std::vector<BandGenerator>;

inline BraidWord expand_band(const BandGenerator& b, int strands) {
  if (b.i < 1 || b.j <= b.i || b.j > strands)
    throw std::invalid_argument("band generator a_{" + std::to_string(b.i) + "," + std::to_string(b.j) +
                                "} out of range for " + std::to_string(strands) + " strands");
  std::vector<int> conj;
  for (int k = b.j - 1; k > b.i; --k) conj.push_back(k);
  BraidWord c = BraidWord::from_encoded(strands, conj);
  return compose({c, BraidWord(strands, {b.i}), inverse(c)});
}

inline BraidWord expand_witness(const BandWitness& witness, int strands) {
  BraidWord out(strands);
  for (const auto& b : witness) out = compose(out, expand_band(b, strands));
  return out;
}

inline bool verify_band_witness(const BandWitness& witness, const BraidWord& w) {
  return words_equal(expand_witness(witness, w.strands()), w);
}

/// "i,j i,j ..." pairs separated by whitespace.
inline BandWitness parse_witness(const std::string& text) {
  BandWitness out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    auto comma = tok.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("band token '" + tok + "' needs 'i,j'");
    try {
      out.push_back({std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1))});
    } catch (const std::exception&) {
      throw std::invalid_argument("bad band token '" + tok + "'");
    }
  }
  return out;
}

}  // namespace fibknot
