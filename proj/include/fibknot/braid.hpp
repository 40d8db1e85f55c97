#pragma once

// Braid words, the knot families built from them, closure combinatorics and
// a greedy Markov destabilization certifier for unknotted closures.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fibknot {

/// sigma_i^{+1} or sigma_i^{-1}, encoded as the signed integer +i / -i.
class BraidLetter {
 public:
  constexpr BraidLetter() = default;
  constexpr explicit BraidLetter(int encoded) : value_(encoded) {
    if (encoded == 0) throw std::invalid_argument("braid letter 0 is not a generator");
  }
  constexpr BraidLetter(int index, int sign) : value_(sign > 0 ? index : -index) {
    if (index <= 0 || (sign != 1 && sign != -1)) throw std::invalid_argument("bad braid letter");
  }

  constexpr int index() const { return value_ < 0 ? -value_ : value_; }
  constexpr int sign() const { return value_ < 0 ? -1 : 1; }
  constexpr int encoded() const { return value_; }
  constexpr BraidLetter inverse() const { return BraidLetter(-value_); }

  friend constexpr bool operator==(BraidLetter a, BraidLetter b) { return a.value_ == b.value_; }
  friend constexpr bool operator!=(BraidLetter a, BraidLetter b) { return a.value_ != b.value_; }

 private:
  int value_ = 1;
};

class StrandMismatch : public std::invalid_argument {
 public:
  StrandMismatch(int a, int b)
      : std::invalid_argument("strand count mismatch: " + std::to_string(a) + " vs " +
                              std::to_string(b)) {}
};

/// A word in the half-twist generators of B_n.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands) : strands_(strands) { validate(); }
  BraidWord(int strands, std::vector<BraidLetter> letters)
      : strands_(strands), letters_(std::move(letters)) {
    validate();
  }
  /// Letters given in the signed-integer encoding.
  BraidWord(int strands, std::initializer_list<int> encoded) : strands_(strands) {
    letters_.reserve(encoded.size());
    for (int e : encoded) letters_.emplace_back(e);
    validate();
  }
  static BraidWord from_encoded(int strands, const std::vector<int>& encoded) {
    std::vector<BraidLetter> ls;
    ls.reserve(encoded.size());
    for (int e : encoded) ls.emplace_back(e);
    return BraidWord(strands, std::move(ls));
  }

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  std::vector<int> encoded() const {
    std::vector<int> out;
    out.reserve(letters_.size());
    for (auto l : letters_) out.push_back(l.encoded());
    return out;
  }

  /// Number of letters with the given generator index.
  int occurrences(int index) const {
    return static_cast<int>(std::count_if(letters_.begin(), letters_.end(),
                                          [index](BraidLetter l) { return l.index() == index; }));
  }

  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.strands_ == b.strands_ && a.letters_ == b.letters_;
  }
  friend bool operator!=(const BraidWord& a, const BraidWord& b) { return !(a == b); }

 private:
  void validate() const {
    if (strands_ < 1) throw std::invalid_argument("a braid needs at least one strand");
    for (auto l : letters_)
      if (l.index() > strands_ - 1)
        throw std::invalid_argument("generator sigma_" + std::to_string(l.index()) +
                                    " out of range for " + std::to_string(strands_) + " strands");
  }

  int strands_ = 1;
  std::vector<BraidLetter> letters_;
};

// ---------------------------------------------------------------------------
// Text format: "<strands>: <letter> <letter> ...", letters as signed integers.

inline std::string to_text(const BraidWord& w) {
  std::ostringstream os;
  os << w.strands() << ":";
  for (auto l : w.letters()) os << ' ' << l.encoded();
  return os.str();
}

inline BraidWord parse_braid(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("braid text needs a '<strands>:' header");
  std::istringstream head{std::string(text.substr(0, colon))};
  int strands = 0;
  if (!(head >> strands)) throw std::invalid_argument("malformed strand count in braid text");
  std::string extra;
  if (head >> extra) throw std::invalid_argument("malformed braid header");
  std::istringstream body{std::string(text.substr(colon + 1))};
  std::vector<int> enc;
  std::string tok;
  while (body >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad braid letter '" + tok + "'");
    }
    if (used != tok.size() || v == 0) throw std::invalid_argument("bad braid letter '" + tok + "'");
    enc.push_back(v);
  }
  return BraidWord::from_encoded(strands, enc);
}

// ---------------------------------------------------------------------------
// Word arithmetic

inline BraidWord compose(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw StrandMismatch(u.strands(), v.strands());
  std::vector<BraidLetter> ls = u.letters();
  ls.insert(ls.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.strands(), std::move(ls));
}

inline BraidWord compose(std::initializer_list<BraidWord> parts) {
  if (parts.size() == 0) throw std::invalid_argument("compose needs at least one word");
  BraidWord out(parts.begin()->strands());
  for (const auto& p : parts) out = compose(out, p);
  return out;
}

inline BraidWord inverse(const BraidWord& w) {
  std::vector<BraidLetter> ls;
  ls.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) ls.push_back(it->inverse());
  return BraidWord(w.strands(), std::move(ls));
}

/// w^k for any integer k.
inline BraidWord power(const BraidWord& w, int k) {
  BraidWord base = k < 0 ? inverse(w) : w;
  BraidWord out(w.strands());
  for (int i = 0; i < std::abs(k); ++i) out = compose(out, base);
  return out;
}

/// Same letters viewed on more strands.
inline BraidWord widen(const BraidWord& w, int strands) {
  if (strands < w.strands()) throw std::invalid_argument("widen cannot drop strands");
  return BraidWord(strands, w.letters());
}

/// Cancels adjacent inverse pairs until none remain.
inline BraidWord free_reduce(const BraidWord& w) {
  std::vector<BraidLetter> stack;
  stack.reserve(w.length());
  for (auto l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return BraidWord(w.strands(), std::move(stack));
}

inline int exponent_sum(const BraidWord& w) {
  int s = 0;
  for (auto l : w.letters()) s += l.sign();
  return s;
}

// ---------------------------------------------------------------------------
// Permutations

/// A permutation of {0..n-1}; images()[k] is where k goes.  The permutation of
/// a braid sends each strand's top position to its bottom position.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n) : images_(n) { std::iota(images_.begin(), images_.end(), 0); }
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 0 || v >= size() || seen[v]) throw std::invalid_argument("not a permutation");
      seen[v] = true;
    }
  }

  static Permutation transposition(int n, int i) {
    Permutation p(n);
    std::swap(p.images_[i], p.images_[i + 1]);
    return p;
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator[](int k) const { return images_[k]; }
  const std::vector<int>& images() const { return images_; }

  /// "first a, then b"
  friend Permutation then(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
    Permutation r(a.size());
    for (int k = 0; k < a.size(); ++k) r.images_[k] = b.images_[a.images_[k]];
    return r;
  }

  Permutation inverse() const {
    Permutation r(size());
    for (int k = 0; k < size(); ++k) r.images_[images_[k]] = k;
    return r;
  }

  /// Swaps the values at positions i, i+1 of the image (right multiplication
  /// by the adjacent transposition).
  void swap_after(int i) {
    for (auto& v : images_) {
      if (v == i)
        v = i + 1;
      else if (v == i + 1)
        v = i;
    }
  }

  int cycle_count() const {
    std::vector<bool> seen(images_.size(), false);
    int cycles = 0;
    for (int s = 0; s < size(); ++s) {
      if (seen[s]) continue;
      ++cycles;
      for (int k = s; !seen[k]; k = images_[k]) seen[k] = true;
    }
    return cycles;
  }

  /// Cycle lengths in decreasing order.
  std::vector<int> cycle_type() const {
    std::vector<bool> seen(images_.size(), false);
    std::vector<int> out;
    for (int s = 0; s < size(); ++s) {
      if (seen[s]) continue;
      int len = 0;
      for (int k = s; !seen[k]; k = images_[k]) {
        seen[k] = true;
        ++len;
      }
      out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
  }

  bool is_identity() const {
    for (int k = 0; k < size(); ++k)
      if (images_[k] != k) return false;
    return true;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

 private:
  std::vector<int> images_;
};

inline Permutation underlying_permutation(const BraidWord& w) {
  Permutation p(w.strands());
  for (auto l : w.letters()) p.swap_after(l.index() - 1);
  return p;
}

inline int closure_components(const BraidWord& w) { return underlying_permutation(w).cycle_count(); }

// ---------------------------------------------------------------------------
// Families

enum class Variant { original, enhanced };

inline std::string to_string(Variant v) { return v == Variant::original ? "original" : "enhanced"; }

inline Variant parse_variant(std::string_view s) {
  if (s == "original") return Variant::original;
  if (s == "enhanced") return Variant::enhanced;
  throw std::invalid_argument("unknown variant '" + std::string(s) + "'");
}

struct FamilySpec {
  int genus = 2;
  int power = 0;
  Variant variant = Variant::original;
};

/// Supplies the pseudo-Anosov factor where the built-in one is unavailable
/// (enhanced with g != 2, original with g = 1).  Must return a word on 2g+1
/// strands that avoids sigma_1.
using PhiRule = std::function<BraidWord(int genus)>;

struct Family {
  BraidWord pi;
  BraidWord phi;
  BraidWord beta;
};

/// The enhanced factor for genus 2: a product of two conjugates of the squared
/// full twist on strands 2-4.
inline BraidWord enhanced_phi_genus2() {
  const std::vector<int> twist_sq = {2, 3, 2, 3, 2, 3, 2, 3, 2, 3, 2, 3};
  std::vector<int> enc = {3, 4, 4};
  enc.insert(enc.end(), twist_sq.begin(), twist_sq.end());
  enc.insert(enc.end(), {-4, -4, -3, -3, -4, -4});
  enc.insert(enc.end(), twist_sq.begin(), twist_sq.end());
  enc.insert(enc.end(), {4, 4, 3});
  return BraidWord::from_encoded(5, enc);
}

/// Extension rule: the genus-2 word placed verbatim on strands 2-5 of B_{2g+1}
/// for g >= 2, and the empty word for g = 1 (there is no odd strand set of size
/// > 1 among the last two strands).  Not claimed pseudo-Anosov for g > 2.
inline BraidWord embedded_genus2_phi(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be positive");
  if (genus == 1) return BraidWord(3);
  return widen(enhanced_phi_genus2(), 2 * genus + 1);
}

/// Genus-1 stand-in for the original factor: sigma_2 sigma_3^-1 with the
/// letter that does not fit in B_3 dropped.  For g >= 2 the built-in factor is
/// always used.
inline BraidWord truncated_original_phi(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be positive");
  if (genus == 1) return BraidWord(3, {2});
  return BraidWord(2 * genus + 1, {2, -3});
}

/// Rule used by sweeps when the caller supplies none: fills in exactly the
/// cases the built-in definitions leave open.
inline PhiRule default_rule(Variant v) {
  return v == Variant::original ? PhiRule(truncated_original_phi) : PhiRule(embedded_genus2_phi);
}

inline void validate(const FamilySpec& spec) {
  if (spec.genus < 1) throw std::invalid_argument("genus must be >= 1");
  if (spec.power < 0) throw std::invalid_argument("power must be >= 0");
}

inline Family build_family(const FamilySpec& spec, const PhiRule& rule = {}) {
  validate(spec);
  const int g = spec.genus;
  const int n = 2 * g + 1;
  Family f;
  std::vector<int> pi;
  for (int i = 2 * g; i >= 2; --i) {
    bool negative = spec.variant == Variant::original && i % 2 == 1;
    pi.push_back(negative ? -i : i);
  }
  f.pi = BraidWord::from_encoded(n, pi);

  int pivot = spec.variant == Variant::original ? -1 : 1;
  auto from_rule = [&]() {
    BraidWord phi = rule(g);
    if (phi.strands() != n) throw StrandMismatch(phi.strands(), n);
    if (phi.occurrences(1) != 0) throw std::invalid_argument("factor rule must avoid sigma_1");
    return phi;
  };
  if (spec.variant == Variant::original) {
    if (n >= 4) {
      f.phi = BraidWord(n, {2, -3});
    } else if (rule) {
      f.phi = from_rule();
    } else {
      if (spec.power > 0)
        throw std::invalid_argument("the original pseudo-Anosov factor sigma_2 sigma_3^-1 needs genus >= 2");
      f.phi = BraidWord(n);
    }
  } else if (g == 2 && !rule) {
    f.phi = enhanced_phi_genus2();
  } else if (rule) {
    f.phi = from_rule();
  } else {
    throw std::invalid_argument("enhanced family for genus " + std::to_string(g) +
                                " needs a supplied factor rule");
  }
  BraidWord phin = power(f.phi, spec.power);
  f.beta = compose({f.pi, phin, BraidWord(n, {pivot}), inverse(phin)});
  return f;
}

// ---------------------------------------------------------------------------
// Greedy destabilization

enum class MoveKind {
  free_reduce,     // cancel adjacent inverse pairs
  cyclic_reduce,   // conjugate away a first/last inverse pair
  rotate,          // conjugate the first letter to the end
  destab_bottom,   // remove the unique sigma_1^{+-1}, delete strand 1
  destab_top,      // remove the unique sigma_{n-1}^{+-1}, delete strand n
};

inline std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::free_reduce: return "free-reduce";
    case MoveKind::cyclic_reduce: return "cyclic-reduce";
    case MoveKind::rotate: return "rotate";
    case MoveKind::destab_bottom: return "destab-bottom";
    case MoveKind::destab_top: return "destab-top";
  }
  return "?";
}

struct Move {
  MoveKind kind;
  int position = -1;  // letter position for destabilizations
};

struct DestabilizationResult {
  bool unknot = false;        // certified
  BraidWord result;           // final (or stuck) word
  std::vector<Move> certificate;
};

/// Applies one certificate move, checking that it is a legal Markov move or
/// reduction.  Throws std::logic_error on an illegal move.
inline BraidWord apply_move(const BraidWord& w, const Move& m) {
  const auto& ls = w.letters();
  switch (m.kind) {
    case MoveKind::free_reduce: {
      BraidWord r = free_reduce(w);
      if (r.length() == w.length()) throw std::logic_error("free reduction made no progress");
      return r;
    }
    case MoveKind::cyclic_reduce: {
      if (ls.size() < 2 || ls.front() != ls.back().inverse())
        throw std::logic_error("cyclic reduction needs inverse end letters");
      return BraidWord(w.strands(), std::vector<BraidLetter>(ls.begin() + 1, ls.end() - 1));
    }
    case MoveKind::rotate: {
      if (ls.empty()) throw std::logic_error("cannot rotate the empty word");
      std::vector<BraidLetter> r(ls.begin() + 1, ls.end());
      r.push_back(ls.front());
      return BraidWord(w.strands(), std::move(r));
    }
    case MoveKind::destab_bottom:
    case MoveKind::destab_top: {
      bool bottom = m.kind == MoveKind::destab_bottom;
      int idx = bottom ? 1 : w.strands() - 1;
      if (w.strands() < 2 || m.position < 0 || m.position >= static_cast<int>(ls.size()) ||
          ls[m.position].index() != idx || w.occurrences(idx) != 1)
        throw std::logic_error("illegal destabilization");
      std::vector<BraidLetter> r;
      r.reserve(ls.size() - 1);
      for (int k = 0; k < static_cast<int>(ls.size()); ++k) {
        if (k == m.position) continue;
        r.push_back(bottom ? BraidLetter(ls[k].index() - 1, ls[k].sign()) : ls[k]);
      }
      return BraidWord(w.strands() - 1, std::move(r));
    }
  }
  throw std::logic_error("unknown move");
}

/// Re-applies a certificate; returns the final word.
inline BraidWord replay(BraidWord w, const std::vector<Move>& certificate) {
  for (const auto& m : certificate) w = apply_move(w, m);
  return w;
}

/// Sound but incomplete unknot certifier.  Move priority: reduction (free,
/// then cyclic), bottom destabilization, top destabilization, rotation.  At
/// most |w| consecutive rotations are tried before giving up.
inline DestabilizationResult destabilize_greedy(const BraidWord& input) {
  if (closure_components(input) != 1)
    throw std::invalid_argument("destabilization certifier needs a knot closure");
  DestabilizationResult out;
  BraidWord w = input;
  std::size_t rotations = 0;
  auto record = [&](Move m) {
    w = apply_move(w, m);
    out.certificate.push_back(m);
  };
  auto unique_position = [&](int idx) {
    int pos = -1;
    for (int k = 0; k < static_cast<int>(w.length()); ++k) {
      if (w.letters()[k].index() != idx) continue;
      if (pos >= 0) return -1;
      pos = k;
    }
    return pos;
  };
  while (!(w.strands() == 1 && w.empty())) {
    if (free_reduce(w).length() != w.length()) {
      record({MoveKind::free_reduce});
      rotations = 0;
      continue;
    }
    const auto& ls = w.letters();
    if (ls.size() >= 2 && ls.front() == ls.back().inverse()) {
      record({MoveKind::cyclic_reduce});
      rotations = 0;
      continue;
    }
    if (w.strands() >= 2) {
      if (int p = unique_position(1); p >= 0) {
        record({MoveKind::destab_bottom, p});
        rotations = 0;
        continue;
      }
      if (int p = unique_position(w.strands() - 1); p >= 0) {
        record({MoveKind::destab_top, p});
        rotations = 0;
        continue;
      }
    }
    if (w.empty() || rotations >= w.length()) break;
    record({MoveKind::rotate});
    ++rotations;
  }
  out.unknot = w.strands() == 1 && w.empty();
  out.result = w;
  if (!out.unknot) {
    // Drop the trailing fruitless rotations so the stuck word is the one the
    // last productive move produced.
    while (!out.certificate.empty() && out.certificate.back().kind == MoveKind::rotate)
      out.certificate.pop_back();
    out.result = replay(input, out.certificate);
  }
  return out;
}

}  // namespace fibknot
