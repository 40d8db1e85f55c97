#pragma once

// Named verifications, parameter sweeps and report serialization.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "fibknot/braid.hpp"
#include "fibknot/cover_lift.hpp"
#include "fibknot/garside.hpp"
#include "fibknot/invariants.hpp"
#include "fibknot/pa_cert.hpp"
#include "fibknot/twobridge.hpp"

namespace fibknot {

using json = nlohmann::ordered_json;

inline constexpr const char* toolkit_version = "1.0.0";
inline constexpr int report_schema_version = 1;

/// Conventions every invariant value in a report is relative to.
inline json conventions() {
  return json{
      {"braid_letters", "signed integers, -i is sigma_i^-1"},
      {"burau", "reduced, right action; sigma_i column i-1 <- t*c[i-2] - t*c[i-1] + c[i]"},
      {"alexander_normalization", "lowest exponent 0, positive constant term"},
      {"brick_signs", "positive bands give negative-definite symmetrization"},
      {"transvection", "sigma_i -> x + <x,a_i> a_i, <a_i,a_(i+1)> = 1"},
      {"seifert_from_monodromy", "S - S^T = -J, S^T = S M"},
      {"continued_fraction", "a1 + 1/(a2 + 1/(... + 1/ak))"},
      {"thurston_veech", "T_A -> [[1,-s],[0,1]], T_B -> [[1,0],[s,1]], s^2 = mu"},
  };
}

inline std::string convention_fingerprint() {
  // FNV-1a over the serialized convention table
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : conventions().dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

// ---------------------------------------------------------------------------
// Check results

enum class Status { verified, refuted, inconclusive, error, not_applicable };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::refuted: return "refuted";
    case Status::inconclusive: return "inconclusive";
    case Status::error: return "error";
    case Status::not_applicable: return "not-applicable";
  }
  return "error";
}

inline Status parse_status(const std::string& s) {
  for (Status x : {Status::verified, Status::refuted, Status::inconclusive, Status::error, Status::not_applicable})
    if (to_string(x) == s) return x;
  throw std::invalid_argument("unknown status '" + s + "'");
}

/// 0 verified, 2 inconclusive, 1 otherwise.
inline int exit_code(Status s) {
  switch (s) {
    case Status::verified: return 0;
    case Status::inconclusive: return 2;
    default: return 1;
  }
}

struct CheckResult {
  std::string name;
  Status status = Status::error;
  std::string message;
  json detail = json::object();
};

class UnknownCheck : public std::invalid_argument {
 public:
  explicit UnknownCheck(const std::string& name) : std::invalid_argument("unknown check '" + name + "'") {}
};

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "unknot",          "alexander-trivial",  "fibre-genus",     "pa",
      "filling",         "periodic-identity",  "band-witness",    "homology-invariance",
      "alexander-module", "twobridge-crosscheck", "growth-proxy"};
  return names;
}

inline bool is_check(const std::string& name) {
  const auto& n = check_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

// ---------------------------------------------------------------------------
// Serialization helpers

inline json coefficient_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(c));
  return json(c.str());
}

inline json polynomial_json(const LaurentPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(coefficient_json(c));
  return json{{"offset", p.low()}, {"coefficients", coeffs}, {"text", p.to_string()}};
}

inline json rational_polynomial_json(const RationalPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
  return json{{"offset", p.low()}, {"coefficients", coeffs}};
}

inline json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

/// Compact "offset:c0,c1,..." form used in CSV output.
inline std::string polynomial_csv(const LaurentPoly& p) {
  std::string out = std::to_string(p.low()) + ":";
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    if (k) out += ',';
    out += p.coefficients()[k].str();
  }
  return out;
}

inline LaurentPoly parse_polynomial_csv(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("polynomial field needs 'offset:coefficients'");
  int low = std::stoi(text.substr(0, colon));
  std::vector<BigInt> coeffs;
  std::string rest = text.substr(colon + 1);
  std::size_t start = 0;
  while (start <= rest.size() && !rest.empty()) {
    auto comma = rest.find(',', start);
    std::string tok = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    coeffs.emplace_back(tok);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return LaurentPoly(low, std::move(coeffs));
}

inline std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

// ---------------------------------------------------------------------------
// Check inputs

/// Everything a check may look at.  Family-based checks use `spec`; the
/// optional fields override it for ad-hoc inputs from the command line.
struct CheckInput {
  FamilySpec spec;
  PhiRule rule;
  std::optional<BraidWord> braid;
  std::optional<BandWitness> witness;
  std::optional<IntMatrix> intersections;
  std::optional<TwistWord2> twist_word;
};

namespace report_detail {

inline std::int64_t max_abs_entry(const IntMatrix& m) {
  std::int64_t best = 0;
  for (auto v : m.data()) best = std::max(best, v < 0 ? -v : v);
  return best;
}

inline CheckResult make(const std::string& name, Status s, std::string message, json detail = json::object()) {
  return {name, s, std::move(message), std::move(detail)};
}

inline CheckResult not_applicable(const std::string& name, const std::string& why) {
  return make(name, Status::not_applicable, why);
}

inline json certificate_json(const std::vector<Move>& moves) {
  json out = json::array();
  for (const auto& m : moves) {
    json e{{"move", to_string(m.kind)}};
    if (m.position >= 0) e["position"] = m.position;
    out.push_back(e);
  }
  return out;
}

inline CheckResult unknot(const CheckInput& in) {
  const BraidWord w = in.braid ? *in.braid : build_family(in.spec, in.rule).beta;
  auto res = destabilize_greedy(w);
  json d{{"braid", to_text(w)}, {"certificate_length", res.certificate.size()}};
  if (!res.unknot) {
    d["stuck_word"] = to_text(res.result);
    return make("unknot", Status::inconclusive, "greedy destabilization got stuck", d);
  }
  if (replay(w, res.certificate) != BraidWord(1))
    return make("unknot", Status::error, "certificate replay did not reach the trivial braid", d);
  d["certificate"] = certificate_json(res.certificate);
  return make("unknot", Status::verified, "closure destabilizes to the trivial 1-strand braid", d);
}

inline CheckResult alexander_trivial(const CheckInput& in) {
  const BraidWord w = in.braid ? *in.braid : build_family(in.spec, in.rule).beta;
  AlexanderPolynomial a = alexander_from_burau(w);
  json d{{"braid", to_text(w)}, {"alexander", polynomial_json(a.poly())}};
  if (a == alexander_of({1})) return make("alexander-trivial", Status::verified, "Burau Alexander polynomial is 1", d);
  return make("alexander-trivial", Status::refuted, "Alexander polynomial " + a.to_string() + " is not 1", d);
}

inline CheckResult fibre_genus(const CheckInput& in) {
  const int g = in.spec.genus;
  auto disk = branched_cover_euler(1, 2 * g + 1);
  auto three = branched_cover_euler(1, 3);
  AlexanderPolynomial a = fibred_alexander(in.spec, in.rule);
  json d{{"cover_euler", disk.cover_euler},
         {"boundary_components", disk.boundary_components},
         {"genus", disk.genus},
         {"three_point_genus", three.genus},
         {"alexander_degree", a.degree()}};
  bool ok = disk.genus == g && disk.boundary_components == 1 && three.genus == 1 &&
            three.boundary_components == 1 && a.degree() == 2 * g;
  return make("fibre-genus", ok ? Status::verified : Status::refuted,
              ok ? "double branched cover of the disk is S_{" + std::to_string(g) + ",1}"
                 : "branched cover genus disagrees with the family genus",
              d);
}

inline CheckResult pa(const CheckInput& in) {
  IntMatrix n;
  TwistWord2 word = parse_twist_word("A B^-1");
  if (in.intersections) {
    n = *in.intersections;
  } else {
    if (in.spec.variant != Variant::original || in.spec.power != 0)
      return not_applicable("pa", "the chain certificate covers the original family at n = 0");
    n = chain_pair(in.spec.genus, true).intersections;
  }
  if (in.twist_word) word = *in.twist_word;
  try {
    Classification c = classify(word, n);
    json d{{"word", to_text(word)},
           {"intersections", matrix_json(n)},
           {"mu", c.mu.midpoint()},
           {"mu_enclosure", json::array({static_cast<double>(c.mu.lo), static_cast<double>(c.mu.hi)})},
           {"trace", c.trace.to_string()},
           {"trace_value", c.trace_value},
           {"type", to_string(c.type)}};
    if (c.type == MappingClassType::pseudo_anosov) {
      d["dilatation"] = c.dilatation;
      return make("pa", Status::verified, "pseudoAnosov, dilatation " + format_double(c.dilatation), d);
    }
    return make("pa", Status::refuted, to_string(c.type), d);
  } catch (const Indeterminate& e) {
    return make("pa", Status::inconclusive, e.what());
  }
}

inline CheckResult filling(const CheckInput& in) {
  const int g = in.spec.genus;
  const MulticurvePair punctured = chain_pair(g, true), closed = chain_pair(g, false);
  const int chi_p = complement_euler(punctured, g), chi_c = complement_euler(closed, g);
  const bool connected = curves_connected(punctured);
  json d{{"complement_euler_punctured", chi_p}, {"complement_euler_closed", chi_c}, {"connected", connected}};
  if (g <= 10) {
    RotationSearch s = search_chain_rotation(g);
    d["rotation_assignments_tried"] = s.assignments_tried;
    if (s.orientations) d["one_face_rotation"] = *s.orientations;
  }
  const bool ok = chi_p == 0 && chi_c == 1 && connected;
  return make("filling", ok ? Status::verified : Status::refuted,
              ok ? "chain fills: complement is an annulus (punctured) and a disk (closed)"
                 : "chain complement has the wrong Euler characteristic",
              d);
}

inline CheckResult periodic_identity(const CheckInput& in) {
  if (in.spec.variant != Variant::enhanced)
    return not_applicable("periodic-identity", "the periodic factor belongs to the enhanced family");
  const bool ok = periodic_identity_check(in.spec.genus);
  json d{{"strands", 2 * in.spec.genus + 1}, {"power", 2 * in.spec.genus + 1}};
  return make("periodic-identity", ok ? Status::verified : Status::refuted,
              ok ? "(Pi sigma_1)^(2g+1) equals the full twist" : "(Pi sigma_1)^(2g+1) differs from the full twist", d);
}

/// Default witness: the bands a_{2g,2g+1}, ..., a_{1,2} for the positive
/// periodic factor Pi sigma_1.
inline CheckResult band_witness(const CheckInput& in) {
  BraidWord w;
  BandWitness wit;
  if (in.braid || in.witness) {
    if (!in.braid || !in.witness) throw std::invalid_argument("band-witness needs both a braid and a witness");
    w = *in.braid;
    wit = *in.witness;
  } else {
    if (in.spec.variant != Variant::enhanced)
      return not_applicable("band-witness", "no band witness is claimed for the original family");
    const int n = 2 * in.spec.genus + 1;
    Family f = build_family(in.spec, in.rule);
    w = compose(f.pi, BraidWord(n, {1}));
    for (int i = n - 1; i >= 1; --i) wit.push_back({i, i + 1});
  }
  json bands = json::array();
  for (const auto& b : wit) bands.push_back(std::to_string(b.i) + "," + std::to_string(b.j));
  json d{{"braid", to_text(w)}, {"witness", bands}};
  const bool ok = verify_band_witness(wit, w);
  return make("band-witness", ok ? Status::verified : Status::refuted,
              ok ? "witness product equals the braid" : "witness product differs from the braid", d);
}

inline CheckResult homology_invariance(const CheckInput& in) {
  if (in.spec.variant != Variant::enhanced)
    return not_applicable("homology-invariance", "invariance in n is claimed for the enhanced family");
  Family f = build_family(in.spec, in.rule);
  const IntMatrix phi = lift_homological(f.phi);
  const IntMatrix here = lift_homological(f.beta);
  const IntMatrix base = lift_homological(build_family({in.spec.genus, 0, Variant::enhanced}, in.rule).beta);
  const bool phi_trivial = phi == IntMatrix::identity(phi.rows());
  json d{{"phi_lift_is_identity", phi_trivial}, {"matches_n0", here == base}, {"monodromy", matrix_json(here)}};
  const bool ok = phi_trivial && here == base;
  return make("homology-invariance", ok ? Status::verified : Status::refuted,
              ok ? "homological monodromy is independent of n" : "homological monodromy depends on n", d);
}

inline CheckResult alexander_module(const CheckInput& in) {
  if (in.spec.variant != Variant::enhanced)
    return not_applicable("alexander-module", "the torus-knot module is claimed for the enhanced family");
  const IntMatrix m = lift_homological(build_family(in.spec, in.rule).beta);
  auto factors = alexander_module_invariants(m);
  json fs = json::array();
  for (const auto& f : factors) fs.push_back(rational_polynomial_json(f));
  // T(2, 2g+1): 1 - t + ... + t^{2g}
  std::vector<Rational> torus;
  for (int k = 0; k <= 2 * in.spec.genus; ++k) torus.emplace_back(k % 2 == 0 ? 1 : -1);
  const bool ok = factors.size() == 1 && factors[0] == RationalPoly(0, torus);
  json d{{"invariant_factors", fs}};
  return make("alexander-module", ok ? Status::verified : Status::refuted,
              ok ? "cyclic module with the torus knot T(2," + std::to_string(2 * in.spec.genus + 1) + ") polynomial"
                 : "module differs from the torus knot module",
              d);
}

inline CheckResult twobridge_crosscheck(const CheckInput& in) {
  if (in.spec.variant != Variant::original || in.spec.power != 0)
    return not_applicable("twobridge-crosscheck", "the two-bridge identification concerns the original family at n = 0");
  CrosscheckResult r = crosscheck_w0_detail(in.spec.genus);
  json d{{"fraction", r.fraction.to_string()},
         {"twobridge_alexander", polynomial_json(r.twobridge.poly())},
         {"monodromy_alexander", polynomial_json(r.monodromy.poly())},
         {"twobridge_determinant", r.twobridge.determinant().str()},
         {"monodromy_determinant", r.monodromy.determinant().str()}};
  return make("twobridge-crosscheck", r.agree ? Status::verified : Status::refuted,
              r.agree ? "[2,...,2] two-bridge polynomial matches the monodromy" : "two-bridge polynomial differs", d);
}

inline CheckResult growth_proxy(const CheckInput& in) {
  if (in.spec.variant != Variant::original || in.spec.power < 2)
    return not_applicable("growth-proxy", "the growth proxy compares consecutive powers n >= 2 of the original family");
  const std::int64_t here = max_abs_entry(lift_homological(build_family(in.spec, in.rule).beta));
  FamilySpec prev_spec = in.spec;
  --prev_spec.power;
  const std::int64_t prev = max_abs_entry(lift_homological(build_family(prev_spec, in.rule).beta));
  json d{{"max_abs_entry", here}, {"previous_max_abs_entry", prev}};
  return make("growth-proxy", here > prev ? Status::verified : Status::refuted,
              "max |entry| " + std::to_string(prev) + " -> " + std::to_string(here) + " (proxy, not a volume)", d);
}

}  // namespace report_detail

/// Runs one named verification.  Failures inside the computation become
/// `error` results; an unknown name throws.
inline CheckResult run_check(const std::string& name, const CheckInput& in) {
  using namespace report_detail;
  if (!is_check(name)) throw UnknownCheck(name);
  try {
    if (name == "unknot") return unknot(in);
    if (name == "alexander-trivial") return alexander_trivial(in);
    if (name == "fibre-genus") return fibre_genus(in);
    if (name == "pa") return pa(in);
    if (name == "filling") return filling(in);
    if (name == "periodic-identity") return periodic_identity(in);
    if (name == "band-witness") return band_witness(in);
    if (name == "homology-invariance") return homology_invariance(in);
    if (name == "alexander-module") return alexander_module(in);
    if (name == "twobridge-crosscheck") return twobridge_crosscheck(in);
    return growth_proxy(in);
  } catch (const std::exception& e) {
    return make(name, Status::error, e.what());
  }
}

inline json to_json(const CheckResult& r) {
  return json{{"name", r.name}, {"status", to_string(r.status)}, {"message", r.message}, {"detail", r.detail}};
}

// ---------------------------------------------------------------------------
// Sweep configuration

enum class ReportFormat { json, csv, table };

inline std::string to_string(ReportFormat f) {
  switch (f) {
    case ReportFormat::json: return "json";
    case ReportFormat::csv: return "csv";
    case ReportFormat::table: return "table";
  }
  return "json";
}

inline ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  if (s == "table") return ReportFormat::table;
  throw std::invalid_argument("unknown format '" + s + "' (json, csv, table)");
}

enum class PhiRuleChoice { fill_gaps, none };

struct SweepConfig {
  std::vector<int> genera;
  std::vector<int> powers;
  std::vector<Variant> variants{Variant::original, Variant::enhanced};
  std::vector<std::string> checks = check_names();
  std::string output;  // empty: standard output
  ReportFormat format = ReportFormat::json;
  int parallelism = 1;
  PhiRuleChoice phi_rule = PhiRuleChoice::fill_gaps;
  bool timing = false;
};

class ConfigError : public std::invalid_argument {
 public:
  ConfigError(int line, const std::string& what)
      : std::invalid_argument(line > 0 ? "config line " + std::to_string(line) + ": " + what : what) {}
};

namespace config_detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline int parse_int(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(line, "expected an integer, got '" + s + "'");
  }
}

/// "a..b", "a", or "a, b, c"; an empty result is an error.
inline std::vector<int> parse_range(const std::string& value, int line) {
  std::vector<int> out;
  for (const auto& item : split_list(value)) {
    auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(item, line));
      continue;
    }
    int lo = parse_int(trim(item.substr(0, dots)), line);
    int hi = parse_int(trim(item.substr(dots + 2)), line);
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw ConfigError(line, "range '" + value + "' is empty");
  return out;
}

inline bool parse_bool(const std::string& s, int line) {
  if (s == "true" || s == "yes" || s == "on" || s == "1") return true;
  if (s == "false" || s == "no" || s == "off" || s == "0") return false;
  throw ConfigError(line, "expected a boolean, got '" + s + "'");
}

}  // namespace config_detail

/// Line-oriented `key = value` configuration; `#` starts a comment.
inline SweepConfig parse_config(std::istream& is) {
  using namespace config_detail;
  SweepConfig cfg;
  bool have_genus = false, have_power = false;
  std::string raw;
  int line = 0;
  std::map<std::string, int> seen;
  while (std::getline(is, raw)) {
    ++line;
    auto hash = raw.find('#');
    std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (text.empty()) continue;
    auto eq = text.find('=');
    if (eq == std::string::npos) throw ConfigError(line, "expected 'key = value'");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (!seen.emplace(key, line).second) throw ConfigError(line, "duplicate key '" + key + "'");
    if (key == "genus") {
      cfg.genera = parse_range(value, line);
      have_genus = true;
    } else if (key == "power") {
      cfg.powers = parse_range(value, line);
      have_power = true;
    } else if (key == "variants") {
      cfg.variants.clear();
      for (const auto& v : split_list(value)) {
        try {
          cfg.variants.push_back(parse_variant(v));
        } catch (const std::invalid_argument& e) {
          throw ConfigError(line, e.what());
        }
      }
      if (cfg.variants.empty()) throw ConfigError(line, "variant list is empty");
    } else if (key == "checks") {
      if (value == "all") {
        cfg.checks = check_names();
      } else {
        cfg.checks = split_list(value);
        if (cfg.checks.empty()) throw ConfigError(line, "check list is empty");
        for (const auto& c : cfg.checks)
          if (!is_check(c)) throw ConfigError(line, "unknown check '" + c + "'");
      }
    } else if (key == "output") {
      cfg.output = value;
    } else if (key == "format") {
      try {
        cfg.format = parse_format(value);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(line, e.what());
      }
    } else if (key == "parallelism") {
      cfg.parallelism = parse_int(value, line);
      if (cfg.parallelism < 1) throw ConfigError(line, "parallelism must be >= 1");
    } else if (key == "phi_rule") {
      if (value == "fill-gaps")
        cfg.phi_rule = PhiRuleChoice::fill_gaps;
      else if (value == "none")
        cfg.phi_rule = PhiRuleChoice::none;
      else
        throw ConfigError(line, "phi_rule must be 'fill-gaps' or 'none'");
    } else if (key == "timing") {
      cfg.timing = parse_bool(value, line);
    } else {
      throw ConfigError(line, "unknown key '" + key + "'");
    }
  }
  if (!have_genus) throw ConfigError(0, "config needs a genus range");
  if (!have_power) throw ConfigError(0, "config needs a power range");
  for (int g : cfg.genera)
    if (g < 1) throw ConfigError(seen["genus"], "genus values must be >= 1");
  for (int n : cfg.powers)
    if (n < 0) throw ConfigError(seen["power"], "power values must be >= 0");
  // the record order is by variant name, so normalize the set
  std::sort(cfg.variants.begin(), cfg.variants.end());
  cfg.variants.erase(std::unique(cfg.variants.begin(), cfg.variants.end()), cfg.variants.end());
  return cfg;
}

inline SweepConfig parse_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open config '" + path + "'");
  return parse_config(is);
}

inline json to_json(const SweepConfig& c) {
  json g = c.genera, n = c.powers, v = json::array();
  for (auto x : c.variants) v.push_back(to_string(x));
  return json{{"genus", g},
              {"power", n},
              {"variants", v},
              {"checks", c.checks},
              {"phi_rule", c.phi_rule == PhiRuleChoice::fill_gaps ? "fill-gaps" : "none"}};
}

// ---------------------------------------------------------------------------
// Records and sweeps

struct Record {
  FamilySpec spec;
  std::string braid;             // empty when the family could not be built
  std::string error;             // record-level failure, if any
  std::optional<LaurentPoly> alexander_burau;    // of the closed braid
  std::optional<LaurentPoly> alexander_fibred;   // char poly of the monodromy
  std::optional<LaurentPoly> alexander_seifert;  // from the monodromy Seifert form
  std::optional<std::string> determinant;
  std::optional<int> fibre_genus;
  std::optional<int> signature;
  std::vector<CheckResult> checks;
  std::optional<double> elapsed_ms;
};

inline Status record_status(const Record& r) {
  if (!r.error.empty()) return Status::error;
  bool inconclusive = false;
  for (const auto& c : r.checks) {
    if (c.status == Status::refuted || c.status == Status::error) return Status::error;
    if (c.status == Status::inconclusive) inconclusive = true;
  }
  return inconclusive ? Status::inconclusive : Status::verified;
}

inline PhiRule rule_for(const SweepConfig& cfg, Variant v) {
  return cfg.phi_rule == PhiRuleChoice::fill_gaps ? default_rule(v) : PhiRule{};
}

inline Record compute_record(const FamilySpec& spec, const PhiRule& rule, const std::vector<std::string>& checks,
                             bool timing) {
  const auto start = std::chrono::steady_clock::now();
  Record r;
  r.spec = spec;
  try {
    Family f = build_family(spec, rule);
    r.braid = to_text(f.beta);
    r.alexander_burau = alexander_from_burau(f.beta).poly();
    const IntMatrix m = lift_homological(f.beta);
    const AlexanderPolynomial fibred = monodromy_alexander(m);
    r.alexander_fibred = fibred.poly();
    r.determinant = fibred.determinant().str();
    r.fibre_genus = branched_cover_euler(1, 2 * spec.genus + 1).genus;
    try {
      const SeifertMatrix s = seifert_from_monodromy(m, ChainSurface(spec.genus));
      r.alexander_seifert = alexander_from_seifert(s).poly();
      r.signature = classical_signature(s);
    } catch (const SeifertSolveError&) {
      // left absent; the checks that need it report their own errors
    }
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  CheckInput in{spec, rule, {}, {}, {}, {}};
  for (const auto& name : checks) {
    if (!r.error.empty()) {
      r.checks.push_back({name, Status::error, "family could not be built: " + r.error, json::object()});
      continue;
    }
    r.checks.push_back(run_check(name, in));
  }
  if (timing)
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

struct Report {
  SweepConfig config;
  std::vector<Record> records;
};

inline bool record_less(const Record& a, const Record& b) {
  auto key = [](const Record& r) { return std::make_tuple(r.spec.variant, r.spec.genus, r.spec.power); };
  return key(a) < key(b);
}

/// All (variant, genus, power) records.  Workers fill fixed slots, so the
/// result does not depend on scheduling.
inline Report sweep(const SweepConfig& cfg) {
  if (cfg.genera.empty() || cfg.powers.empty() || cfg.variants.empty())
    throw ConfigError(0, "sweep ranges must be nonempty");
  if (cfg.parallelism < 1) throw ConfigError(0, "parallelism must be >= 1");
  std::vector<FamilySpec> specs;
  for (Variant v : cfg.variants)
    for (int g : cfg.genera)
      for (int n : cfg.powers) specs.push_back({g, n, v});
  Report rep;
  rep.config = cfg;
  rep.records.resize(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k = next++; k < specs.size(); k = next++)
      rep.records[k] = compute_record(specs[k], rule_for(cfg, specs[k].variant), cfg.checks, cfg.timing);
  };
  const int workers = std::min<int>(cfg.parallelism, static_cast<int>(specs.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::stable_sort(rep.records.begin(), rep.records.end(), record_less);
  return rep;
}

inline Status report_status(const Report& rep) {
  bool inconclusive = false;
  for (const auto& r : rep.records) {
    Status s = record_status(r);
    if (s == Status::error) return Status::error;
    if (s == Status::inconclusive) inconclusive = true;
  }
  return inconclusive ? Status::inconclusive : Status::verified;
}

// ---------------------------------------------------------------------------
// Emission

inline json to_json(const Record& r) {
  json out{{"genus", r.spec.genus},
           {"power", r.spec.power},
           {"variant", to_string(r.spec.variant)},
           {"toolkit_version", toolkit_version},
           {"convention_fingerprint", convention_fingerprint()},
           {"status", to_string(record_status(r))},
           {"braid", r.braid.empty() ? json(nullptr) : json(r.braid)}};
  if (!r.error.empty()) out["error"] = r.error;
  json alex = json::object();
  alex["burau"] = r.alexander_burau ? polynomial_json(*r.alexander_burau) : json(nullptr);
  alex["fibred"] = r.alexander_fibred ? polynomial_json(*r.alexander_fibred) : json(nullptr);
  alex["seifert"] = r.alexander_seifert ? polynomial_json(*r.alexander_seifert) : json(nullptr);
  out["alexander"] = alex;
  out["determinant"] = r.determinant ? json(*r.determinant) : json(nullptr);
  out["fibre_genus"] = r.fibre_genus ? json(*r.fibre_genus) : json(nullptr);
  out["signature"] = r.signature ? json(*r.signature) : json(nullptr);
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  out["checks"] = checks;
  if (r.elapsed_ms) out["elapsed_ms"] = *r.elapsed_ms;
  return out;
}

inline json to_json(const Report& rep) {
  json records = json::array();
  std::map<std::string, int> counts;
  for (const auto& s : {Status::verified, Status::refuted, Status::inconclusive, Status::error, Status::not_applicable})
    counts[to_string(s)] = 0;
  for (const auto& r : rep.records) {
    records.push_back(to_json(r));
    for (const auto& c : r.checks) ++counts[to_string(c.status)];
  }
  json summary{{"records", rep.records.size()}, {"status", to_string(report_status(rep))}};
  json check_counts = json::object();
  for (const auto& [k, v] : counts) check_counts[k] = v;
  summary["checks"] = check_counts;
  return json{{"schema_version", report_schema_version},
              {"toolkit_version", toolkit_version},
              {"convention_fingerprint", convention_fingerprint()},
              {"conventions", conventions()},
              {"config", to_json(rep.config)},
              {"summary", summary},
              {"records", records}};
}

namespace emit_detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string json_poly_csv(const json& p) {
  if (p.is_null()) return "";
  std::string out = std::to_string(p.at("offset").get<int>()) + ":";
  bool first = true;
  for (const auto& c : p.at("coefficients")) {
    if (!first) out += ',';
    first = false;
    out += c.is_string() ? c.get<std::string>() : std::to_string(c.get<std::int64_t>());
  }
  return out;
}

inline std::string json_scalar(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_double(v.get<double>());
  return v.dump();
}

inline const json* find_check(const json& record, const std::string& name) {
  for (const auto& c : record.at("checks"))
    if (c.at("name") == name) return &c;
  return nullptr;
}

inline std::string dilatation(const json& record) {
  const json* c = find_check(record, "pa");
  if (!c || !c->at("detail").contains("dilatation")) return "";
  return format_double(c->at("detail").at("dilatation").get<double>());
}

}  // namespace emit_detail

/// Writes a JSON report (as produced by to_json) in the requested format.
inline std::string emit(const json& report, ReportFormat format) {
  using namespace emit_detail;
  if (format == ReportFormat::json) return report.dump(2) + "\n";
  const json& records = report.at("records");
  std::vector<std::string> checks;
  for (const auto& c : report.at("config").at("checks")) checks.push_back(c.get<std::string>());
  std::ostringstream os;
  if (format == ReportFormat::csv) {
    os << "genus,power,variant,status,braid,alexander_burau,alexander_fibred,alexander_seifert,determinant,"
          "fibre_genus,signature,dilatation";
    for (const auto& c : checks) os << "," << c;
    os << "\n";
    for (const auto& r : records) {
      os << r.at("genus").get<int>() << "," << r.at("power").get<int>() << "," << r.at("variant").get<std::string>()
         << "," << r.at("status").get<std::string>() << "," << csv_field(json_scalar(r.at("braid"))) << ","
         << csv_field(json_poly_csv(r.at("alexander").at("burau"))) << ","
         << csv_field(json_poly_csv(r.at("alexander").at("fibred"))) << ","
         << csv_field(json_poly_csv(r.at("alexander").at("seifert"))) << "," << json_scalar(r.at("determinant"))
         << "," << json_scalar(r.at("fibre_genus")) << "," << json_scalar(r.at("signature")) << ","
         << dilatation(r);
      for (const auto& c : checks) {
        const json* cr = find_check(r, c);
        os << "," << (cr ? cr->at("status").get<std::string>() : "");
      }
      os << "\n";
    }
    return os.str();
  }
  // table
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"variant", "g", "n", "status", "Alexander (fibred)", "det", "genus", "sig", "dilatation"});
  for (const auto& r : records) {
    const json& fib = r.at("alexander").at("fibred");
    rows.push_back({r.at("variant").get<std::string>(), std::to_string(r.at("genus").get<int>()),
                    std::to_string(r.at("power").get<int>()), r.at("status").get<std::string>(),
                    fib.is_null() ? "-" : fib.at("text").get<std::string>(), json_scalar(r.at("determinant")),
                    json_scalar(r.at("fibre_genus")), json_scalar(r.at("signature")), dilatation(r)});
  }
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& row : rows)
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      // numbers right-aligned, text left-aligned
      const bool numeric = k == 1 || k == 2 || k == 5 || k == 6 || k == 7 || k == 8;
      os << (k ? "  " : "");
      if (numeric)
        os << std::setw(static_cast<int>(width[k])) << std::right << rows[i][k];
      else if (k + 1 == rows[i].size())
        os << rows[i][k];
      else
        os << std::setw(static_cast<int>(width[k])) << std::left << rows[i][k];
    }
    os << "\n";
    if (i == 0) {
      std::size_t total = 0;
      for (auto w : width) total += w;
      os << std::string(total + 2 * (width.size() - 1), '-') << "\n";
    }
  }
  return os.str();
}

inline std::string emit(const Report& rep, ReportFormat format) { return emit(to_json(rep), format); }

/// Reads the polynomial columns back out of CSV text emitted above.
inline std::vector<std::map<std::string, std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(field);
      field.clear();
    } else if (c == '\n') {
      row.push_back(field);
      field.clear();
      rows.push_back(row);
      row.clear();
    } else {
      field += c;
    }
  }
  if (!field.empty() || !row.empty()) {
    row.push_back(field);
    rows.push_back(row);
  }
  std::vector<std::map<std::string, std::string>> out;
  if (rows.empty()) return out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size()) throw std::invalid_argument("ragged CSV row " + std::to_string(r));
    std::map<std::string, std::string> m;
    for (std::size_t k = 0; k < rows[0].size(); ++k) m[rows[0][k]] = rows[r][k];
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace fibknot
