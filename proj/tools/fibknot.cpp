// fibknot: family generation, named checks, sweeps and report conversion.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "fibknot/report.hpp"

using namespace fibknot;

namespace {

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write '" + path + "'");
  os << text;
  if (!os) throw std::runtime_error("write to '" + path + "' failed");
}

IntMatrix parse_intersections(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw std::invalid_argument("intersections must be a JSON matrix");
  IntMatrix m(j.size(), j[0].size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (j[r].size() != m.cols()) throw std::invalid_argument("intersection matrix rows differ in length");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = j[r][c].get<std::int64_t>();
  }
  return m;
}

struct FamilyArgs {
  int genus = 2;
  int power = 0;
  std::string variant = "original";
  std::string phi_rule = "fill-gaps";
};

void add_family_options(CLI::App* cmd, FamilyArgs& a) {
  cmd->add_option("--genus,-g", a.genus, "genus g >= 1")->check(CLI::PositiveNumber);
  cmd->add_option("--power,-n", a.power, "power n >= 0")->check(CLI::NonNegativeNumber);
  cmd->add_option("--variant,-v", a.variant, "original or enhanced")
      ->check(CLI::IsMember({"original", "enhanced"}));
  cmd->add_option("--phi-rule", a.phi_rule, "fill-gaps or none")->check(CLI::IsMember({"fill-gaps", "none"}));
}

FamilySpec spec_of(const FamilyArgs& a) { return {a.genus, a.power, parse_variant(a.variant)}; }

PhiRule rule_of(const FamilyArgs& a) {
  return a.phi_rule == "none" ? PhiRule{} : default_rule(parse_variant(a.variant));
}

json spec_json(const FamilySpec& s) {
  return json{{"genus", s.genus}, {"power", s.power}, {"variant", to_string(s.variant)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fibred-knot braid family toolkit"};
  app.set_version_flag("--version", toolkit_version);
  app.require_subcommand(1);

  // family
  FamilyArgs fam;
  std::string family_format = "text";
  auto* family = app.add_subcommand("family", "print the braid beta_n and its factors");
  add_family_options(family, fam);
  family->add_option("--format", family_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  // check
  FamilyArgs chk;
  std::string check_name, braid_text, witness_text, intersections_text, word_text, check_format = "json";
  auto* check = app.add_subcommand("check", "run one named verification");
  check->add_option("name", check_name, "verification name")->required();
  add_family_options(check, chk);
  check->add_option("--braid", braid_text, "braid word, e.g. \"3: 1 -2 1\"");
  check->add_option("--witness", witness_text, "band witness, e.g. \"2,3 1,2\"");
  check->add_option("--intersections", intersections_text, "intersection matrix as JSON, e.g. [[1,1],[0,1]]");
  check->add_option("--word", word_text, "multitwist word, e.g. \"A B^-1\"");
  check->add_option("--format", check_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  // sweep
  std::string config_path, sweep_output, sweep_format;
  int sweep_parallelism = 0;
  auto* sw = app.add_subcommand("sweep", "run checks over a (variant, genus, power) grid");
  sw->add_option("--config,-c", config_path, "key = value configuration file")->required();
  sw->add_option("--output,-o", sweep_output, "override the configured output path");
  sw->add_option("--format", sweep_format, "override the configured format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  sw->add_option("--parallelism,-j", sweep_parallelism, "override the configured worker count")
      ->check(CLI::PositiveNumber);

  // emit
  std::string emit_input, emit_output, emit_format;
  auto* em = app.add_subcommand("emit", "convert a JSON report to another format");
  em->add_option("--format", emit_format, "json, csv or table")->required()->check(CLI::IsMember({"json", "csv", "table"}));
  em->add_option("--input,-i", emit_input, "JSON report (default: standard input)");
  em->add_option("--output,-o", emit_output, "destination (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*family) {
      const FamilySpec spec = spec_of(fam);
      Family f = build_family(spec, rule_of(fam));
      if (family_format == "json") {
        json j = spec_json(spec);
        j["braid"] = to_text(f.beta);
        j["pi"] = to_text(f.pi);
        j["phi"] = to_text(f.phi);
        j["exponent_sum"] = exponent_sum(f.beta);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << to_text(f.beta) << "\n";
      }
      return 0;
    }

    if (*check) {
      CheckInput in{spec_of(chk), rule_of(chk), {}, {}, {}, {}};
      if (!braid_text.empty()) in.braid = parse_braid(braid_text);
      if (!witness_text.empty()) in.witness = parse_witness(witness_text);
      if (!intersections_text.empty()) in.intersections = parse_intersections(intersections_text);
      if (!word_text.empty()) in.twist_word = parse_twist_word(word_text);
      CheckResult r = run_check(check_name, in);
      if (check_format == "text") {
        std::cout << r.name << ": " << to_string(r.status) << " (" << r.message << ")\n";
      } else {
        json j = to_json(r);
        j["input"] = spec_json(in.spec);
        if (in.braid) j["input"]["braid"] = to_text(*in.braid);
        j["toolkit_version"] = toolkit_version;
        j["convention_fingerprint"] = convention_fingerprint();
        std::cout << j.dump(2) << "\n";
      }
      return exit_code(r.status);
    }

    if (*sw) {
      SweepConfig cfg = parse_config_file(config_path);
      if (!sweep_output.empty()) cfg.output = sweep_output;
      if (!sweep_format.empty()) cfg.format = parse_format(sweep_format);
      if (sweep_parallelism > 0) cfg.parallelism = sweep_parallelism;
      Report rep = sweep(cfg);
      write_output(emit(rep, cfg.format), cfg.output);
      const Status s = report_status(rep);
      if (!cfg.output.empty()) std::cerr << rep.records.size() << " records, " << to_string(s) << "\n";
      return exit_code(s);
    }

    if (*em) {
      json report;
      if (emit_input.empty() || emit_input == "-") {
        report = json::parse(std::cin);
      } else {
        std::ifstream is(emit_input);
        if (!is) throw std::runtime_error("cannot open '" + emit_input + "'");
        report = json::parse(is);
      }
      if (report.value("schema_version", 0) != report_schema_version)
        throw std::runtime_error("unsupported report schema version");
      if (report.value("convention_fingerprint", "") != convention_fingerprint())
        std::cerr << "warning: report was produced under different conventions\n";
      write_output(emit(report, parse_format(emit_format)), emit_output);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
