#include <sstream>

#include <gtest/gtest.h>

#include "fibknot/report.hpp"

using namespace fibknot;

namespace {

SweepConfig config_from(const std::string& text) {
  std::istringstream is(text);
  return parse_config(is);
}

CheckInput family_input(int g, int n, Variant v) { return {{g, n, v}, default_rule(v), {}, {}, {}, {}}; }

}  // namespace

TEST(Config, ParsesRangesListsAndComments) {
  SweepConfig c = config_from(
      "# demo\n"
      "genus = 2..4\n"
      "power = 0, 3, 1   # unsorted\n"
      "variants = enhanced\n"
      "checks = unknot, pa\n"
      "format = csv\n"
      "parallelism = 4\n"
      "timing = yes\n");
  EXPECT_EQ(c.genera, (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(c.powers, (std::vector<int>{0, 1, 3}));
  EXPECT_EQ(c.variants, (std::vector<Variant>{Variant::enhanced}));
  EXPECT_EQ(c.checks, (std::vector<std::string>{"unknot", "pa"}));
  EXPECT_EQ(c.format, ReportFormat::csv);
  EXPECT_EQ(c.parallelism, 4);
  EXPECT_TRUE(c.timing);
  EXPECT_EQ(config_from("genus = 3\npower = 0\n").checks, check_names());
}

TEST(Config, Rejections) {
  EXPECT_THROW(config_from("genus = 2\npower = 5..3\n"), ConfigError);
  EXPECT_THROW(config_from("genus = 2\n"), ConfigError);
  EXPECT_THROW(config_from("genus = 2\npower = 0\ncolour = red\n"), ConfigError);
  EXPECT_THROW(config_from("genus = 2\npower = 0\nparallelism = 0\n"), ConfigError);
  EXPECT_THROW(config_from("genus = 2\npower = 0\nchecks = unknot, nope\n"), ConfigError);
  EXPECT_THROW(config_from("genus = 2\ngenus = 3\npower = 0\n"), ConfigError);
  EXPECT_THROW(config_from("genus = 0\npower = 0\n"), ConfigError);
  EXPECT_THROW(config_from("genus = two\npower = 0\n"), ConfigError);
  EXPECT_THROW(config_from("genus 2\n"), ConfigError);
  try {
    config_from("genus = 2\npower = 0\nformat = xml\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(Checks, FamilyVerdicts) {
  EXPECT_EQ(run_check("unknot", family_input(3, 2, Variant::original)).status, Status::verified);
  EXPECT_EQ(run_check("alexander-trivial", family_input(3, 2, Variant::enhanced)).status, Status::verified);
  EXPECT_EQ(run_check("fibre-genus", family_input(4, 1, Variant::original)).status, Status::verified);
  EXPECT_EQ(run_check("pa", family_input(2, 0, Variant::original)).status, Status::verified);
  EXPECT_EQ(run_check("pa", family_input(2, 1, Variant::original)).status, Status::not_applicable);
  EXPECT_EQ(run_check("filling", family_input(5, 0, Variant::original)).status, Status::verified);
  EXPECT_EQ(run_check("periodic-identity", family_input(3, 0, Variant::enhanced)).status, Status::verified);
  EXPECT_EQ(run_check("periodic-identity", family_input(3, 0, Variant::original)).status, Status::not_applicable);
  EXPECT_EQ(run_check("band-witness", family_input(3, 0, Variant::enhanced)).status, Status::verified);
  EXPECT_EQ(run_check("homology-invariance", family_input(2, 4, Variant::enhanced)).status, Status::verified);
  EXPECT_EQ(run_check("alexander-module", family_input(3, 2, Variant::enhanced)).status, Status::verified);
  EXPECT_EQ(run_check("twobridge-crosscheck", family_input(4, 0, Variant::original)).status, Status::verified);
  EXPECT_EQ(run_check("growth-proxy", family_input(2, 3, Variant::original)).status, Status::verified);
  EXPECT_EQ(run_check("growth-proxy", family_input(2, 1, Variant::original)).status, Status::not_applicable);
  EXPECT_THROW(run_check("volume", family_input(2, 0, Variant::original)), UnknownCheck);
}

TEST(Checks, AdHocInputs) {
  CheckInput trefoil = family_input(1, 0, Variant::original);
  trefoil.braid = parse_braid("2: 1 1 1");
  EXPECT_EQ(run_check("unknot", trefoil).status, Status::inconclusive);
  EXPECT_EQ(run_check("alexander-trivial", trefoil).status, Status::refuted);

  CheckInput band = family_input(1, 0, Variant::original);
  band.braid = parse_braid("3: 2 1 -2");
  band.witness = parse_witness("1,3");
  EXPECT_EQ(run_check("band-witness", band).status, Status::verified);
  band.witness = parse_witness("1,2");
  EXPECT_EQ(run_check("band-witness", band).status, Status::refuted);
  band.witness.reset();
  EXPECT_EQ(run_check("band-witness", band).status, Status::error);

  CheckInput pa = family_input(1, 0, Variant::original);
  pa.intersections = IntMatrix{{2}};
  pa.twist_word = parse_twist_word("A B");
  EXPECT_EQ(run_check("pa", pa).status, Status::inconclusive);
  pa.twist_word = parse_twist_word("A");
  EXPECT_EQ(run_check("pa", pa).status, Status::refuted);
}

TEST(Checks, ErrorsBecomeRecordsNotExceptions) {
  // original genus 1 with n >= 1 has no Phi unless a rule is supplied
  CheckInput in{{1, 2, Variant::original}, {}, {}, {}, {}, {}};
  CheckResult r = run_check("unknot", in);
  EXPECT_EQ(r.status, Status::error);
  EXPECT_FALSE(r.message.empty());
}

TEST(ExitCodes, Mapping) {
  EXPECT_EQ(exit_code(Status::verified), 0);
  EXPECT_EQ(exit_code(Status::inconclusive), 2);
  EXPECT_EQ(exit_code(Status::refuted), 1);
  EXPECT_EQ(exit_code(Status::error), 1);
  EXPECT_EQ(exit_code(Status::not_applicable), 1);
  for (Status s : {Status::verified, Status::refuted, Status::inconclusive, Status::error, Status::not_applicable})
    EXPECT_EQ(parse_status(to_string(s)), s);
}

TEST(Sweep, RecordCountOrderAndDeterminism) {
  SweepConfig c = config_from("genus = 2..3\npower = 0..2\nchecks = unknot, alexander-trivial\n");
  Report serial = sweep(c);
  ASSERT_EQ(serial.records.size(), 12u);
  EXPECT_EQ(serial.records.front().spec.variant, Variant::original);
  EXPECT_EQ(serial.records.back().spec.variant, Variant::enhanced);
  EXPECT_TRUE(std::is_sorted(serial.records.begin(), serial.records.end(), record_less));
  c.parallelism = 5;
  EXPECT_EQ(emit(sweep(c), ReportFormat::json), emit(serial, ReportFormat::json));
  EXPECT_EQ(report_status(serial), Status::verified);
}

TEST(Sweep, FailedRecordsAreKept) {
  SweepConfig c = config_from("genus = 1\npower = 0..2\nvariants = original\nphi_rule = none\nchecks = unknot\n");
  Report rep = sweep(c);
  ASSERT_EQ(rep.records.size(), 3u);
  EXPECT_TRUE(rep.records[0].error.empty());
  EXPECT_FALSE(rep.records[1].error.empty());
  EXPECT_EQ(record_status(rep.records[1]), Status::error);
  json j = to_json(rep);
  EXPECT_EQ(j["records"].size(), 3u);
  EXPECT_TRUE(j["records"][1].contains("error"));
  EXPECT_EQ(j["summary"]["status"], "error");
}

TEST(Sweep, ThreeAlexanderPipelinesAgreeOnFibredPolynomial) {
  Report rep = sweep(config_from("genus = 1..3\npower = 0..3\nchecks = fibre-genus\n"));
  for (const auto& r : rep.records) {
    ASSERT_TRUE(r.alexander_fibred && r.alexander_seifert && r.alexander_burau);
    EXPECT_EQ(*r.alexander_fibred, *r.alexander_seifert);
    EXPECT_EQ(*r.alexander_burau, LaurentPoly(1));
    EXPECT_EQ(r.fibre_genus, r.spec.genus);
  }
}

TEST(Emit, JsonCarriesVersionAndFingerprint) {
  Report rep = sweep(config_from("genus = 2\npower = 0\nvariants = original\nchecks = pa\n"));
  json j = json::parse(emit(rep, ReportFormat::json));
  EXPECT_EQ(j["schema_version"], report_schema_version);
  EXPECT_EQ(j["convention_fingerprint"], convention_fingerprint());
  const json& rec = j["records"][0];
  EXPECT_EQ(rec["toolkit_version"], toolkit_version);
  EXPECT_EQ(rec["alexander"]["fibred"]["coefficients"], json::parse("[1,-7,13,-7,1]"));
  EXPECT_EQ(rec["determinant"], "29");
  EXPECT_NEAR(rec["checks"][0]["detail"]["dilatation"].get<double>(), 4.39026, 1e-5);
  EXPECT_FALSE(rec.contains("elapsed_ms"));
  EXPECT_EQ(convention_fingerprint().size(), 16u);
}

TEST(Emit, CsvPolynomialsRoundTrip) {
  Report rep = sweep(config_from("genus = 1..3\npower = 0..3\nvariants = original\nchecks = unknot\n"));
  auto rows = parse_csv(emit(rep, ReportFormat::csv));
  ASSERT_EQ(rows.size(), rep.records.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    EXPECT_EQ(parse_polynomial_csv(rows[k]["alexander_fibred"]), *rep.records[k].alexander_fibred);
    EXPECT_EQ(rows[k]["unknot"], "verified");
    EXPECT_EQ(rows[k]["braid"], rep.records[k].braid);
  }
  EXPECT_EQ(parse_polynomial_csv("-2:1,0,5"), LaurentPoly(-2, {1, 0, 5}));
  EXPECT_EQ(parse_polynomial_csv("0:"), LaurentPoly());
  EXPECT_EQ(coefficient_json(BigInt("123456789012345678901234567890")), json("123456789012345678901234567890"));
}

TEST(Emit, TableIsAligned) {
  Report rep = sweep(config_from("genus = 2..3\npower = 0..1\nvariants = original\nchecks = pa\n"));
  std::istringstream is(emit(rep, ReportFormat::table));
  std::string header, rule, line;
  std::getline(is, header);
  std::getline(is, rule);
  EXPECT_EQ(rule.find_first_not_of('-'), std::string::npos);
  const auto det_end = header.find("det") + 3;
  int rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    EXPECT_NE(line[det_end - 1], ' ') << line;  // right-aligned column
  }
  EXPECT_EQ(rows, 4);
}
