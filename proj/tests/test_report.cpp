#include <gtest/gtest.h>

#include "fex/error.hpp"
#include "fex/report.hpp"

namespace fex::report {
namespace {

using nlohmann::json;

InstanceConfig config_from(const char* text) { return parse_config(json::parse(text)); }

TEST(Report, ParsesDefaults) {
  const auto c = config_from(R"({"group":[8], "K":[[0],[3]]})");
  EXPECT_EQ(c.mode, Mode::bounds);
  EXPECT_EQ(c.phase_grid, 32U);
  EXPECT_EQ(c.budget, 2000U);
  EXPECT_EQ(c.seed, 0U);
  ASSERT_EQ(c.points.size(), 2U);
  EXPECT_EQ(c.points[1].residues, (std::vector<std::int64_t>{3}));
}

TEST(Report, ParsesSeedRanges) {
  EXPECT_EQ(config_from(R"({"group":[16], "seeds":"0..3"})").seeds, (std::vector<std::uint64_t>{0, 1, 2, 3}));
  EXPECT_EQ(config_from(R"({"group":[16], "seeds":[4, 2]})").seeds, (std::vector<std::uint64_t>{4, 2}));
}

TEST(Report, ConfigErrorsNameTheField) {
  const std::pair<const char*, const char*> cases[] = {
      {R"({"K":[[0]]})", "group"},
      {R"({"group":[0]})", "group[0]"},
      {R"({"group":[8], "K":[[0],[9]]})", "K[1]"},
      {R"({"group":[8], "K":[[1],[1]]})", "K[1]"},
      {R"({"group":[2,4], "K":[[1]]})", "K[0]"},
      {R"({"group":[8], "mode":"nope"})", "mode"},
      {R"({"group":[8], "budget":-1})", "budget"},
      {R"({"group":[8], "seeds":"9..2"})", "seeds"},
  };
  for (const auto& [text, field] : cases) {
    try {
      config_from(text);
      FAIL() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::config);
      EXPECT_NE(std::string(e.what()).find(std::string("'") + field + "'"), std::string::npos) << e.what();
    }
  }
}

TEST(Report, BoundsOnZ8) {
  const auto result = run(config_from(R"({"group":[8], "K":[[0],[3]], "mode":"bounds"})"));
  const auto& r = result.report;
  EXPECT_FALSE(result.violation);
  EXPECT_EQ(r["theorem_lower"].get<double>(), 1.0);
  EXPECT_NEAR(r["theorem_upper"].get<double>(), std::sqrt(2.0), 1e-15);
  const double lo = r["canonical"]["lo"].get<double>();
  const double hi = r["canonical"]["hi"].get<double>();
  const double slack = r["canonical"]["slack"].get<double>();
  EXPECT_GE(lo, 1.0);
  EXPECT_LE(hi, std::sqrt(2.0) + slack);
  EXPECT_NO_THROW(validate_report(r));
}

TEST(Report, AlphaOnFullZ2) {
  const auto result = run(config_from(R"({"group":[2], "K":[[0],[1]], "mode":"alpha", "phase_grid":64, "budget":40})"));
  const auto& opt = result.report["alpha"]["optimized"];
  EXPECT_LE(opt["lo"].get<double>(), std::sqrt(2.0) + 1e-12);
  EXPECT_GE(opt["hi"].get<double>(), std::sqrt(2.0) - 1e-12);
  EXPECT_FALSE(result.violation);
}

TEST(Report, TrivialGroup) {
  const auto result = run(config_from(R"({"group":[1], "K":[[0]], "mode":"bounds"})"));
  EXPECT_EQ(result.report["canonical"]["hi"].get<double>(), 1.0);
  EXPECT_EQ(result.report["canonical"]["lo"].get<double>(), 1.0);
}

TEST(Report, EveryModeRoundTripsThroughItsSchema) {
  const char* configs[] = {
      R"({"group":[8], "K":[[0],[3]], "mode":"bounds"})",
      R"({"group":[2,4], "K":[[0,0],[1,1],[0,3]], "mode":"alpha", "phase_grid":8, "budget":40})",
      R"({"group":[12], "K":[[0],[5]], "mode":"chain", "phase_grid":8, "budget":40})",
      R"({"group":[1], "mode":"khinchin", "vectors":[[1,1],[[0,1],2]], "samples":20})",
      R"({"group":[8], "mode":"sweep", "n_max":3, "seeds":"0..1", "phase_grid":8, "budget":20})",
  };
  for (const char* text : configs) {
    const auto result = run(config_from(text));
    EXPECT_FALSE(result.violation) << text;
    const auto reparsed = json::parse(result.report.dump());
    EXPECT_NO_THROW(validate_report(reparsed)) << text;
    EXPECT_EQ(reparsed, result.report);
    // Config echo re-parses to the same config.
    EXPECT_EQ(to_json(parse_config(reparsed["config"])), reparsed["config"]);
  }
}

TEST(Report, ValidateRejectsBrokenReports) {
  auto report = run(config_from(R"({"group":[8], "K":[[0],[3]]})")).report;
  auto missing = report;
  missing.erase("canonical");
  EXPECT_THROW(validate_report(missing), Error);
  auto wrong_version = report;
  wrong_version["schema_version"] = 99;
  EXPECT_THROW(validate_report(wrong_version), Error);
  auto inverted = report;
  inverted["canonical"]["lo"] = 5.0;
  EXPECT_THROW(validate_report(inverted), Error);
}

TEST(Report, SweepIsDeterministicAndSandwiched) {
  const char* text = R"({"group":[12], "mode":"sweep", "n_max":3, "seeds":[0,1,2], "phase_grid":8, "budget":30})";
  const auto a = run(config_from(text));
  const auto b = run(config_from(text));
  EXPECT_EQ(a.csv, b.csv);
  EXPECT_EQ(a.report.dump(), b.report.dump());
  EXPECT_EQ(a.csv.substr(0, a.csv.find('\n')), "n,seed,theorem_lower,canonical_hi,optimized_hi,theorem_upper");
  for (const auto& row : a.report["summary"]) EXPECT_GE(row["margin"].get<double>(), -1e-9);
  EXPECT_EQ(a.report["rows"].size(), 9U);
}

TEST(Report, SweepRejectsOversizedN) {
  EXPECT_THROW(run(config_from(R"({"group":[3], "mode":"sweep", "n_max":4})")), Error);
}

TEST(Report, FormatNumber) {
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(std::sqrt(2.0)), "1.41421356237");
  EXPECT_EQ(format_number(0.70710678118654757), "0.707106781187");
  EXPECT_EQ(format_number(1234567.891), "1234567.891");
}

}  // namespace
}  // namespace fex::report
