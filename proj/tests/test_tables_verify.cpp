#include <gtest/gtest.h>

#include "quadclass/golden.hpp"
#include "quadclass/tables.hpp"
#include "quadclass/verify.hpp"

using namespace quadclass;

TEST(Golden, EmbeddedRowCounts) {
  EXPECT_EQ(golden_classgroup().size(), 90u);
  EXPECT_EQ(golden_classfield().size(), 18u);
  EXPECT_EQ(golden_degeneration().size(), 14u);
  EXPECT_TRUE(golden_classgroup()[2].infinite);
}

TEST(Tables, NamesAndGuards) {
  EXPECT_EQ(parse_table_name("classgroup"), TableName::ClassGroup);
  EXPECT_EQ(parse_table_name("classfield"), TableName::ClassField);
  EXPECT_EQ(parse_table_name("degeneration"), TableName::Degeneration);
  EXPECT_FALSE(parse_table_name("other").has_value());
  EXPECT_THROW(build_table(TableName::ClassGroup, 0), std::invalid_argument);
  EXPECT_THROW(build_table(TableName::ClassGroup, kMaxTableDimension + 1), std::invalid_argument);
}

TEST(Tables, ClassGroupMatchesReference) {
  const OutputDocument doc = build_table(TableName::ClassGroup, 90);
  EXPECT_EQ(doc.rows.size(), 90u);
  const GoldenCheck check = compare_with_golden(TableName::ClassGroup, doc, 90);
  EXPECT_TRUE(check.ok()) << (check.mismatches.empty() ? "" : check.mismatches.front());
  EXPECT_EQ(check.compared, 90u);
  const auto& d3 = doc.rows[2];
  EXPECT_EQ(cell_text(d3[doc.column("total")]), "inf");
  EXPECT_EQ(cell_text(doc.rows[34][doc.column("h")]), "1;1;1;1;2;4");
  EXPECT_EQ(cell_text(doc.rows[34][doc.column("total")]), "10");
  EXPECT_EQ(cell_text(doc.rows[40][doc.column("total")]), "8");
  EXPECT_EQ(cell_text(doc.rows[85][doc.column("total")]), "10");
}

TEST(Tables, ClassFieldAndDegenerationMatchReference) {
  const OutputDocument cf = build_table(TableName::ClassField, 15);
  EXPECT_EQ(cf.rows.size(), 18u);
  EXPECT_TRUE(compare_with_golden(TableName::ClassField, cf, 15).ok());
  const OutputDocument dg = build_table(TableName::Degeneration, 500);
  EXPECT_EQ(dg.rows.size(), 14u);
  EXPECT_TRUE(compare_with_golden(TableName::Degeneration, dg, 500).ok());
}

TEST(Tables, GoldenComparisonDetectsTampering) {
  OutputDocument doc = build_table(TableName::Degeneration, 500);
  doc.rows[0][doc.column("degE")] = Integer(1);
  EXPECT_FALSE(compare_with_golden(TableName::Degeneration, doc, 500).ok());
  OutputDocument missing = build_table(TableName::ClassField, 15);
  missing.rows.pop_back();
  EXPECT_FALSE(compare_with_golden(TableName::ClassField, missing, 15).ok());
}

TEST(Tables, ExternalColumnsAreEchoed) {
  const OutputDocument doc = build_table(TableName::ClassGroup, 90);
  const std::size_t sic = doc.column("sic_count");
  for (std::size_t i = 0; i < doc.rows.size(); ++i) {
    EXPECT_EQ(cell_text(doc.rows[i][sic]), golden_classgroup()[i].sic_count);
  }
  EXPECT_FALSE(doc.notes.empty());
}

TEST(Verify, SuiteNames) {
  for (Suite s : {Suite::Units, Suite::Correspondence, Suite::Degrees, Suite::Uniqueness, Suite::Density, Suite::All}) {
    EXPECT_EQ(parse_suite(suite_name(s)), s);
  }
  EXPECT_FALSE(parse_suite("nope").has_value());
  EXPECT_THROW(run_verify(Suite::Degrees, 3), std::invalid_argument);
}

TEST(Verify, SmallRunsPass) {
  for (const CheckResult& r : {check_unit_lemma(30), check_eps_cube_roots(200), check_narrow_wide(2000),
                               check_correspondence(30, 10), check_degree_laws(150), check_degeneration(150),
                               check_uniqueness(100), check_density(2000), check_growth_trend(400, 500)}) {
    EXPECT_TRUE(r.passed()) << r.name << ": " << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_GT(r.checks, 0u) << r.name;
  }
}

TEST(Verify, RunVerifyCollectsResults) {
  const VerifyReport report = run_verify(Suite::Degrees, 60);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.results.size(), 4u);
}

TEST(CheckResult, KeepsFirstFailuresOnly) {
  CheckResult r("x");
  for (int i = 0; i < 25; ++i) r.expect(false, "bad " + std::to_string(i));
  r.expect(true, "fine");
  EXPECT_EQ(r.checks, 26u);
  EXPECT_EQ(r.failed, 25u);
  EXPECT_EQ(r.failures.size(), 10u);
  EXPECT_FALSE(r.passed());
}
