#include <gtest/gtest.h>

#include "jacsyz/parse.hpp"
#include "jacsyz/primes.hpp"
#include "jacsyz/report.hpp"

namespace jacsyz {
namespace {

CurveInput text_input(const char* s) { return {"poly", 0, parse_poly(s), std::nullopt, true}; }

PipelineOptions with_field(const std::string& f) {
  PipelineOptions o;
  o.field = FieldChoice::parse(f);
  return o;
}

TEST(FieldChoice, Parse) {
  EXPECT_EQ(FieldChoice::parse("rat").mode, FieldChoice::Mode::Rational);
  EXPECT_EQ(FieldChoice::parse("dual").mode, FieldChoice::Mode::Dual);
  EXPECT_EQ(FieldChoice::parse("auto").mode, FieldChoice::Mode::Auto);
  auto fp = FieldChoice::parse("fp:1000003");
  EXPECT_EQ(fp.mode, FieldChoice::Mode::Prime);
  EXPECT_EQ(fp.prime, 1000003u);
  EXPECT_EQ(fp.name(), "fp:1000003");
  EXPECT_THROW(FieldChoice::parse("fp:1000001"), DomainError);  // not prime
  EXPECT_THROW(FieldChoice::parse("fp:3"), DomainError);
  EXPECT_THROW(FieldChoice::parse("real"), DomainError);
  auto [p1, p2] = dual_primes();
  EXPECT_EQ(p1, working_prime(0));
  EXPECT_EQ(p2, working_prime(1));
}

TEST(Pipeline, FermatCubic) {
  auto r = analyze_curve(text_input("x^3+y^3+z^3"), {});
  EXPECT_EQ(r.classification.cls, CurveClass::Smooth);
  EXPECT_EQ(r.summary.tau, 0);
  EXPECT_EQ(r.summary.mdr, 2);
  EXPECT_EQ(r.summary.m(), 3);
  EXPECT_EQ(r.field, "rat");
  EXPECT_FALSE(r.probabilistic);
}

TEST(Pipeline, NodalCubic) {
  auto r = analyze_curve(text_input("y^2*z - x^2*(x + z)"), {});
  EXPECT_EQ(r.classification.cls, CurveClass::MaximalTjurina);
  EXPECT_EQ(r.classification.type, "(3,2)");
  EXPECT_EQ(r.summary.exponents, (std::vector<int>{2, 2, 2, 2}));
  EXPECT_EQ(r.checks.equivalence, true);
  EXPECT_EQ(r.checks.thresholds, true);
  EXPECT_EQ(r.checks.deg_z_formula, true);
  EXPECT_EQ(r.checks.deg_z_equality, true);
  EXPECT_TRUE(r.checks.properties_hold());
}

TEST(Pipeline, NonReducedRejected) {
  EXPECT_THROW(analyze_curve(text_input("x^2*y"), {}), NotReduced);
}

TEST(Pipeline, PencilHasNoClassificationChecks) {
  auto r = analyze_curve(text_input("x*y*(x + y)"), {});
  EXPECT_EQ(r.classification.cls, CurveClass::PencilOfLines);
  EXPECT_FALSE(r.notes.empty());
}

TEST(Pipeline, FieldModesAgree) {
  auto in = make_family("s3", 8);
  auto rat = analyze_curve(in, with_field("rat"));
  auto dual = analyze_curve(in, with_field("dual"));
  auto fp = analyze_curve(in, with_field("fp:1000003"));
  EXPECT_EQ(rat.summary, dual.summary);
  EXPECT_EQ(rat.summary, fp.summary);
  EXPECT_TRUE(dual.probabilistic);
  EXPECT_TRUE(fp.probabilistic);
  EXPECT_EQ(analyze_curve(in, {}).field, "rat");
  EXPECT_EQ(analyze_curve(make_family("generic", 10), {}).field.rfind("dual:", 0), 0u);
}

TEST(Pipeline, TimingOnlyOnRequest) {
  auto in = nodal_cubic();
  EXPECT_FALSE(analyze_curve(in, {}).seconds);
  PipelineOptions o;
  o.timing = true;
  EXPECT_TRUE(analyze_curve(in, o).seconds);
}

TEST(Json, RoundTrip) {
  for (auto in : {nodal_cubic(), uninodal_quartic(), two_pencil_arrangement(4), make_family("s4", 9)}) {
    auto r = analyze_curve(in, {});
    auto j = to_json(r);
    EXPECT_EQ(j.at("schema_version"), kReportSchemaVersion);
    auto back = report_from_json(j);
    EXPECT_EQ(back, r) << in.family;
    EXPECT_EQ(to_json(back).dump(), j.dump());
    EXPECT_EQ(report_from_json(nlohmann::json::parse(j.dump())), r);
  }
}

TEST(Json, FreeCurveHasNullBourbaki) {
  auto r = analyze_curve(text_input("x*y*z"), {});
  auto j = to_json(r);
  EXPECT_TRUE(j.at("bourbaki").is_null());
  EXPECT_EQ(report_from_json(j), r);
}

TEST(Render, MentionsTheClass) {
  auto text = render_text(analyze_curve(nodal_cubic(), {}));
  EXPECT_NE(text.find("MaximalTjurina"), std::string::npos);
}

TEST(Suite, Members) {
  auto s3 = suite_members("s3", 7, 10);
  ASSERT_EQ(s3.size(), 4u);
  for (std::size_t i = 0; i < s3.size(); ++i) EXPECT_EQ(s3[i], (std::pair<std::string, int>{"s3", 7 + int(i)}));
  auto e = suite_members("exm4", 3, 11);
  ASSERT_EQ(e.size(), 3u);
  EXPECT_EQ(e.front().second, 4);
  EXPECT_EQ(e.back().second, 6);
  EXPECT_THROW(suite_members("bogus", 3, 9), DomainError);
}

TEST(Suite, RowsPass) {
  PipelineOptions o;
  for (const auto& [fam, param] : suite_members("exm4", 3, 11)) {
    auto row = run_suite_row(fam, param, o);
    EXPECT_TRUE(row.pass()) << fam << " " << param << " " << row.error;
    EXPECT_EQ(row.tau_computed, 3L * param * param - 6L * param + 1);
    EXPECT_EQ(row.r_computed, param);
  }
  auto q = run_suite_row("uninodal-quartic", 0, o);
  EXPECT_TRUE(q.pass());
  EXPECT_FALSE(q.maximal_expected);
}

TEST(Suite, ParallelRowsKeepMemberOrder) {
  PipelineOptions o;
  auto members = suite_members("all", 3, 7);
  auto rows = run_suite(members, o);
  ASSERT_EQ(rows.size(), members.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto serial = run_suite_row(members[i].first, members[i].second, o);
    EXPECT_EQ(rows[i].family, members[i].first);
    EXPECT_EQ(rows[i].param, members[i].second);
    EXPECT_EQ(rows[i].tau_computed, serial.tau_computed) << rows[i].family;
    EXPECT_EQ(rows[i].r_computed, serial.r_computed) << rows[i].family;
    EXPECT_TRUE(rows[i].pass()) << rows[i].family << " " << rows[i].error;
  }
}

}  // namespace
}  // namespace jacsyz
