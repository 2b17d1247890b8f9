#include <gtest/gtest.h>

#include <string>

#include <weakram/pipeline.hpp>

using namespace weakram;

namespace {

JobSpec flagship(const std::string& command, long n = 1) {
  JobSpec js;
  js.kind = "padic";
  js.p = 3;
  js.poly = "x^6 + 6*x^2 + 6";
  js.command = command;
  js.n = n;
  return js;
}

JobSpec artin_schreier(const std::string& command, long n = 1) {
  JobSpec js;
  js.kind = "laurent";
  js.p = 2;
  js.poly = "x^2 - x - t^-1";
  js.command = command;
  js.n = n;
  return js;
}

JobSpec cyclo_cubic(const std::string& command, long n = 1) {
  JobSpec js;
  js.kind = "padic";
  js.p = 3;
  js.poly = "x^3 + 6*x^2 + 9*x + 3";
  js.command = command;
  js.n = n;
  return js;
}

TEST(Pipeline, ParsesConfigText) {
  auto js = parse_jobspec_text(
      "# job\n[base]\nkind = padic\np = 3\nf = 1\n\n[extension]\npoly = x^2 - 3\n"
      "[task]\ncommand = construct\nn = -2\nseed = 11\nprecision = 40\n");
  EXPECT_EQ(js.kind, "padic");
  EXPECT_EQ(js.p, 3);
  EXPECT_EQ(js.f, 1);
  EXPECT_EQ(js.poly, "x^2 - 3");
  EXPECT_EQ(js.command, "construct");
  EXPECT_EQ(js.n, -2);
  EXPECT_EQ(js.seed, 11u);
  EXPECT_EQ(js.precision, 40);
}

TEST(Pipeline, PrimePowerBaseDescriptor) {
  auto js = parse_jobspec_text("[base]\nkind = laurent\nq = 9\n[extension]\npoly = x^2 - t\n");
  EXPECT_EQ(js.p, 3);
  EXPECT_EQ(js.f, 2);
  auto bad = [](const std::string& text) {
    EXPECT_THROW((void)parse_jobspec_text(text), parse_error) << text;
  };
  bad("[base]\nkind = laurent\nq = 12\n[extension]\npoly = x^2 - t\n");
  bad("[base]\nkind = laurent\np = 2\nq = 9\n[extension]\npoly = x^2 - t\n");
  bad("[base]\nkind = padic\np = 4\n[extension]\npoly = x^2 - 2\n");
  bad("[base]\nkind = real\np = 3\n[extension]\npoly = x^2 - 3\n");
  bad("[base]\nkind = padic\np = 3\n[extension]\npoly = x^2 - 3\n[task]\nfoo = 1\n");
  bad("[other]\nkind = padic\n");
  bad("kind = padic\n");
  bad("[base]\nkind = padic\np = 3\n");
}

TEST(Pipeline, BootstrapTracksDiscriminant) {
  EXPECT_EQ(bootstrap_precision<PadicField>(flagship("analyze")), 2 * 7 + 3 + 16);
  EXPECT_EQ(bootstrap_precision<LaurentField>(artin_schreier("analyze")), 2 * 2 + 3 + 16);
  EXPECT_EQ(bootstrap_precision<PadicField>(flagship("construct", -2)), 2 * 7 + 4 + 16);
}

TEST(Pipeline, AnalyzeReportsInvariants) {
  auto out = run_job(flagship("analyze"));
  EXPECT_EQ(out.exit_code, 0);
  const auto& c = out.cert;
  EXPECT_EQ(c["extension"]["e"], 6);
  EXPECT_EQ(c["extension"]["different_valuation"], 7);
  EXPECT_EQ(c["extension"]["ramification_orders"], (ojson::array({6, 3, 1})));
  EXPECT_EQ(c["group"]["order"], 6);
  EXPECT_EQ(c["group"]["abelian"], false);
  EXPECT_EQ(c["verdict"], true);
}

TEST(Pipeline, VerifyAcceptsConstructedGenerator) {
  auto built = run_job(flagship("construct"));
  ASSERT_EQ(built.exit_code, 0);
  EXPECT_EQ(built.cert["construction"]["method"], "trace_descent");
  auto js = flagship("verify");
  js.element = built.cert["element"].get<std::string>();
  auto checked = run_job(js);
  EXPECT_EQ(checked.exit_code, 0);
  EXPECT_EQ(checked.cert["verdict"], true);
}

TEST(Pipeline, VerifyRejectsSquaredUniformizer) {
  auto js = cyclo_cubic("verify");
  js.element = "pi^2";
  auto out = run_job(js);
  EXPECT_EQ(out.exit_code, 2);
  EXPECT_EQ(out.cert["verdict"], false);
  EXPECT_EQ(out.cert["verification"]["determinant"], "0");
}

TEST(Pipeline, ConstructRejectsBadExponent) {
  auto out = run_job(flagship("construct", 2));
  EXPECT_EQ(out.exit_code, 2);
  EXPECT_EQ(out.cert["verdict"], false);
}

TEST(Pipeline, ParseFailuresExitThree) {
  auto js = flagship("analyze");
  js.poly = "x^6 + 6*y^2 + 6";
  EXPECT_EQ(run_job(js).exit_code, 3);
  js = flagship("frobnicate");
  EXPECT_EQ(run_job(js).exit_code, 3);
  js = flagship("verify");
  EXPECT_EQ(run_job(js).exit_code, 3);
}

TEST(Pipeline, ImpreciseElementExitsFour) {
  auto js = artin_schreier("verify");
  js.element = "pi + O(pi^1)";
  js.precision = 4;
  auto out = run_job(js);
  EXPECT_EQ(out.exit_code, 4);
  EXPECT_EQ(out.cert["verdict"], false);
}

TEST(Pipeline, DegreeOneConstructGivesBaseUniformizer) {
  JobSpec js;
  js.kind = "padic";
  js.p = 5;
  js.poly = "x - 5";
  js.command = "construct";
  auto out = run_job(js);
  EXPECT_EQ(out.exit_code, 0);
  EXPECT_EQ(out.cert["element"], "5 + O(pi^11)");
  EXPECT_EQ(out.cert["extension"]["degree"], 1);
}

TEST(Pipeline, AssocOrderHoldsOnWildExamples) {
  for (auto js : {artin_schreier("assoc-order"), cyclo_cubic("assoc-order")}) {
    auto out = run_job(js);
    EXPECT_EQ(out.exit_code, 0) << js.poly;
    EXPECT_EQ(out.cert["associated_order"]["oracle_matches"], true);
    EXPECT_EQ(out.cert["associated_order"]["epsilon_generates"], true);
    EXPECT_EQ(out.cert["verdict"], true);
  }
}

TEST(Pipeline, CertificatesAreDeterministic) {
  auto a = run_job(flagship("construct"));
  auto b = run_job(flagship("construct"));
  EXPECT_EQ(a.cert.dump(2), b.cert.dump(2));
  auto js = flagship("construct");
  js.precision = 2 * a.cert["precision"].get<long>();
  auto c = run_job(js);
  auto strip = [](ojson j) {
    j.erase("precision");
    return j.dump(2);
  };
  EXPECT_EQ(strip(a.cert), strip(c.cert));
}

}  // namespace
