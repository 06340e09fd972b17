#include <gtest/gtest.h>

#include "whf/job.hpp"

using namespace whf;
using nlohmann::json;

namespace {

JobOutcome run(const char* text, const JobOverrides& o = {}) { return run_job_text(text, o); }

}  // namespace

TEST(Job, DocumentedFactorizeExample) {
  const JobOutcome out = run(R"J({"ring":"Q","mode":"factorize","window":16,"symbol":{"factors":[
      {"kind":"antiholo","alpha":"1/2"},{"kind":"mono","p":1,"u":"1"},{"kind":"holo","beta":"1/3"}]}})J");
  ASSERT_EQ(out.exit_code, kExitOk) << out.output.dump();
  const json& r = out.output;
  EXPECT_EQ(r["pi_minus"], json::parse(R"([{"n":-1,"c":"-1/2"},{"n":0,"c":"1"}])"));
  EXPECT_EQ(r["pi_tilde"], json::parse(R"([{"n":1,"c":"1"}])"));
  EXPECT_EQ(r["pi_plus"], json::parse(R"([{"n":0,"c":"1"},{"n":1,"c":"-1/3"}])"));
  EXPECT_EQ(r["winding"], 1);
  EXPECT_EQ(r["residual"], "0");
}

TEST(Job, UnitSymbolInEveryRing) {
  for (const char* ring : {R"("Q")", R"("C")", R"("Q^3")", R"J({"base":"C","arity":2})J"}) {
    const std::string text = std::string(R"J({"ring":)J") + ring + R"(,"symbol":{"factors":[]}})";
    const JobOutcome out = run_job_text(text);
    ASSERT_EQ(out.exit_code, kExitOk) << ring << " " << out.output.dump();
    for (const char* k : {"pi_minus", "pi_tilde", "pi_plus"}) {
      ASSERT_EQ(out.output[k].size(), 1u) << ring;
      EXPECT_EQ(out.output[k][0]["n"], 0);
    }
    EXPECT_EQ(out.output["winding"], 0);
  }
}

TEST(Job, CoefficientsWithInverseAndDirectRoute) {
  const JobOutcome out = run(R"J({"ring":"Q","symbol":{"coefficients":[{"n":0,"c":"1"},{"n":1,"c":"-1/3"}]},
      "inverse":{"coefficients":[{"n":0,"c":"1"},{"n":1,"c":"1/3"},{"n":2,"c":"1/9"},{"n":3,"c":"1/27"},{"n":4,"c":"1/81"}],
                 "window":[-1000000,4]}})J");
  EXPECT_EQ(out.exit_code, kExitOk) << out.output.dump();
  const JobOutcome direct = run(R"J({"ring":"C","route":"direct","symbol":{"factors":[{"kind":"mono","p":1}]}})J");
  ASSERT_EQ(direct.exit_code, kExitOk) << direct.output.dump();
  EXPECT_TRUE(direct.output.contains("tail"));
  EXPECT_EQ(direct.output["winding"], 1);
}

TEST(Job, VerifyRoundTrip) {
  const char* factors = R"([{"kind":"antiholo","alpha":"1/2"},{"kind":"mono","p":1},{"kind":"holo","beta":"1/3"}])";
  const JobOutcome f = run_job_text(std::string(R"J({"ring":"Q","symbol":{"factors":)J") + factors + "}}");
  ASSERT_EQ(f.exit_code, kExitOk);
  json v = {{"ring", "Q"}, {"mode", "verify"}, {"symbol", {{"factors", json::parse(factors)}}}, {"result", f.output}};
  JobOutcome out = run_job(parse_job(v));
  EXPECT_EQ(out.exit_code, kExitOk) << out.output.dump();
  EXPECT_EQ(out.output["residual"], "0");
  v["result"]["pi_plus"] = json::parse(R"([{"n":0,"c":"1"},{"n":1,"c":"-1/4"}])");
  out = run_job(parse_job(v));
  EXPECT_EQ(out.exit_code, kExitNumerical);
}

TEST(Job, OrthogonalMode) {
  const JobOutcome out = run(R"J({"ring":"Q^2","mode":"orthogonal","symbol":{"coefficients":[
      {"n":1,"c":"(1|0)"},{"n":-1,"c":"(0|1)"}]}})J");
  ASSERT_EQ(out.exit_code, kExitOk) << out.output.dump();
  EXPECT_EQ(out.output["n_p_exact"], true);
  EXPECT_EQ(out.output["n_p"], out.output["normal"]);
  EXPECT_TRUE(out.output["winding"].is_null());
}

TEST(Job, OracleCompareSeed42) {
  const JobOutcome out = run(R"J({"mode":"oracle-compare","count":10})J");
  ASSERT_EQ(out.exit_code, kExitOk) << out.output.dump();
  EXPECT_LE(out.output["max_difference"].get<double>(), 1e-8);
  EXPECT_EQ(out.output["windings_agree"], true);
}

TEST(Job, MatrixDump) {
  JobOverrides o;
  o.mode = "matrix-dump";
  const JobOutcome out = run(R"J({"ring":"Q","matrix":"U_R","half_width":3,"symbol":{"factors":[{"kind":"mono","p":1}]}})J", o);
  ASSERT_EQ(out.exit_code, kExitOk) << out.output.dump();
  EXPECT_NE(out.dump.find("-+-"), std::string::npos);
}

TEST(Job, ExitCodes) {
  EXPECT_EQ(run("{").exit_code, kExitValidation);
  EXPECT_EQ(run(R"J({"ring":"Z"})J").exit_code, kExitValidation);
  EXPECT_EQ(run(R"J({"ring":"Q","bogus":1,"symbol":{"factors":[]}})J").exit_code, kExitValidation);
  EXPECT_EQ(run(R"J({"ring":"Q","symbol":{"factors":[{"kind":"holo","beta":"1"}]}})J").exit_code, kExitValidation);
  // Two-sided over Q with no inverse supplied.
  const JobOutcome bad = run(R"J({"ring":"Q","symbol":{"coefficients":[{"n":-1,"c":"-1"},{"n":0,"c":"3"},{"n":1,"c":"-1"}]}})J");
  EXPECT_EQ(bad.exit_code, kExitValidation);
  EXPECT_TRUE(bad.output.contains("error"));
  EXPECT_THROW(parse_mode("sideways"), std::exception);
  EXPECT_EQ(to_string(parse_mode("oracle-compare")), "oracle-compare");
}
