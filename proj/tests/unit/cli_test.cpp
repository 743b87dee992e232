#include <gtest/gtest.h>

#include "cli.hpp"
#include "support.hpp"

namespace spinlift::cli {
namespace {

using spinlift::testing::boost01;
using spinlift::testing::e;
using spinlift::testing::max_entry;
using spinlift::testing::rot23;

Json matrix_doc(const Mat4& m) {
  Json rows = Json::array();
  for (int r = 0; r < 4; ++r) rows.push_back({m(r, 0), m(r, 1), m(r, 2), m(r, 3)});
  return rows;
}

Mat4 read_matrix(const Json& rows) {
  Mat4 m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = rows.at(r).at(c).get<double>();
  return m;
}

Json run_command(Command c, const Json& doc, const RequestOverrides& o = {}) {
  return run(parse_request(c, doc, o));
}

TEST(ParseRequest, Defaults) {
  const JobRequest r = parse_request(Command::kLift, {{"matrix", matrix_doc(Mat4::Identity())}}, {});
  EXPECT_EQ(r.metric, Signature::kPlusMinus);
  EXPECT_EQ(r.rep, RepKind::kGamma);
  EXPECT_EQ(r.tol, 1e-9);
  EXPECT_EQ(r.matrix, Mat4(Mat4::Identity()));
}

TEST(ParseRequest, OverridesWin) {
  RequestOverrides o;
  o.metric = Signature::kMinusPlus;
  o.rep = RepKind::kRegular;
  o.tol = 1e-6;
  const Json doc = {{"matrix", matrix_doc(Mat4::Identity())}, {"metric", "pmmm"}, {"rep", "gamma"}, {"tol", 1e-3}};
  const JobRequest r = parse_request(Command::kLift, doc, o);
  EXPECT_EQ(r.metric, Signature::kMinusPlus);
  EXPECT_EQ(r.rep, RepKind::kRegular);
  EXPECT_EQ(r.tol, 1e-6);
}

TEST(ParseRequest, RejectsMalformedInput) {
  const Json ok = matrix_doc(Mat4::Identity());
  EXPECT_THROW(parse_request(Command::kLift, Json::array(), {}), InputError);
  EXPECT_THROW(parse_request(Command::kLift, Json::object(), {}), InputError);
  EXPECT_THROW(parse_request(Command::kLift, {{"matrix", {{1, 0}, {0, 1}}}}, {}), InputError);
  EXPECT_THROW(parse_request(Command::kLift, {{"matrix", ok}, {"metric", "euclid"}}, {}), InputError);
  EXPECT_THROW(parse_request(Command::kLift, {{"matrix", ok}, {"rep", "weyl"}}, {}), InputError);
  EXPECT_THROW(parse_request(Command::kLift, {{"matrix", ok}, {"tol", -1.0}}, {}), InputError);
  EXPECT_THROW(parse_request(Command::kLift, {{"matrix", ok}, {"seed", -4}}, {}), InputError);
  EXPECT_THROW(parse_request(Command::kLift, {{"matrix", ok}, {"seed", 1.5}}, {}), InputError);
  EXPECT_THROW(parse_request(Command::kLift, {{"matrix", ok}, {"command", "decompose"}}, {}), InputError);
  Json text = ok;
  text[0][0] = "one";
  EXPECT_THROW(parse_request(Command::kLift, {{"matrix", text}}, {}), InputError);
  EXPECT_NO_THROW(parse_request(Command::kSelftest, Json::object(), {}));
}

TEST(Commands, DecomposeWorkedExample) {
  const Metric g;
  const Json out = run_command(Command::kDecompose, {{"matrix", matrix_doc((boost01(g) + rot23(g)).matrix())}});
  EXPECT_EQ(out["invariants"]["mu_plus"].get<double>(), 1.0);
  EXPECT_EQ(out["invariants"]["mu_minus"].get<double>(), -1.0);
  EXPECT_EQ(read_matrix(out["result"]["L_plus"]), boost01(g).matrix());
  for (const auto& [key, value] : out["diagnostics"].items()) EXPECT_LT(std::abs(value.get<double>()), 1e-10) << key;
}

TEST(Commands, LiftIdentity) {
  const Json out = run_command(Command::kLift, {{"matrix", matrix_doc(Mat4::Identity())}});
  EXPECT_EQ(out["branch"], "simple/identity");
  const Json& sigma = out["result"]["sigma"];
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      EXPECT_EQ(sigma[r][c][0].get<double>(), r == c ? 1.0 : 0.0);
      EXPECT_EQ(sigma[r][c][1].get<double>(), 0.0);
    }
}

TEST(Commands, InvariantsWedge) {
  const Metric g;
  const Json out = run_command(Command::kInvariants, {{"matrix", matrix_doc(boost01(g).matrix())}, {"rep", "gamma"}});
  EXPECT_EQ(out["invariants"]["recovered_tr2"].get<double>(), -1.0);
  EXPECT_EQ(out["invariants"]["recovered_det"].get<double>(), 0.0);
  EXPECT_EQ(out["invariants"]["identity_trace"].get<double>(), 4.0);
}

TEST(Commands, DomainErrorsPropagate) {
  const Metric g;
  try {
    run_command(Command::kDecompose, {{"matrix", matrix_doc(boost01(g).matrix())}});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kSimpleInput);
    const Json doc = error_document(to_string(err.code()), err.what());
    EXPECT_EQ(doc["error"]["code"], "SimpleInput");
  }
  EXPECT_THROW(run_command(Command::kLift, {{"matrix", matrix_doc(2.0 * Mat4::Identity())}}), Error);
  EXPECT_THROW(run_command(Command::kExpSpin, {{"matrix", matrix_doc(Mat4::Identity())}}), Error);
}

TEST(Commands, RegularRepOutputIsReal) {
  const Metric g;
  const Json out = run_command(Command::kLift, {{"matrix", matrix_doc(exp_series(boost01(g).matrix()))}, {"rep", "regular"}});
  EXPECT_EQ(out["result"]["sigma"].size(), 16u);
  EXPECT_TRUE(out["result"]["sigma"][0][0].is_number());
}

TEST(Dump, SeventeenDigitsAndStableLayout) {
  const Json doc = {{"x", 0.1}, {"row", {1.0, 2.5}}, {"nested", {{"flag", true}}}};
  EXPECT_EQ(dump(doc),
            "{\n  \"x\": 0.10000000000000001,\n  \"row\": [1, 2.5],\n  \"nested\": {\n    \"flag\": true\n  }\n}\n");
  const double x = 0.1 + 0.2;
  EXPECT_EQ(Json::parse(dump({{"v", x}}))["v"].get<double>(), x);
}

TEST(Commands, DeterministicOutput) {
  Sampler s(91);
  const Json doc = {{"matrix", matrix_doc(s.transformation(Metric()).matrix())}};
  EXPECT_EQ(dump(run_command(Command::kLift, doc)), dump(run_command(Command::kLift, doc)));
  RequestOverrides o;
  o.cases = 20;
  o.seed = 7;
  EXPECT_EQ(dump(run_command(Command::kSelftest, Json::object(), o)),
            dump(run_command(Command::kSelftest, Json::object(), o)));
}

TEST(Commands, SelftestPasses) {
  for (const char* metric : {"pmmm", "mppp"}) {
    RequestOverrides o;
    o.cases = 50;
    const Json out = run_command(Command::kSelftest, {{"metric", metric}, {"seed", 3}}, o);
    EXPECT_TRUE(out["passed"].get<bool>()) << dump(out);
    EXPECT_EQ(out["checks"].size(), 10u);
  }
}

TEST(Commands, SelftestPassesAcrossScales) {
  for (double scale : {0.01, 0.1, 3.0}) {
    RequestOverrides o;
    o.cases = 300;
    o.scale = scale;
    o.seed = 11;
    const Json out = run_command(Command::kSelftest, Json::object(), o);
    EXPECT_TRUE(out["passed"].get<bool>()) << "scale " << scale << "\n" << dump(out);
  }
}

TEST(Commands, LogExpLiftConsistency) {
  const Metric g;
  Sampler s(92);
  for (int i = 0; i < 100; ++i) {
    const LorentzTransformation lam =
        i % 2 ? s.transformation(g) : spinlift::testing::exp_transform(s.simple_bivector(g));
    const Json lam_doc = {{"matrix", matrix_doc(lam.matrix())}};
    const Json log = run_command(Command::kLog, lam_doc);
    const Mat4 l = read_matrix(log["result"]["L"]);
    const Json exp = run_command(Command::kExpSpin, {{"matrix", matrix_doc(l)}});
    const Json lifted = run_command(Command::kLift, lam_doc);

    const bool simple = log["simple"].get<bool>();
    EXPECT_EQ(simple, i % 2 == 0) << i;
    EXPECT_EQ(exp["invariants"]["simple"].get<bool>(), simple) << i;
    EXPECT_EQ(lifted["invariants"]["simple"].get<bool>(), simple) << i;
    EXPECT_EQ(exp["branch"].get<std::string>().starts_with("simple/"), simple) << i;
    EXPECT_EQ(lifted["branch"].get<std::string>().starts_with("simple/"), simple) << i;

    // The lift is reported sign-normalized; exp(sigma(L)) is not.
    double plus = 0.0, minus = 0.0;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        for (int k = 0; k < 2; ++k) {
          const double a = exp["result"]["exp_sigma"][r][c][k].get<double>();
          const double b = lifted["result"]["sigma"][r][c][k].get<double>();
          plus = std::max(plus, std::abs(a - b));
          minus = std::max(minus, std::abs(a + b));
        }
    const double worst = std::min(plus, minus);
    EXPECT_LE(worst, 1e-8 * lam.norm()) << i;
  }
}

}  // namespace
}  // namespace spinlift::cli
