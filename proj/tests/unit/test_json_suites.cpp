#include <gtest/gtest.h>

#include "lieforge/suites.hpp"
#include "../support/generators.hpp"

using namespace lieforge;

TEST(Json, MatrixRoundTrip) {
  gen::Gen g(70);
  for (int n = 0; n < 50; ++n) {
    const CMatrix m = g.matrix(1 + g.index(5), 10.0);
    EXPECT_EQ(matrix_from_json(json::parse(to_json(m).dump())), m);
  }
  const auto j = to_json(pauli(2));
  EXPECT_EQ(j["dim"], 2);
  EXPECT_EQ(j["entries"][0][1], json::array({0.0, -1.0}));
}

TEST(Json, MatrixParseErrors) {
  EXPECT_THROW(matrix_from_json(json::parse(R"({"dim": 2})")), ParseError);
  EXPECT_THROW(matrix_from_json(json::parse(R"({"dim": 0, "entries": []})")), ParseError);
  EXPECT_THROW(matrix_from_json(json::parse(R"({"dim": 2, "entries": [[[0,0],[0,0]]]})")), ParseError);
  EXPECT_THROW(matrix_from_json(json::parse(R"({"dim": 1, "entries": [[[0]]]})")), ParseError);
  EXPECT_THROW(matrix_from_json(json::parse(R"({"dim": 1, "entries": [["a"]]})")), ParseError);
}

TEST(Json, GeneratorSetRoundTrip) {
  for (const auto& s : {j2(), k2(), gamma(), sun_generators(3), affine_generators().p5}) {
    const auto back = generator_set_from_json(json::parse(to_json(s).dump()));
    EXPECT_EQ(back.rep(), s.rep());
    EXPECT_EQ(back.kind(), s.kind());
    EXPECT_EQ(back.members(), s.members());
  }
  EXPECT_THROW(generator_set_from_json(json::parse(R"({"rep":"Nope","kind":"Vector","members":[]})")), ParseError);
}

TEST(Json, ReportRoundTrip) {
  const auto rs = check_su2_fundamental(GeneratorSet(j2().rep(), j2().kind(), {pauli(1), j2()[2], j2()[3]}));
  for (const auto& r : rs) {
    const auto back = report_from_json(json::parse(to_json(r).dump()));
    EXPECT_EQ(back.identity, r.identity);
    EXPECT_EQ(back.max_residual, r.max_residual);
    EXPECT_EQ(back.passed, r.passed);
    EXPECT_EQ(back.witness.has_value(), r.witness.has_value());
  }
  auto bad = to_json(rs.front());
  bad["passed"] = !bad["passed"].get<bool>();
  EXPECT_THROW(report_from_json(bad), ParseError);
}

TEST(Json, CoeffTensorLayout) {
  const auto [j, k] = rep22_jk();
  const auto t = extract_coeffs(rep22_v(), k);
  const auto js = to_json(t);
  EXPECT_EQ(js["source_kind"], "FromK");
  ASSERT_EQ(js["values"].size(), 4u);
  ASSERT_EQ(js["values"][0].size(), 3u);
  ASSERT_EQ(js["values"][0][0].size(), 4u);
  // b^{1,1,4} = -i
  EXPECT_EQ(js["values"][0][0][3], json::array({0.0, -1.0}));
}

TEST(Perturbation, Parse) {
  const auto p = Perturbation::parse("J22:2:1:3:0.5:-1");
  EXPECT_EQ(p.set, "J22");
  EXPECT_EQ(p.member, 2u);
  EXPECT_EQ(p.row, 1u);
  EXPECT_EQ(p.col, 3u);
  EXPECT_EQ(p.delta, CScalar(0.5, -1.0));
  EXPECT_EQ(Perturbation::parse("P+:1:0:0").delta, CScalar(1e-6, 0.0));
  EXPECT_THROW(Perturbation::parse("J22:1"), ParseError);
  EXPECT_THROW(Perturbation::parse("J22:x:0:0"), ParseError);
  EXPECT_THROW(Perturbation::parse("J22:1:0:0:abc"), ParseError);
}

TEST(Suites, DefaultRunsPass) {
  SuiteConfig cfg;
  for (const auto& name : suite_names()) {
    const auto r = run_suite(name, cfg);
    EXPECT_FALSE(r.reports.empty()) << name;
    for (const auto& rep : r.reports) EXPECT_TRUE(rep.passed) << name << ": " << rep.label;
  }
  EXPECT_GE(run_suite("verify", cfg).reports.size(), 17u);
}

TEST(Suites, AlphaVariantsPass) {
  for (double alpha : {-1.0, 2.0, 0.5}) {
    SuiteConfig cfg;
    cfg.alpha = alpha;
    cfg.trials = 50;
    EXPECT_TRUE(run_suite("all", cfg).all_passed()) << alpha;
  }
}

TEST(Suites, ConfigValidation) {
  SuiteConfig cfg;
  cfg.trials = 0;
  EXPECT_THROW(run_suite("verify", cfg), ParamError);
  cfg.trials = 1;
  cfg.alpha = 0.0;
  EXPECT_THROW(run_suite("verify", cfg), ParamError);
  EXPECT_THROW(run_suite("nope", SuiteConfig{}), ParamError);
  SuiteConfig unknown;
  unknown.perturb = Perturbation::parse("Q:1:0:0");
  EXPECT_THROW(run_suite("verify", unknown), ParamError);
}

TEST(Suites, DeterministicJson) {
  SuiteConfig cfg;
  cfg.trials = 20;
  auto dump = [&] {
    std::string s;
    const auto r = run_suite("all", cfg);
    for (const auto& rep : r.reports) s += to_json(rep).dump() + "\n";
    for (const auto& a : r.artifacts) s += a.data.dump() + "\n";
    return s;
  };
  EXPECT_EQ(dump(), dump());
}

TEST(Suites, SingleTrialIsDeterministic) {
  SuiteConfig cfg;
  cfg.trials = 1;
  const auto a = run_suite("invariants", cfg), b = run_suite("invariants", cfg);
  ASSERT_EQ(a.reports.size(), b.reports.size());
  for (std::size_t n = 0; n < a.reports.size(); ++n) {
    EXPECT_EQ(a.reports[n].max_residual, b.reports[n].max_residual);
    EXPECT_EQ(a.reports[n].note, b.reports[n].note);
  }
}

TEST(Suites, TransferEmitsArtifacts) {
  const auto r = run_suite("transfer", SuiteConfig{});
  std::vector<std::string> names;
  for (const auto& a : r.artifacts) names.push_back(a.name);
  for (const char* want : {"J4", "K4", "coeffs_a", "coeffs_b", "coeffs_a_P+", "coeffs_b_P-"})
    EXPECT_NE(std::find(names.begin(), names.end(), want), names.end()) << want;
  EXPECT_EQ(format_matrix(pauli(2)), "[[0, -i], [i, 0]]");
  EXPECT_EQ(format_matrix(j2()[3]), "[[0.5, 0], [0, -0.5]]");
}

TEST(Suites, PerturbationFails) {
  SuiteConfig cfg;
  cfg.trials = 10;
  cfg.perturb = Perturbation::parse("gamma:4:0:2");
  EXPECT_FALSE(run_suite("all", cfg).all_passed());
}
