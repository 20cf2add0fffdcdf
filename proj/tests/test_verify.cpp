#include <gtest/gtest.h>

#include "qseidel/verify.hpp"

using namespace qseidel;

TEST(Verify, SmithInvariantsMatchCentralGroups) {
  // |P^vee / Q^vee| = det C, with the known group structures.
  EXPECT_EQ(smith_invariants(parse_root_system("A3")->cartan()), (std::vector<std::int64_t>{4}));
  EXPECT_EQ(smith_invariants(parse_root_system("D4")->cartan()), (std::vector<std::int64_t>{2, 2}));
  EXPECT_EQ(smith_invariants(parse_root_system("E6")->cartan()), (std::vector<std::int64_t>{3}));
  EXPECT_EQ(smith_invariants(parse_root_system("D6")->cartan()), (std::vector<std::int64_t>{2, 2}));
  EXPECT_EQ(smith_invariants(parse_root_system("D5")->cartan()), (std::vector<std::int64_t>{4}));
  EXPECT_TRUE(smith_invariants(parse_root_system("G2")->cartan()).empty());
  EXPECT_TRUE(smith_invariants(parse_root_system("E8")->cartan()).empty());
}

TEST(Verify, Helpers) {
  EXPECT_EQ(box(2, -1, 1).size(), 9u);
  EXPECT_EQ(box(3, 0, 1).size(), 8u);
  auto a3 = parse_root_system("A3");
  EXPECT_EQ(class_order(*a3, a3->fundamental_coweight(1)), 4);
  EXPECT_EQ(class_order(*a3, a3->fundamental_coweight(2)), 2);
  RunConfig cfg;
  EXPECT_EQ(parabolics(cfg, *a3).size(), 7u);
  cfg.root_system = "A3";
  cfg.parabolic = {2};
  EXPECT_EQ(parabolics(cfg, *a3).size(), 1u);
  EXPECT_EQ(catalog(cfg, 4).size(), 1u);
  RunConfig all;
  all.max_rank = 2;
  EXPECT_EQ(catalog(all, 4).size(), 4u);  // A1 A2 B2 G2
}

TEST(Verify, ConfigValidation) {
  RunConfig c;
  EXPECT_NO_THROW(validate(c));
  c.radius = 0;
  EXPECT_THROW(validate(c), Error);
  c = RunConfig{};
  c.parabolic = {1};
  EXPECT_THROW(validate(c), Error);
  c.root_system = "A2";
  c.parabolic = {3};
  EXPECT_THROW(validate(c), Error);
  c = RunConfig{};
  c.suite = "nope";
  EXPECT_THROW(run_suites(c), Error);
  auto j = Json::parse(R"({"root_system":"B2","radius":3,"suite":"table","seed":9})");
  RunConfig r = run_config_from_json(j);
  EXPECT_EQ(r.root_system, "B2");
  EXPECT_EQ(r.radius, 3);
  EXPECT_EQ(r.suite, "table");
  EXPECT_EQ(r.seed, 9u);
  EXPECT_EQ(r.max_rank, 4);
}

TEST(Verify, SuiteResultBookkeeping) {
  SuiteResult r;
  EXPECT_FALSE(r.passed());
  r.check(true, [] { return std::string("x"); });
  EXPECT_TRUE(r.passed());
  for (int k = 0; k < 20; ++k) r.check(false, [k] { return std::to_string(k); });
  EXPECT_EQ(r.failures, 20u);
  EXPECT_EQ(r.messages.size(), SuiteResult::kMaxMessages);
  EXPECT_FALSE(r.passed());
  SuiteResult g;
  guarded(g, "ctx", [] { throw Error("boom"); });
  EXPECT_EQ(g.failures, 1u);
  EXPECT_NE(g.messages.front().find("boom"), std::string::npos);
}

TEST(Verify, CheapSuitesPass) {
  RunConfig cfg;
  cfg.max_rank = 2;
  for (const char* s : {"rootsys", "table", "minuscule", "psi", "equivariant"}) {
    cfg.suite = s;
    auto res = run_suites(cfg);
    ASSERT_EQ(res.size(), 1u);
    EXPECT_TRUE(res[0].passed()) << s << ": " << to_json(res[0]).dump();
  }
}

TEST(Verify, EquivariantFindingsReported) {
  RunConfig cfg;
  cfg.suite = "equivariant";
  auto res = run_suites(cfg);
  ASSERT_EQ(res.size(), 1u);
  ASSERT_EQ(res[0].findings.size(), 2u);
  EXPECT_NE(res[0].findings[0].find("(2*w1) sigma(s1)"), std::string::npos);
  EXPECT_NE(res[0].findings[1].find("(-2*w1) q1 sigma(e)"), std::string::npos);
}
