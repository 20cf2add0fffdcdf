#include <gtest/gtest.h>

#include "qseidel/json_io.hpp"

using namespace qseidel;

TEST(JsonIo, RootSystem) {
  auto j = to_json(*parse_root_system("A2"));
  EXPECT_EQ(j.dump(),
            R"({"cartan":[[2,-1],[-1,2]],"highest_root":[1,1],"involution":[2,1],"minuscule":[1,2],)"
            R"("positive_roots":[[0,1],[1,0],[1,1]],"rank":2,"type":"A2"})");
}

TEST(JsonIo, AffineElementRoundTrip) {
  auto rs = parse_root_system("B3");
  ExtAffElt x(WeylElt::from_word(rs, {1, 2, 3}), {-1, 2, 0});
  EXPECT_EQ(ext_aff_from_json(rs, to_json(x)), x);
  EXPECT_THROW(ext_aff_from_json(rs, Json::parse(R"({"w":[4],"lambda":[0,0,0]})")), Error);
  EXPECT_THROW(ext_aff_from_json(rs, Json::parse(R"({"w":[]})")), Error);
  EXPECT_THROW(ext_aff_from_json(rs, Json::parse(R"({"w":[],"lambda":[0]})")), Error);
}

TEST(JsonIo, PolynomialRoundTrip) {
  SPoly p = 3 * SPoly::variable(2, 1) * SPoly::variable(2, 2) - SPoly::constant(2, 2);
  EXPECT_EQ(to_json(p).dump(), R"({"0,0":-2,"1,1":3})");
  EXPECT_EQ(spoly_from_json(to_json(p), 2), p);
  EXPECT_EQ(spoly_from_json(Json(5), 2), SPoly::constant(2, 5));
  EXPECT_THROW(spoly_from_json(Json::parse(R"({"1":1})"), 2), Error);
  EXPECT_THROW(spoly_from_json(Json::parse(R"({"a,1":1})"), 2), Error);
  EXPECT_THROW(spoly_from_json(Json::parse(R"({"-1,0":1})"), 2), Error);
}

TEST(JsonIo, ClassRoundTrip) {
  auto rs = parse_root_system("A2");
  ParabolicSet P(*rs, {1});
  QuantumOps ops(rs, P);
  QHClass c = ops.sigma(WeylElt::from_word(rs, {2, 1}), {1}) + ops.unit().scale(SPoly::linear({2, -1}));
  auto j = to_json(c);
  EXPECT_EQ(qh_class_from_json(rs, P, j), c);
  EXPECT_THROW(qh_class_from_json(parse_root_system("B2"), ParabolicSet(*parse_root_system("B2"), {1}), j), Error);
  EXPECT_THROW(qh_class_from_json(rs, ParabolicSet::borel(*rs), j), Error);
  auto minimal = Json::parse(R"({"terms":[{"w":[1]}]})");
  EXPECT_EQ(qh_class_from_json(rs, P, minimal), ops.sigma(WeylElt::from_word(rs, {1})));
}

TEST(JsonIo, TextForms) {
  auto rs = parse_root_system("A1");
  QuantumOps ops(rs, ParabolicSet::borel(*rs));
  auto s1 = WeylElt::from_word(rs, {1});
  EXPECT_EQ(to_text(QHClass(rs, ops.parabolic())), "0");
  EXPECT_EQ(to_text(ops.unit()), "sigma(e)");
  EXPECT_EQ(to_text(ops.chevalley_multiply(1, ops.sigma(s1), true)), "q1 sigma(e) + (2*w1) sigma(s1)");
  EXPECT_EQ(to_text(ops.sigma(s1).scale(SPoly::constant(1, -3))), "-3 sigma(s1)");
  EXPECT_EQ(to_text(ops.sigma(s1, {2}).scale(SPoly::constant(1, -1))), "-q1^2 sigma(s1)");
  ParabolicSet P(*parse_root_system("A3"), {1, 3});
  EXPECT_EQ(q_string({2, 1}, P), "q1^2 q3");
  EXPECT_EQ(q_string({0, 0}, P), "");
  EXPECT_EQ(to_text(ExtAffElt(s1, {-2})), "s1 t(-2)");
}
