#include <gtest/gtest.h>

#include <limits>

#include "qseidel/lattice.hpp"
#include "qseidel/spoly.hpp"

using namespace qseidel;

TEST(Lattice, VectorArithmetic) {
  IVec a{1, -2, 3}, b{0, 2, -3};
  EXPECT_EQ(a + b, (IVec{1, 0, 0}));
  EXPECT_EQ(a - b, (IVec{1, -4, 6}));
  EXPECT_EQ(3 * a, (IVec{3, -6, 9}));
  EXPECT_EQ(dot(a, b), -13);
  EXPECT_TRUE(is_positive(IVec{0, 1}));
  EXPECT_FALSE(is_positive(IVec{0, 0}));
  EXPECT_TRUE(is_negative(IVec{-1, 0}));
  EXPECT_THROW(dot(a, IVec{1}), Error);
}

TEST(Lattice, OverflowIsReported) {
  const auto big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(IVec{big} + IVec{1}, Error);
  EXPECT_THROW(2 * IVec{big}, Error);
}

TEST(Lattice, InverseOfCartanMatrices) {
  // A2 and B2 Cartan matrices; inverse times matrix is the identity.
  IMat a2(2);
  a2(0, 0) = 2, a2(0, 1) = -1, a2(1, 0) = -1, a2(1, 1) = 2;
  auto inv = invert(a2);
  EXPECT_EQ(inv.den, 3);
  IMat prod = inv.num * a2;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) EXPECT_EQ(prod(i, j), i == j ? 3 : 0);
  IVec x;
  EXPECT_TRUE(inv.solve_integral(IVec{3, 0}, x));
  EXPECT_EQ(x, (IVec{2, 1}));
  EXPECT_FALSE(inv.solve_integral(IVec{1, 0}, x));
}

TEST(Lattice, RationalNormalizes) {
  Rational r(4, -6);
  EXPECT_EQ(r.num, -2);
  EXPECT_EQ(r.den, 3);
  EXPECT_EQ(r + Rational(2, 3), Rational(0));
  EXPECT_THROW(Rational(1, 0), Error);
}

TEST(SPoly, RingOperations) {
  SPoly w1 = SPoly::variable(2, 1), w2 = SPoly::variable(2, 2);
  SPoly p = w1 + w2;
  SPoly sq = p * p;
  EXPECT_EQ(sq, w1 * w1 + 2 * (w1 * w2) + w2 * w2);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(SPoly::linear({2, -1}), 2 * w1 - w2);
  EXPECT_EQ((3 * w1 + SPoly::constant(2, 5)).constant_term(), 5);
}

TEST(SPoly, LinearSubstitution) {
  // varpi1 -> varpi1 - alpha1 with alpha1 = (2,-1) in A2 weight coordinates.
  SPoly w1 = SPoly::variable(2, 1);
  SPoly img = (w1 * w1).substitute_linear({IVec{-1, 1}, IVec{0, 1}});
  SPoly lin = SPoly::linear({-1, 1});
  EXPECT_EQ(img, lin * lin);
}

TEST(SPoly, TextForm) {
  SPoly p = 2 * SPoly::variable(2, 1) - SPoly::variable(2, 2) * SPoly::variable(2, 2) + SPoly::constant(2, 3);
  EXPECT_EQ(SPoly(2).to_string(), "0");
  EXPECT_NE(p.to_string().find("w2^2"), std::string::npos);
  EXPECT_NE(p.to_string().find("2*w1"), std::string::npos);
}
