#include <gtest/gtest.h>

#include <random>

#include "qseidel/nilhecke.hpp"

using namespace qseidel;

namespace {

SPoly random_poly(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), expo(0, 2);
  SPoly p(n);
  for (int t = 0; t < 3; ++t) {
    SPoly::Monomial m(n, 0);
    for (auto& e : m) e = expo(rng);
    p.add_term(m, coef(rng));
  }
  return p;
}

std::vector<int> random_word(int rank, std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> node(0, rank);
  std::vector<int> w;
  for (int k = 0; k < len; ++k) w.push_back(node(rng));
  return w;
}

}  // namespace

TEST(NilHecke, DividedDifferenceOracle) {
  std::mt19937 rng(1);
  for (const char* name : {"A2", "B2", "G2", "C3"}) {
    NilHecke nh(parse_root_system(name));
    for (int i = 0; i <= nh.nvars(); ++i)
      for (int k = 0; k < 20; ++k) {
        SPoly f = random_poly(nh.nvars(), rng);
        EXPECT_EQ(nh.simple_root_scalar(i) * nh.divided_difference(i, f), f - nh.reflect(i, f)) << name << i;
      }
  }
  NilHecke a2(parse_root_system("A2"));
  EXPECT_EQ(a2.divided_difference(1, SPoly::variable(2, 1)), SPoly::constant(2, 1));
  EXPECT_TRUE(a2.divided_difference(1, SPoly::variable(2, 2)).is_zero());
}

TEST(NilHecke, ReflectionIsInvolution) {
  std::mt19937 rng(2);
  NilHecke nh(parse_root_system("B3"));
  for (int i = 0; i <= 3; ++i) {
    SPoly f = random_poly(3, rng);
    EXPECT_EQ(nh.reflect(i, nh.reflect(i, f)), f);
    EXPECT_EQ(nh.reflect(i, nh.simple_root_scalar(i)), -nh.simple_root_scalar(i));
  }
}

TEST(NilHecke, Relations) {
  for (const char* name : {"A1", "A2", "B2", "G2"}) {
    NilHecke nh(parse_root_system(name));
    SCOPED_TRACE(name);
    for (int i = 0; i <= nh.nvars(); ++i) {
      EXPECT_TRUE(nh.mul(nh.A(i), nh.A(i)).is_zero());
      auto s = nh.embed_group(nh.affine().simple_reflection(i));
      EXPECT_EQ(nh.mul(s, s), nh.one());
      // A_i f - (s_i f) A_i = d_i f
      SPoly f = SPoly::variable(nh.nvars(), 1) * SPoly::variable(nh.nvars(), nh.nvars());
      auto lhs = nh.mul(nh.A(i), nh.scalar(f)) - nh.mul(nh.scalar(nh.reflect(i, f)), nh.A(i));
      EXPECT_EQ(lhs, nh.scalar(nh.divided_difference(i, f)));
    }
  }
  // A2 affine braid relations A_i A_j A_i = A_j A_i A_j.
  NilHecke nh(parse_root_system("A2"));
  for (int i = 0; i <= 2; ++i)
    for (int j = i + 1; j <= 2; ++j)
      EXPECT_EQ(nh.mul(nh.mul(nh.A(i), nh.A(j)), nh.A(i)), nh.mul(nh.mul(nh.A(j), nh.A(i)), nh.A(j)));
}

TEST(NilHecke, EmbeddingIsMultiplicative) {
  std::mt19937 rng(4);
  for (const char* name : {"A2", "B2"}) {
    NilHecke nh(parse_root_system(name));
    const auto& aff = nh.affine();
    for (int k = 0; k < 15; ++k) {
      auto x = aff.from_word(random_word(nh.nvars(), rng, 2));
      auto y = aff.from_word(random_word(nh.nvars(), rng, 2));
      EXPECT_EQ(nh.mul(nh.embed_group(x), nh.embed_group(y)), nh.embed_group(x * y));
    }
  }
}

TEST(NilHecke, CentralConjugation) {
  NilHecke nh(parse_root_system("A3"));
  const auto& aff = nh.affine();
  for (int z : {1, 2, 3}) {
    auto t = nh.central({z});
    auto tinv = nh.central(aff.central_inverse({z}));
    EXPECT_EQ(nh.mul(t, tinv), nh.one());
    for (int i = 0; i <= 3; ++i)
      EXPECT_EQ(nh.mul(nh.mul(t, nh.A(i)), tinv), nh.A(aff.central_dynkin_action({z}, i)));
  }
}

TEST(NilHecke, ExpansionCap) {
  NilHecke nh(parse_root_system("A1"), 2);
  const auto& aff = nh.affine();
  EXPECT_NO_THROW(nh.embed_group(aff.from_word({0, 1})));
  EXPECT_THROW(nh.embed_group(aff.from_word({0, 1, 0})), Error);
}

TEST(NilHecke, XiAction) {
  auto rs = parse_root_system("A1");
  NilHecke nh(rs);
  const auto& aff = nh.affine();
  XiVector unit;
  unit.add(aff.identity(), SPoly::constant(1, 1));
  XiVector expect;
  expect.add(aff.simple_reflection(0), SPoly::constant(1, 1));
  EXPECT_EQ(nh.act_on_xi(aff.simple_reflection(0), unit), expect);
  EXPECT_TRUE(nh.act_on_xi(aff.simple_reflection(1), unit).is_zero());
  EXPECT_THROW(unit.add(aff.simple_reflection(1), SPoly::constant(1, 1)), Error);
  EXPECT_TRUE(nh.mod_Jtilde(nh.A(1)).is_zero());
  EXPECT_EQ(nh.mod_Jtilde(nh.A(0)), nh.A(0));
}

TEST(NilHecke, ExplicitActionMatchesRing) {
  std::mt19937 rng(6);
  for (const char* name : {"A2", "B2", "A3"}) {
    NilHecke nh(parse_root_system(name));
    const auto& aff = nh.affine();
    const int n = nh.nvars();
    for (int k = 0; k < 25; ++k) {
      XiVector v;
      for (int t = 0; t < 2; ++t) {
        auto y = aff.from_word(random_word(n, rng, 3));
        // Push y to the minimal element of y W.
        for (bool changed = true; changed;) {
          changed = false;
          for (int i = 1; i <= n; ++i)
            if (aff_length(y * aff.simple_reflection(i)) < aff_length(y)) {
              y = y * aff.simple_reflection(i);
              changed = true;
            }
        }
        v.add(y, random_poly(n, rng));
      }
      auto x = aff.from_word(random_word(n, rng, 2));
      EXPECT_EQ(nh.act_on_xi(x, v), nh.act_via_ring(nh.A_tilde(x), v)) << name << " " << x.to_string();
    }
  }
}
