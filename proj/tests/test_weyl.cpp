#include <gtest/gtest.h>

#include <set>

#include "qseidel/weyl.hpp"

using namespace qseidel;

namespace {

WeylElt W(const RootSystemPtr& rs, std::vector<int> word) { return WeylElt::from_word(rs, word); }

std::size_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST(Weyl, GroupArithmetic) {
  auto a2 = parse_root_system("A2");
  auto e = WeylElt::identity(a2);
  auto a = W(a2, {1, 2});
  EXPECT_EQ(e * a, a);
  EXPECT_EQ(W(a2, {1, 2, 1}), W(a2, {2, 1, 2}));
  EXPECT_EQ(W(a2, {1, 2, 1}).length(), 3);
  EXPECT_EQ(a * a.inverse(), e);
  EXPECT_EQ(a.inverse(), W(a2, {2, 1}));
  EXPECT_EQ(W(a2, {1, 1}), e);
  EXPECT_THROW(W(a2, {1}) * W(parse_root_system("B2"), {1}), Error);
}

TEST(Weyl, ActionsAgree) {
  // <w lambda, w alpha> = <lambda, alpha> for coweights and roots.
  auto rs = parse_root_system("B3");
  for (const auto& w : enumerate_weyl(rs))
    for (const auto& a : rs->positive_roots())
      for (int i = 1; i <= 3; ++i) {
        IVec l = rs->fundamental_coweight(i);
        EXPECT_EQ(rs->pairing(w.act_on_coweight(l), w.act_on_root(a)), rs->pairing(l, a));
        EXPECT_EQ(w.inverse_act_on_root(w.act_on_root(a)), a);
      }
}

TEST(Weyl, GroupOrders) {
  EXPECT_EQ(enumerate_weyl(parse_root_system("A3")).size(), factorial(4));
  EXPECT_EQ(enumerate_weyl(parse_root_system("A4")).size(), factorial(5));
  EXPECT_EQ(enumerate_weyl(parse_root_system("B3")).size(), 48u);
  EXPECT_EQ(enumerate_weyl(parse_root_system("C3")).size(), 48u);
  EXPECT_EQ(enumerate_weyl(parse_root_system("D4")).size(), 192u);
  EXPECT_EQ(enumerate_weyl(parse_root_system("G2")).size(), 12u);
  EXPECT_THROW(enumerate_weyl(parse_root_system("A3"), 10), Error);
}

TEST(Weyl, LongestElements) {
  auto a2 = parse_root_system("A2");
  EXPECT_TRUE(longest_element(a2, {}).is_identity());
  EXPECT_EQ(longest_element(a2), W(a2, {1, 2, 1}));
  EXPECT_EQ(longest_element(a2, {2}), W(a2, {2}));
  // Oracle: the unique element of maximal length.
  auto d4 = parse_root_system("D4");
  auto all = enumerate_weyl(d4);
  EXPECT_EQ(longest_element(d4), all.back());
  EXPECT_EQ(longest_element(d4).length(), 12);
}

TEST(Weyl, CosetReduce) {
  auto a2 = parse_root_system("A2");
  ParabolicSet P(*a2, {1});
  auto e = WeylElt::identity(a2);
  auto r0 = coset_reduce(e, P);
  EXPECT_TRUE(r0.rep.is_identity() && r0.levi.is_identity());
  auto r1 = coset_reduce(W(a2, {1, 2, 1}), P);
  EXPECT_EQ(r1.rep, W(a2, {2, 1}));
  EXPECT_EQ(r1.levi, W(a2, {2}));
  auto r2 = coset_reduce(W(a2, {2}), P);
  EXPECT_TRUE(r2.rep.is_identity());
  EXPECT_EQ(r2.levi, W(a2, {2}));
}

TEST(Weyl, MinimalCosetRepresentatives) {
  auto a2 = parse_root_system("A2");
  auto borel = enumerate_minreps(a2, ParabolicSet::borel(*a2));
  EXPECT_EQ(borel.size(), 6u);
  auto p1 = enumerate_minreps(a2, ParabolicSet(*a2, {1}));
  ASSERT_EQ(p1.size(), 3u);
  EXPECT_EQ(p1[0], WeylElt::identity(a2));
  EXPECT_EQ(p1[1], W(a2, {1}));
  EXPECT_EQ(p1[2], W(a2, {2, 1}));
  auto a3 = parse_root_system("A3");
  EXPECT_EQ(enumerate_minreps(a3, ParabolicSet(*a3, {2})).size(), 6u);
}

TEST(Weyl, CosetBijectionProperty) {
  for (const char* name : {"A3", "B3", "G2"}) {
    auto rs = parse_root_system(name);
    auto all = enumerate_weyl(rs);
    for (int mask = 1; mask < (1 << rs->rank()); ++mask) {
      std::vector<int> nodes;
      for (int i = 0; i < rs->rank(); ++i)
        if (mask >> i & 1) nodes.push_back(i + 1);
      ParabolicSet P(*rs, nodes);
      std::set<std::pair<WeylElt, WeylElt>> seen;
      for (const auto& w : all) {
        auto [rep, u] = coset_reduce(w, P);
        EXPECT_EQ(rep * u, w);
        EXPECT_EQ(rep.length() + u.length(), w.length());
        EXPECT_TRUE(is_minimal_coset_rep(rep, P));
        EXPECT_TRUE(in_parabolic_subgroup(u, P));
        seen.emplace(rep, u);
      }
      EXPECT_EQ(seen.size(), all.size());
    }
  }
}

TEST(Weyl, VElements) {
  auto a1 = parse_root_system("A1");
  EXPECT_EQ(v_element(a1, 1), W(a1, {1}));
  auto a2 = parse_root_system("A2");
  auto v1 = v_element(a2, 1), v2 = v_element(a2, 2);
  EXPECT_EQ(v1, W(a2, {2, 1}));
  EXPECT_EQ(v2, W(a2, {1, 2}));
  EXPECT_EQ(v1.act_on_coweight(a2->fundamental_coweight(1)), -a2->fundamental_coweight(2));
  EXPECT_EQ(v2.act_on_coweight(a2->fundamental_coweight(2)), -a2->fundamental_coweight(1));
  auto b2 = parse_root_system("B2");
  EXPECT_THROW(v_element(b2, 2), Error);
}

TEST(Weyl, MinusculeElements) {
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4"}) {
    auto rs = parse_root_system(name);
    SCOPED_TRACE(name);
    const auto w0 = longest_element(rs);
    for (int i : rs->minuscule_nodes()) {
      auto v = v_element(rs, i);
      EXPECT_EQ(v.inverse(), v_element(rs, rs->involution(i)));
      for (const auto& a : rs->positive_roots())
        EXPECT_EQ(is_positive(v.act_on_root(a)), rs->pairing(rs->fundamental_coweight(i), a) == 0);
      std::vector<int> others;
      for (int j = 1; j <= rs->rank(); ++j)
        if (j != i) others.push_back(j);
      EXPECT_EQ(v.length(), w0.length() - longest_element(rs, others).length());
    }
  }
}

TEST(Weyl, LeviTranslatesStayInLeviCorootLattice) {
  auto rs = parse_root_system("C3");
  ParabolicSet P(*rs, {2});
  for (const auto& u : enumerate_parabolic(rs, P))
    for (int i = 1; i <= 3; ++i) {
      IVec mu = rs->fundamental_coweight(i);
      IVec c;
      ASSERT_TRUE(rs->coweight_to_coroot(u.act_on_coweight(mu) - mu, c));
      EXPECT_EQ(c[1], 0);
    }
}

TEST(Weyl, ReducedWords) {
  auto rs = parse_root_system("B3");
  for (const auto& w : enumerate_weyl(rs)) {
    auto word = w.reduced_word();
    EXPECT_EQ(static_cast<int>(word.size()), w.length());
    EXPECT_EQ(WeylElt::from_word(rs, word), w);
  }
}
