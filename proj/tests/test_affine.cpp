#include <gtest/gtest.h>

#include <random>

#include "qseidel/affine.hpp"

using namespace qseidel;

namespace {

ExtAffElt random_element(const AffineWeyl& aff, std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> node(0, aff.root_system()->rank());
  ExtAffElt x = aff.identity();
  for (int k = 0; k < len; ++k) x = x * aff.simple_reflection(node(rng));
  return x;
}

}  // namespace

TEST(Affine, A1Basics) {
  auto rs = parse_root_system("A1");
  AffineWeyl aff(rs);
  const auto& s0 = aff.simple_reflection(0);
  EXPECT_EQ(s0.translation_part(), IVec{-2});
  EXPECT_EQ(s0.finite_part(), WeylElt::from_word(rs, {1}));
  EXPECT_TRUE((s0 * s0).is_identity());
  EXPECT_EQ(aff_length(s0), 1);
  const auto& t1 = aff.tau({1});
  EXPECT_EQ(t1.translation_part(), IVec{-1});
  EXPECT_TRUE((t1 * t1).is_identity());
  EXPECT_EQ(aff_length(t1), 0);
  EXPECT_EQ(aff.central_dynkin_action({1}, 0), 1);
  EXPECT_EQ(aff.central_dynkin_action({1}, 1), 0);
}

TEST(Affine, TranslationLength) {
  auto rs = parse_root_system("A2");
  AffineWeyl aff(rs);
  EXPECT_EQ(aff_length(aff.translation({1, 0})), 2);
  EXPECT_EQ(aff_length(aff.translation({1, 1})), 4);
  EXPECT_EQ(aff_length(aff.translation({-2, 1})), 4);
}

TEST(Affine, LengthMatchesInversionCount) {
  std::mt19937 rng(7);
  for (const char* name : {"A2", "B2", "C3", "G2", "D4"}) {
    AffineWeyl aff(parse_root_system(name));
    for (int k = 0; k < 60; ++k) {
      auto x = random_element(aff, rng, 1 + k % 9);
      EXPECT_EQ(aff_length(x), inversion_count_oracle(x)) << name << " " << x.to_string();
    }
  }
}

TEST(Affine, ReducedWordsRoundTrip) {
  std::mt19937 rng(11);
  for (const char* name : {"A3", "B3", "G2"}) {
    AffineWeyl aff(parse_root_system(name));
    for (int k = 0; k < 40; ++k) {
      auto x = random_element(aff, rng, k % 12);
      auto word = aff.reduced_word(x);
      EXPECT_EQ(static_cast<std::int64_t>(word.size()), aff_length(x));
      EXPECT_EQ(aff.from_word(word), x);
    }
  }
  AffineWeyl a2(parse_root_system("A2"));
  EXPECT_THROW(a2.reduced_word(a2.tau({1})), Error);
}

TEST(Affine, CentralElements) {
  for (const char* name : {"A1", "A2", "A3", "A4", "B3", "C3", "D4"}) {
    auto rs = parse_root_system(name);
    AffineWeyl aff(rs);
    SCOPED_TRACE(name);
    for (int i : rs->minuscule_nodes()) {
      CentralElt z{i};
      EXPECT_EQ(aff_length(aff.tau(z)), 0);
      EXPECT_FALSE(aff.tau(z).in_affine_weyl());
      EXPECT_EQ(aff.central_mul(z, aff.central_inverse(z)), CentralElt{0});
      EXPECT_EQ(aff.central_inverse(z), CentralElt{rs->involution(i)});
      // tau s_j tau^{-1} = s_{tau(j)}
      for (int j = 0; j <= rs->rank(); ++j)
        EXPECT_EQ(aff.tau(z) * aff.simple_reflection(j) * aff.tau(z).inverse(),
                  aff.simple_reflection(aff.central_dynkin_action(z, j)));
    }
  }
  // A3: cyclic of order 4 generated by tau_1.
  AffineWeyl a3(parse_root_system("A3"));
  CentralElt z{1};
  EXPECT_EQ(a3.central_mul(z, z), CentralElt{2});
  EXPECT_EQ(a3.central_mul(z, CentralElt{2}), CentralElt{3});
  // D4: every element has order 2.
  AffineWeyl d4(parse_root_system("D4"));
  for (int i : {1, 3, 4}) EXPECT_EQ(d4.central_mul({i}, {i}), CentralElt{0});
  EXPECT_THROW(d4.tau({2}), Error);
}

TEST(Affine, HatDecomposition) {
  std::mt19937 rng(3);
  for (const char* name : {"A2", "A3", "C3", "D4"}) {
    auto rs = parse_root_system(name);
    AffineWeyl aff(rs);
    for (int k = 0; k < 30; ++k) {
      int i = rs->minuscule_nodes()[k % rs->minuscule_nodes().size()];
      ExtAffElt x = aff.tau({k % 3 == 0 ? 0 : i}) * random_element(aff, rng, k % 7);
      auto d = aff.hat_decompose(x);
      EXPECT_TRUE(d.hat.in_affine_weyl());
      EXPECT_EQ(aff.tau(d.tau) * d.hat, x);
      EXPECT_EQ(aff_length(d.hat), aff_length(x));
    }
  }
}

TEST(Affine, WaffMinus) {
  auto rs = parse_root_system("A2");
  AffineWeyl aff(rs);
  IVec theta = rs->coroot_to_coweight(rs->highest_coroot());
  EXPECT_TRUE(is_waff_minus(aff.identity()));
  EXPECT_TRUE(is_waff_minus(aff.translation(-theta)));
  EXPECT_FALSE(is_waff_minus(aff.translation(theta)));
  EXPECT_TRUE(is_waff_minus(aff.simple_reflection(0)));
  EXPECT_FALSE(is_waff_minus(aff.simple_reflection(1)));
  // Oracle: x is minimal in x W when no finite simple reflection shortens it.
  std::mt19937 rng(5);
  for (int k = 0; k < 200; ++k) {
    auto x = random_element(aff, rng, k % 10);
    bool minimal = true;
    for (int i = 1; i <= rs->rank(); ++i)
      if (aff_length(x * aff.simple_reflection(i)) < aff_length(x)) minimal = false;
    EXPECT_EQ(is_waff_minus(x), minimal) << x.to_string();
  }
}

TEST(Affine, PiP) {
  auto rs = parse_root_system("A2");
  AffineWeyl aff(rs);
  ParabolicSet borel = ParabolicSet::borel(*rs);
  ParabolicSet P(*rs, {1});
  auto s2 = aff.simple_reflection(2);
  EXPECT_EQ(aff.pi_P(s2, borel), s2);
  EXPECT_TRUE(aff.pi_P(s2, P).is_identity());
  std::mt19937 rng(9);
  for (const char* name : {"A3", "B3", "C3"}) {
    auto r = parse_root_system(name);
    AffineWeyl a(r);
    ParabolicSet Q(*r, {1});
    for (int k = 0; k < 40; ++k) {
      auto x = random_element(a, rng, k % 8);
      auto x1 = a.pi_P(x, Q);
      EXPECT_TRUE(is_wpaff(x1, Q));
      EXPECT_TRUE(in_levi_affine(x1.inverse() * x, Q));
      EXPECT_EQ(a.pi_P(x1, Q), x1);
    }
  }
}

TEST(Affine, PetersonDecomposition) {
  auto rs = parse_root_system("A2");
  AffineWeyl aff(rs);
  ParabolicSet P(*rs, {1});
  auto y = aff.pi_P(aff.translation({-1, -1}), P);
  ASSERT_TRUE(is_waff_minus(y));
  auto d = aff.peterson_decompose(y, P);
  EXPECT_TRUE(is_minimal_coset_rep(d.w, P));
  for (auto p : d.nu) EXPECT_LE(p, 0);
  EXPECT_EQ(aff.finite(d.w) * aff.pi_P(aff.translation(d.nu), P), y);
  EXPECT_THROW(aff.peterson_decompose(aff.translation({1, 1}), P), Error);
}

TEST(Affine, EtaP) {
  auto rs = parse_root_system("A2");
  AffineWeyl aff(rs);
  ParabolicSet P(*rs, {2});
  // alpha_1^vee + 2 alpha_2^vee = (0, 3) in coweight coordinates.
  EXPECT_EQ(aff.eta_P({0, 3}, P), IVec{2});
  EXPECT_THROW(aff.eta_P({1, 0}, P), Error);
}
