#include <gtest/gtest.h>

#include <algorithm>

#include "trideg/error.hpp"
#include "trideg/grothendieck.hpp"
#include "trideg/instances.hpp"

using namespace trideg;
using instances::Rng;

namespace {

bool iso(const Complex& a, const Complex& b) { return find_iso(a, b).certificate.has_value(); }

bool concentrated_in_zero(const Complex& x) {
  const auto h = nonzero_homology(x);
  return std::all_of(h.begin(), h.end(), [](const auto& e) { return e.first == 0; });
}

AlgMatrix entry(const Algebra& a, const std::string& path, bool negative = false) {
  AlgMatrix m(1, 1, a.dimension());
  const AlgebraElement e = a.path_element(*a.parse_path(path));
  m.at(0, 0) = negative ? a.neg(e) : e;
  return m;
}

}  // namespace

TEST(Nilpotency, ZeroHasExponentOne) {
  auto a = instances::a2();
  const Complex z = Complex::stalk(a, {0, 1}, 0);
  auto c = nilpotency_certificate(zero_map(z, z));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->exponent, 1u);
  EXPECT_TRUE(verify_nilpotency(*c, zero_map(z, z)));
}

TEST(Nilpotency, IdentityIsNotNilpotent) {
  auto a = instances::a2();
  const Complex z = Complex::stalk(a, {0}, 0);
  EXPECT_FALSE(nilpotency_certificate(identity_map(z)));
}

TEST(Nilpotency, LoopMultiplicationSquaresToZero) {
  auto a = instances::loop();
  const Complex z = Complex::stalk(a, {0}, 0);
  const ChainMap x(z, z, Blocks{{0, entry(*a, "x")}});
  auto c = nilpotency_certificate(x);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->exponent, 2u);
  EXPECT_TRUE(verify_nilpotency(*c, x));
  EXPECT_FALSE(verify_nilpotency(NilpotencyCertificate{1, Homotopy(z, z, {})}, x));
}

TEST(Nilpotency, RadicalMapsAreCertified) {
  Rng rng(31);
  for (auto alg : {instances::a2(), instances::a3(3, false), instances::loop()}) {
    for (int i = 0; i < 10; ++i) {
      const Complex z = instances::random_complex(alg, rng);
      const ChainMap v = instances::random_radical_map(z, z, rng);
      auto c = nilpotency_certificate(v);
      ASSERT_TRUE(c);
      EXPECT_TRUE(verify_nilpotency(*c, v));
    }
  }
}

TEST(LeftWitness, IdentityGivesM) {
  Rng rng(32);
  auto a = instances::a3();
  for (int i = 0; i < 5; ++i) {
    const Complex z = instances::random_complex(a, rng);
    const Complex m = instances::random_complex(a, rng);
    const auto w = left_witness(identity_map(z), zero_map(z, m));
    EXPECT_TRUE(verify_witness(w));
    EXPECT_TRUE(iso(w.n, m));
  }
}

TEST(LeftWitness, ZeroObjectGivesM) {
  Rng rng(33);
  auto a = instances::a2();
  const Complex z = Complex::zero(a);
  const Complex m = instances::random_complex(a, rng);
  const auto w = left_witness(zero_map(z, z), zero_map(z, m));
  EXPECT_EQ(w.n, m);
  EXPECT_TRUE(verify_witness(w));
}

TEST(LeftWitness, ZwaraSequence) {
  const auto zw = instances::zwara();
  EXPECT_TRUE(verify_witness(zw.witness));
  EXPECT_TRUE(iso(zw.witness.n, direct_sum(zw.n2, zw.n1).sum));
  ASSERT_TRUE(zw.witness.nil);
  EXPECT_EQ(zw.witness.nil->exponent, 1u);
}

TEST(LeftWitness, TamperedWitnessRejected) {
  const auto zw = instances::zwara();
  auto w = zw.witness;
  w.v = identity_map(w.z);
  EXPECT_FALSE(verify_witness(w));
  w = zw.witness;
  w.m = w.z;
  EXPECT_FALSE(verify_witness(w));
}

TEST(LeftWitness, PreservesK0AndDegreeZeroHomology) {
  Rng rng(34);
  for (auto alg : {instances::a2(), instances::a3(), instances::loop()}) {
    for (int i = 0; i < 20; ++i) {
      const auto w = instances::random_left_witness(alg, rng);
      EXPECT_TRUE(verify_witness(w));
      EXPECT_EQ(k0_class(w.m), k0_class(w.n));
      if (w.nil && concentrated_in_zero(w.n)) EXPECT_TRUE(concentrated_in_zero(w.m));
    }
  }
}

TEST(DegPullback, IdentityGivesM) {
  Rng rng(35);
  auto a = instances::a3(3, false);
  for (int i = 0; i < 5; ++i) {
    const Complex z = instances::random_complex(a, rng);
    const Complex m = instances::random_complex(a, rng);
    const auto hc = deg_pullback(instances::random_chain_map(m, z, rng), identity_map(z));
    EXPECT_EQ(hc.witness.side, Side::right);
    EXPECT_TRUE(verify_witness(hc.witness));
    EXPECT_TRUE(iso(hc.n, m));
  }
}

TEST(DegPullback, ZeroDataSplits) {
  Rng rng(36);
  auto a = instances::a2();
  const Complex z = instances::random_complex(a, rng);
  const Complex m = instances::random_complex(a, rng);
  const auto hc = deg_pullback(zero_map(m, z), zero_map(z, z));
  const Complex expected = direct_sum({m, z, shift(z, -1)}, a);
  EXPECT_TRUE(iso(hc.n, expected));
}

TEST(DegPullback, MatchesHandBuiltCone) {
  // M = P_2, Z = P_1 in degree 0, u = α, v = 0. By hand: N^0 = P_2 ⊕ P_1,
  // N^1 = P_1, d^0 = (-α, 0) (the [-1] shift negates (α, 0)).
  auto a = instances::a2(3);
  const Complex m = Complex::stalk(a, {1}, 0);
  const Complex z = Complex::stalk(a, {0}, 0);
  const ChainMap u(m, z, Blocks{{0, entry(*a, "alpha")}});
  const auto hc = deg_pullback(u, zero_map(z, z));
  AlgMatrix d(1, 2, a->dimension());
  d.at(0, 0) = a->neg(a->path_element(*a->parse_path("alpha")));
  const Complex by_hand(a, Terms{{0, {1, 0}}, {1, {0}}}, Blocks{{0, d}});
  EXPECT_EQ(hc.n, by_hand);
  EXPECT_TRUE(verify_witness(hc.witness));
}

TEST(DegPullback, RandomPreservesK0) {
  Rng rng(37);
  for (auto alg : {instances::a2(), instances::a3(3, true)}) {
    for (int i = 0; i < 15; ++i) {
      const auto hc = instances::random_deg(alg, rng);
      EXPECT_TRUE(verify_witness(hc.witness));
      EXPECT_EQ(k0_class(hc.witness.m), k0_class(hc.n));
    }
  }
}

TEST(GedPushout, IdentityGivesM) {
  Rng rng(38);
  auto a = instances::a3();
  for (int i = 0; i < 5; ++i) {
    const Complex z = instances::random_complex(a, rng);
    const Complex m = instances::random_complex(a, rng);
    const auto hc = ged_pushout(instances::random_chain_map(z, m, rng), identity_map(z));
    EXPECT_EQ(hc.witness.side, Side::left);
    EXPECT_TRUE(verify_witness(hc.witness));
    EXPECT_TRUE(iso(hc.n, m));
  }
}

TEST(GedPushout, ZeroMapSplitsOffConeOfV) {
  Rng rng(39);
  auto a = instances::a2(3);
  for (int i = 0; i < 5; ++i) {
    const Complex z = instances::random_complex(a, rng);
    const Complex m = instances::random_complex(a, rng);
    const ChainMap v = instances::random_endomorphism(z, rng);
    const auto hc = ged_pushout(zero_map(z, m), v);
    EXPECT_TRUE(iso(hc.n, direct_sum(m, cone(v).complex).sum));
  }
}

TEST(GedPushout, AgreesWithLeftWitnessForZeroV) {
  Rng rng(40);
  auto a = instances::a3(2, false);
  instances::ComplexShape desk;  // keeps the cones within total dimension 12
  desk.max_total = 4;
  for (int i = 0; i < 10; ++i) {
    const Complex z = instances::random_complex(a, rng, desk);
    const Complex m = instances::random_complex(a, rng, desk);
    const ChainMap u = instances::random_chain_map(z, m, rng);
    const auto hc = ged_pushout(u, zero_map(z, z));
    EXPECT_TRUE(iso(hc.n, left_witness(zero_map(z, z), u).n));
  }
}

TEST(ConeComparisonTheorem, ZeroEndomorphism) {
  Rng rng(41);
  auto a = instances::a2();
  const Complex z = instances::random_complex(a, rng);
  const Complex m = instances::random_complex(a, rng);
  const auto w = left_witness(zero_map(z, z), instances::random_chain_map(z, m, rng));
  const auto c = theorem_cone_comparison(w);
  EXPECT_TRUE(c.verdict);
  EXPECT_TRUE(iso(c.cone_pi, direct_sum(shift(z, 1), z).sum));
}

TEST(ConeComparisonTheorem, Zwara) {
  const auto zw = instances::zwara();
  const auto c = theorem_cone_comparison(zw.witness);
  EXPECT_TRUE(c.verdict);
  EXPECT_TRUE(c.explicit_alpha);
  EXPECT_TRUE(iso(c.cone_pi, direct_sum(shift(zw.n1, 1), zw.n1).sum));
}

TEST(ConeComparisonTheorem, RandomWitnesses) {
  Rng rng(42);
  for (auto alg : {instances::a2(), instances::a3()}) {
    for (int i = 0; i < 10; ++i) {
      const auto w = instances::random_left_witness(alg, rng);
      const auto c = theorem_cone_comparison(w);
      EXPECT_TRUE(c.verdict);
      EXPECT_EQ(nonzero_homology(c.cone_pi), nonzero_homology(c.cone_v));
    }
  }
}

TEST(ConeComparisonTheorem, RightWitnessRejected) {
  Rng rng(43);
  const auto hc = instances::random_deg(instances::a2(), rng);
  EXPECT_THROW(theorem_cone_comparison(hc.witness), InputError);
}

TEST(Factorization, IdentityFirstFactor) {
  Rng rng(44);
  auto a = instances::a3();
  const Complex z = instances::random_complex(a, rng);
  const Complex m = instances::random_complex(a, rng);
  const ChainMap w = instances::random_chain_map(z, m, rng);
  const auto f = factorization_chain(w, identity_map(z), instances::random_radical_map(z, z, rng));
  EXPECT_TRUE(f.verdict);
  EXPECT_TRUE(is_iso(f.f));
}

TEST(Factorization, IdentitySecondFactor) {
  Rng rng(45);
  auto a = instances::a3();
  const Complex z = instances::random_complex(a, rng);
  const Complex m = instances::random_complex(a, rng);
  const ChainMap w = instances::random_chain_map(z, m, rng);
  const auto f = factorization_chain(w, instances::random_radical_map(z, z, rng), identity_map(z));
  EXPECT_TRUE(f.verdict);
  EXPECT_TRUE(iso(f.g2, m));
}

TEST(Factorization, RandomNilpotentFactors) {
  Rng rng(46);
  auto a = instances::a3(2, false);
  for (int i = 0; i < 10; ++i) {
    const Complex z = instances::random_complex(a, rng);
    const Complex m = instances::random_complex(a, rng);
    const ChainMap w = instances::random_chain_map(z, m, rng);
    const ChainMap nu1 = instances::random_radical_map(z, z, rng);
    const ChainMap nu2 = instances::random_radical_map(z, z, rng);
    const auto f = factorization_chain(w, nu1, nu2);
    EXPECT_TRUE(f.verdict);
    const auto r2 = ged_pushout(w, nu2).r;
    EXPECT_TRUE(iso(ged_pushout(r2, nu1).n, f.g12));
  }
}

TEST(TwoPushout, EqualWitnesses) {
  Rng rng(47);
  auto a = instances::a2(3);
  for (int i = 0; i < 5; ++i) {
    const auto w = instances::random_deg(a, rng).witness;
    const auto t = two_pushout_theorem(w, w);
    EXPECT_TRUE(t.verdict);
    EXPECT_TRUE(iso(t.x, t.y));
  }
}

TEST(TwoPushout, SharedSPairs) {
  Rng rng(48);
  auto a = instances::a2(3);
  for (int i = 0; i < 10; ++i) {
    const auto [w1, w2] = instances::random_shared_s_pair(a, rng);
    EXPECT_TRUE(verify_witness(w2));
    const auto t = two_pushout_theorem(w1, w2);
    EXPECT_TRUE(t.verdict);
    EXPECT_EQ(k0_class(t.x), k0_class(t.y));
  }
}

TEST(TwoPushout, ZeroExtraSummand) {
  Rng rng(49);
  auto a = instances::a2(3);
  const auto w1 = instances::random_deg(a, rng).witness;
  const auto [x1, w2] = instances::shared_s_pair(w1, Complex::zero(a), 1);
  EXPECT_TRUE(two_pushout_theorem(x1, w2).verdict);
}

TEST(TwoPushout, MismatchedMRejected) {
  Rng rng(50);
  auto a = instances::a2();
  const auto w1 = instances::random_deg(a, rng).witness;
  auto w2 = w1;
  w2.m = direct_sum(w1.m, Complex::stalk(a, {0}, 0)).sum;
  EXPECT_THROW(two_pushout_theorem(w1, w2), InputError);
}

TEST(ConeZero, IsoAndFollowUp) {
  Rng rng(51);
  for (auto alg : {instances::a2(), instances::a3(3, false)}) {
    for (int i = 0; i < 5; ++i) {
      const Complex z = instances::random_complex(alg, rng);
      const auto c = cone_zero(z);
      ASSERT_TRUE(c.iso.certificate);
      EXPECT_TRUE(c.iso.found_by_candidate);
      EXPECT_TRUE(verify_iso(*c.iso.certificate));
      EXPECT_TRUE(verify_witness(c.follow_up));
      ASSERT_TRUE(c.follow_up.nil);
      EXPECT_EQ(c.follow_up.nil->exponent, 1u);
      ASSERT_TRUE(c.follow_up_iso.certificate);
    }
  }
}

TEST(ConeZero, FollowUpForNilpotentV) {
  Rng rng(52);
  auto a = instances::a3();
  for (int i = 0; i < 5; ++i) {
    const Complex z = instances::random_complex(a, rng);
    const ChainMap v = instances::random_radical_map(z, z, rng);
    const auto w = cone_follow_up(v);
    EXPECT_TRUE(verify_witness(w));
    EXPECT_EQ(w.m, cone(v).complex);
  }
}
