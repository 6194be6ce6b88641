#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "trideg/error.hpp"
#include "trideg/grothendieck.hpp"
#include "trideg/instances.hpp"

using namespace trideg;
using instances::Rng;

namespace {

K0Class k0_of(std::vector<std::int64_t> c) { return K0Class{std::move(c)}; }

K0Class scaled(const K0Class& k, std::int64_t s) {
  K0Class out = k;
  for (auto& c : out.coefficients) c *= s;
  return out;
}

using Multiset = std::map<std::pair<std::string, int>, std::size_t>;

Multiset expand(const ShiftSum& x) {
  Multiset m;
  for (const auto& t : x.terms) m[{t.gen, t.shift}] += t.mult;
  return m;
}

Multiset expand(const std::vector<ShiftPair>& pairs) {
  Multiset m;
  for (const auto& p : pairs) {
    m[{p.gen, p.even_shift}] += p.mult;
    m[{p.gen, p.odd_shift}] += p.mult;
  }
  return m;
}

bool is_even(int k) { return k % 2 == 0; }

/// Exhaustive search for a perfect matching of copies into (even, odd) pairs
/// of the same generator.
bool pairing_exists(std::vector<std::pair<std::string, int>> copies) {
  if (copies.empty()) return true;
  const auto first = copies.back();
  copies.pop_back();
  for (std::size_t i = 0; i < copies.size(); ++i) {
    if (copies[i].first != first.first || is_even(copies[i].second) == is_even(first.second)) continue;
    auto rest = copies;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (pairing_exists(std::move(rest))) return true;
  }
  return false;
}

std::vector<std::pair<std::string, int>> copies_of(const ShiftSum& x) {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& t : x.terms)
    for (std::size_t i = 0; i < t.mult; ++i) out.emplace_back(t.gen, t.shift);
  return out;
}

std::vector<ShiftPair> sorted(std::vector<ShiftPair> p) {
  std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) {
    return std::tie(a.gen, a.even_shift, a.odd_shift, a.mult) < std::tie(b.gen, b.even_shift, b.odd_shift, b.mult);
  });
  return p;
}

}  // namespace

TEST(K0, Examples) {
  auto a = instances::a2();
  EXPECT_TRUE(k0_class(Complex::zero(a)).is_zero());
  EXPECT_EQ(k0_class(Complex::stalk(a, {0}, 0)), k0_of({1, 0}));
  EXPECT_EQ(k0_class(instances::simple_resolution(a)), k0_of({1, -1}));
  Rng rng(61);
  for (int i = 0; i < 10; ++i) {
    const Complex s = instances::random_complex(a, rng);
    EXPECT_TRUE(k0_class(direct_sum(s, shift(s, 1)).sum).is_zero());
  }
}

TEST(K0, ShiftAlternatesSign) {
  Rng rng(62);
  auto a = instances::a3();
  for (int i = 0; i < 10; ++i) {
    const Complex x = instances::random_complex(a, rng);
    for (int k = -4; k <= 4; ++k) EXPECT_EQ(k0_class(shift(x, k)), scaled(k0_class(x), k % 2 == 0 ? 1 : -1));
  }
}

TEST(K0, StandardTrianglesAreExact) {
  Rng rng(63);
  auto a = instances::a3(3, false);
  for (int i = 0; i < 20; ++i) {
    const Complex x = instances::random_complex(a, rng);
    const Complex y = instances::random_complex(a, rng);
    const Complex c = cone(instances::random_chain_map(x, y, rng)).complex;
    const auto kx = k0_class(x), ky = k0_class(y), kc = k0_class(c);
    for (std::size_t v = 0; v < kx.coefficients.size(); ++v)
      EXPECT_EQ(kx.coefficients[v] - ky.coefficients[v] + kc.coefficients[v], 0);
  }
}

TEST(ShiftSum, Validation) {
  EXPECT_THROW((ShiftSum{{{"S", 0, 0}}}.validate()), InputError);
  EXPECT_THROW((ShiftSum{{{"S", 0, 1}, {"S", 0, 2}}}.validate()), InputError);
  EXPECT_NO_THROW((ShiftSum{{{"S", 0, 1}, {"T", 0, 2}}}.validate()));
  EXPECT_EQ((ShiftSum{{{"S", 0, 2}, {"S", 1, 1}, {"S", 3, 1}}}.m()), 2u);
}

TEST(PairDecompose, BaseCase) {
  const auto p = pair_decompose(ShiftSum{{{"S", 0, 1}, {"S", 1, 1}}});
  EXPECT_EQ(p, (std::vector<ShiftPair>{{"S", 0, 1, 1}}));
}

TEST(PairDecompose, FourShifts) {
  const ShiftSum x{{{"S", 0, 1}, {"S", 2, 1}, {"S", 3, 1}, {"S", 5, 1}}};
  const auto p = pair_decompose(x);
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(expand(p), expand(x));
  // Smallest even against largest odd first.
  EXPECT_EQ(p.front(), (ShiftPair{"S", 0, 5, 1}));
}

TEST(PairDecompose, UnequalMultiplicities) {
  const auto p = pair_decompose(ShiftSum{{{"S", 0, 2}, {"S", 1, 1}, {"S", 3, 1}}});
  EXPECT_EQ(sorted(p), (std::vector<ShiftPair>{{"S", 0, 1, 1}, {"S", 0, 3, 1}}));
}

TEST(PairDecompose, NegativeShifts) {
  const ShiftSum x{{{"S", -3, 2}, {"S", -2, 2}}};
  EXPECT_EQ(pair_decompose(x), (std::vector<ShiftPair>{{"S", -2, -3, 2}}));
}

TEST(PairDecompose, NonzeroClassNamesGenerator) {
  try {
    pair_decompose(ShiftSum{{{"S", 0, 1}, {"S", 1, 1}, {"T", 2, 1}}});
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("T"), std::string::npos);
  }
}

TEST(PairDecompose, RandomAgainstExhaustiveOracle) {
  Rng rng(64);
  for (int i = 0; i < 100; ++i) {
    const ShiftSum x = instances::random_zero_class(rng, 6);
    ASSERT_NO_THROW(x.validate());
    const auto p = pair_decompose(x);
    EXPECT_EQ(expand(p), expand(x));
    for (const auto& pr : p) {
      EXPECT_TRUE(is_even(pr.even_shift));
      EXPECT_FALSE(is_even(pr.odd_shift));
      EXPECT_GE(pr.mult, 1u);
    }
    EXPECT_TRUE(pairing_exists(copies_of(x)));
  }
}

TEST(Tower, RandomTowersCertify) {
  Rng rng(65);
  for (auto alg : {instances::a2(), instances::a3()}) {
    for (std::size_t len = 1; len <= 3; ++len) {
      const Tower t = instances::random_tower(alg, rng, len);
      EXPECT_EQ(t.length(), len);
      EXPECT_TRUE(verify_tower(t));
    }
  }
}

TEST(Tower, WrongTagRejected) {
  auto a = instances::a2();
  const Complex s = Complex::stalk(a, {0}, 0);
  const Complex wrong = Complex::stalk(a, {1}, 0);
  EXPECT_THROW(certify_tower({Complex::zero(a), s}, {zero_map(Complex::zero(a), s)}, {ConeTag{"S", wrong, 0}},
                             SearchOptions{16, 0}),
               CertificateError);
}

TEST(Tower, LengthOne) {
  auto a = instances::a2();
  const Complex s = Complex::stalk(a, {0}, 0);
  const Tower t = certify_tower({Complex::zero(a), s}, {zero_map(Complex::zero(a), s)}, {ConeTag{"S", s, 0}});
  const auto chain = tower_nil_chain(t);
  ASSERT_EQ(chain.size(), 1u);
  EXPECT_TRUE(verify_iso(chain[0].iso));
  const auto single = tower_delta_witness(t);
  EXPECT_TRUE(single.witness.z.is_zero());
  EXPECT_TRUE(verify_iso(single.iso));
}

TEST(Tower, LengthTwoSimpleCones) {
  // 0 -> P_1 -> M_2 with M_2 = cone(φ : P_2 -> P_1) the resolution of S_1:
  // C_1 = P_1, C_2 = P_2[1].
  auto a = instances::a2();
  const Complex p1 = Complex::stalk(a, {0}, 0);
  const Complex p2 = Complex::stalk(a, {1}, 0);
  const Complex zero = Complex::zero(a);
  const ChainMap f1 = zero_map(zero, p1);
  AlgMatrix al(1, 1, a->dimension());
  al.at(0, 0) = a->path_element(*a->parse_path("alpha"));
  const Cone c = cone(ChainMap(p2, p1, Blocks{{0, al}}));
  const Tower t = certify_tower({zero, p1, c.complex}, {f1, c.inclusion}, {ConeTag{"P1", p1, 0}, ConeTag{"P2", p2, 1}});
  const Complex sum = direct_sum(p1, shift(p2, 1)).sum;
  EXPECT_EQ(tower_cone_sum(t), sum);
  const auto chain = tower_nil_chain(t);
  ASSERT_EQ(chain.size(), 2u);
  for (const auto& step : chain) {
    EXPECT_TRUE(verify_witness(step.witness));
    EXPECT_EQ(k0_class(step.witness.n), k0_class(c.complex));
    ASSERT_TRUE(step.witness.nil);
    EXPECT_EQ(step.witness.nil->exponent, 1u);
  }
  EXPECT_TRUE(find_iso(chain.back().witness.n, sum).certificate);
  const auto single = tower_delta_witness(t);
  EXPECT_TRUE(verify_witness(single.witness));
  EXPECT_TRUE(find_iso(single.witness.n, chain.back().witness.n).certificate);
}

TEST(Tower, RandomChainsAndDeltaWitnesses) {
  Rng rng(66);
  for (auto alg : {instances::a2(), instances::a3(3, false)}) {
    for (int i = 0; i < 5; ++i) {
      const Tower t = instances::random_tower(alg, rng, 1 + static_cast<std::size_t>(i % 4));
      const K0Class km = k0_class(t.objects.back());
      const auto chain = tower_nil_chain(t);
      ASSERT_EQ(chain.size(), t.length());
      for (const auto& step : chain) {
        EXPECT_TRUE(verify_witness(step.witness));
        EXPECT_TRUE(verify_iso(step.iso));
        EXPECT_EQ(k0_class(step.witness.n), km);
      }
      const auto single = tower_delta_witness(t);
      EXPECT_TRUE(verify_witness(single.witness));
      EXPECT_TRUE(verify_iso(single.iso));
      EXPECT_EQ(single.expected, tower_cone_sum(t));
      EXPECT_EQ(k0_class(single.witness.n), km);
    }
  }
}
