#include <gtest/gtest.h>

#include <numeric>

#include "hilbco/semigroup.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace hilbco;

namespace {

AffineSemigroup quartic() { return AffineSemigroup(2, {{5, 0}, {1, 4}, {4, 1}, {0, 5}}); }

}  // namespace

TEST(Semigroup, Validation) {
  EXPECT_THROW(AffineSemigroup(2, {{0, 0}}), InputError);
  EXPECT_THROW(AffineSemigroup(2, {{1, 0, 0}}), AmbientMismatch);
  EXPECT_THROW(AffineSemigroup(2, {}), InputError);
  EXPECT_EQ(quartic().rank(), 2u);
  EXPECT_EQ(AffineSemigroup(2, {{2, 2}, {3, 3}}).rank(), 1u);
}

TEST(Semigroup, Membership) {
  const auto s = quartic();
  EXPECT_TRUE(sg_membership(s, {5, 5}, 10));
  EXPECT_TRUE(sg_membership(s, {0, 0}, 10));
  EXPECT_FALSE(sg_membership(s, {3, 2}, 10));
  EXPECT_THROW(sg_membership(s, {11, 0}, 10), InputError);
}

TEST(Semigroup, IdealProduct) {
  const auto s = quartic();
  const SemigroupIdeal q(s, {{5, 0}, {0, 5}});
  EXPECT_EQ(sg_ideal_product(q, q).generators(), (std::vector<ExponentVector>{{0, 10}, {5, 5}, {10, 0}}));
  const auto unit = SemigroupIdeal::unit(s);
  EXPECT_EQ(sg_ideal_product(q, unit), q);
  const auto cube = sg_ideal_power(q, 3);
  for (const auto& g : cube.generators()) {
    EXPECT_EQ(g[0] + g[1], 15u);
    EXPECT_EQ(g[0] % 5, 0u);
  }
  EXPECT_EQ(cube.generators().size(), 4u);
}

TEST(Semigroup, IdealValidation) {
  const auto s = quartic();
  EXPECT_THROW(SemigroupIdeal(s, {{3, 2}}), InputError);
  const AffineSemigroup other(2, {{1, 0}, {0, 1}});
  EXPECT_THROW(sg_ideal_product(SemigroupIdeal(s, {{5, 0}}), SemigroupIdeal(other, {{1, 0}})),
               InputError);
}

TEST(Semigroup, AntichainUnderSemigroupOrder) {
  // (10,0) - (5,0) lies in S, so (10,0) is redundant; (9,1) - (5,0) = (4,1) too.
  const SemigroupIdeal i(quartic(), {{5, 0}, {10, 0}, {9, 1}, {1, 4}});
  EXPECT_EQ(i.generators(), (std::vector<ExponentVector>{{1, 4}, {5, 0}}));
}

TEST(Semigroup, ColengthOfQ) {
  const SemigroupIdeal q(quartic(), {{5, 0}, {0, 5}});
  const auto count = sg_colength(q, sg_default_bound(q));
  EXPECT_TRUE(count.certified);
  EXPECT_EQ(count.count, oracle::semigroup_colength(quartic().generators(), q.generators(), 2, 60));
  EXPECT_EQ(count.count, 7);
  EXPECT_EQ(sg_colength(SemigroupIdeal::unit(quartic()), 10).count, 0);
}

TEST(Semigroup, DefaultBoundMatchesPowerScaling) {
  const SemigroupIdeal q(quartic(), {{5, 0}, {0, 5}});
  for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(sg_default_bound(sg_ideal_power(q, n)), 40u * 5u * (n + 1));
}

TEST(Semigroup, ColengthGrowthEventuallyFive) {
  const SemigroupIdeal q(quartic(), {{5, 0}, {0, 5}});
  std::vector<Integer> lengths;
  for (unsigned n = 0; n <= 8; ++n) {
    const auto power = sg_ideal_power(q, n);
    lengths.push_back(sg_colength(power, sg_default_bound(power)).count);
  }
  for (std::size_t n = 3; n + 2 < lengths.size(); ++n)
    EXPECT_EQ((lengths[n + 2] - lengths[n + 1]) - (lengths[n + 1] - lengths[n]), 5);
}

TEST(Semigroup, DoublingDetectsSmallBoxes) {
  const AffineSemigroup s(1, {{3}, {5}});
  const SemigroupIdeal i(s, {{3}});
  const auto weak = sg_colength(i, 4, 1);
  EXPECT_FALSE(weak.certified);
  const auto strong = sg_colength(i, 4, 3);
  EXPECT_TRUE(strong.certified);
  EXPECT_EQ(strong.count, 3);  // 0, 5, 10
}

TEST(Semigroup, TranslationInjective) {
  // For a numerical semigroup, s -> s + a is injective, so S \ (a + S) is an
  // Apery set with exactly a elements.
  instances::Generator g(21);
  for (int trial = 0; trial < 30; ++trial) {
    const Exponent p = static_cast<Exponent>(g.uniform(2, 7));
    Exponent q = static_cast<Exponent>(g.uniform(p + 1, 13));
    while (std::gcd(p, q) != 1) ++q;
    const AffineSemigroup s(1, {{p}, {q}});
    const auto elements = oracle::semigroup_elements(s.generators(), 1, 40);
    std::vector<ExponentVector> pool(elements.begin(), elements.end());
    const auto& a = pool[static_cast<std::size_t>(g.uniform(1, static_cast<int>(pool.size()) - 1))];
    const SemigroupIdeal principal(s, {a});
    const auto count = sg_colength(principal, sg_default_bound(principal));
    ASSERT_TRUE(count.certified);
    EXPECT_EQ(count.count, a[0]);
    EXPECT_EQ(count.count, oracle::semigroup_colength(s.generators(), {a}, 1, 4 * a[0] + 4 * q * p));
  }
}

TEST(Semigroup, MembershipMonotone) {
  instances::Generator g(22);
  const auto s = quartic();
  const auto elements = oracle::semigroup_elements(s.generators(), 2, 25);
  std::vector<ExponentVector> pool(elements.begin(), elements.end());
  for (int trial = 0; trial < 200; ++trial) {
    const auto& v = pool[static_cast<std::size_t>(g.uniform(0, static_cast<int>(pool.size()) - 1))];
    const auto& w = pool[static_cast<std::size_t>(g.uniform(0, static_cast<int>(pool.size()) - 1))];
    EXPECT_TRUE(sg_membership(s, v + w, 60));
  }
  // Every membership answer in a box agrees with the closure oracle.
  oracle::for_box(2, 25, [&](const ExponentVector& v) {
    EXPECT_EQ(sg_membership(s, v, 25), elements.count(v) == 1) << v;
  });
}

TEST(Semigroup, RandomColengthsAgreeWithClosure) {
  instances::Generator g(23);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<ExponentVector> gens{{static_cast<Exponent>(g.uniform(1, 4)), 0},
                                     {0, static_cast<Exponent>(g.uniform(1, 4))}};
    for (int k = 0; k < g.uniform(0, 2); ++k)
      gens.push_back({static_cast<Exponent>(g.uniform(1, 4)), static_cast<Exponent>(g.uniform(1, 4))});
    const AffineSemigroup s(2, gens);
    const SemigroupIdeal ideal(s, {gens[0], gens[1]});
    const auto count = sg_colength(ideal, sg_default_bound(ideal));
    ASSERT_TRUE(count.certified);
    EXPECT_EQ(count.count, oracle::semigroup_colength(gens, ideal.generators(), 2, 40));
  }
}
