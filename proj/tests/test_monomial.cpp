#include <gtest/gtest.h>

#include "hilbco/monomial.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace hilbco;

namespace {

MonomialIdeal ideal(std::size_t m, std::vector<ExponentVector> gens) {
  return MonomialIdeal(m, std::move(gens));
}

// k[x,y,z]/(yz, x^2y, y^3)
MonomialIdeal e3_relations() { return ideal(3, {{0, 1, 1}, {2, 1, 0}, {0, 3, 0}}); }

}  // namespace

TEST(Minimalize, DropsMultiples) {
  EXPECT_EQ(minimalize(1, {{2}, {3}}), ideal(1, {{2}}));
  EXPECT_TRUE(minimalize(2, {}).is_zero());
  EXPECT_EQ(minimalize(2, {{2, 1}, {1, 2}, {2, 2}}).generators(),
            (std::vector<ExponentVector>{{1, 2}, {2, 1}}));
}

TEST(Minimalize, ZeroVectorIsUnit) {
  const auto u = minimalize(2, {{0, 0}, {3, 1}});
  EXPECT_TRUE(u.is_unit());
  EXPECT_EQ(u.generators().size(), 1u);
}

TEST(Sum, Examples) {
  EXPECT_EQ(sum(ideal(2, {{2, 0}}), ideal(2, {{0, 1}})), ideal(2, {{2, 0}, {0, 1}}));
  const auto i = ideal(2, {{1, 1}});
  EXPECT_EQ(sum(i, MonomialIdeal::zero(2)), i);
  EXPECT_TRUE(sum(ideal(2, {{1, 0}}), MonomialIdeal::unit(2)).is_unit());
}

TEST(Sum, AmbientMismatch) {
  EXPECT_THROW(sum(ideal(2, {{1, 0}}), ideal(3, {{1, 0, 0}})), AmbientMismatch);
}

TEST(Product, Examples) {
  const auto m = MonomialIdeal::maximal(2);
  EXPECT_EQ(product(m, m), ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
  const auto i = ideal(2, {{3, 1}, {0, 2}});
  EXPECT_EQ(product(i, MonomialIdeal::unit(2)), i);
  const auto lhs = product(ideal(2, {{3, 0}, {0, 3}}), ideal(2, {{3, 0}, {2, 1}, {0, 3}}));
  // Pairwise sums: x^6, x^5y, x^3y^3 (twice), x^2y^4, y^6.
  EXPECT_EQ(lhs, ideal(2, {{6, 0}, {5, 1}, {3, 3}, {2, 4}, {0, 6}}));
  EXPECT_FALSE(contains(lhs, ExponentVector{4, 2}));
}

TEST(Power, Examples) {
  EXPECT_EQ(power(ideal(2, {{3, 0}, {0, 3}}), 2), ideal(2, {{6, 0}, {3, 3}, {0, 6}}));
  EXPECT_TRUE(power(ideal(2, {{1, 1}}), 0).is_unit());
  EXPECT_EQ(power(MonomialIdeal::maximal(2), 3), ideal(2, {{3, 0}, {2, 1}, {1, 2}, {0, 3}}));
}

TEST(Intersect, Examples) {
  EXPECT_EQ(intersect(ideal(2, {{1, 0}}), ideal(2, {{0, 1}})), ideal(2, {{1, 1}}));
  EXPECT_EQ(intersect(ideal(2, {{2, 0}, {0, 1}}), ideal(2, {{1, 0}, {0, 2}})),
            ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
  const auto i = ideal(2, {{2, 3}});
  EXPECT_EQ(intersect(i, MonomialIdeal::unit(2)), i);
}

TEST(Colon, Examples) {
  EXPECT_EQ(colon(ideal(2, {{3, 0}, {2, 1}, {0, 3}}), ExponentVector{2, 0}), ideal(2, {{1, 0}, {0, 1}}));
  const auto i = ideal(2, {{3, 1}});
  EXPECT_EQ(colon(i, ExponentVector{0, 0}), i);
  EXPECT_EQ(colon(ideal(2, {{1, 1}, {0, 2}}), MonomialIdeal::maximal(2)), ideal(2, {{0, 1}}));
}

TEST(Colon, ByZeroIdealRejected) {
  EXPECT_THROW(colon(ideal(2, {{1, 1}}), MonomialIdeal::zero(2)), InputError);
}

TEST(Saturate, Examples) {
  const auto m = MonomialIdeal::maximal(2);
  EXPECT_EQ(saturate(ideal(2, {{1, 1}, {0, 2}}), m), ideal(2, {{0, 1}}));
  EXPECT_TRUE(saturate(ideal(2, {{2, 0}, {0, 3}}), m).is_unit());
  const auto i = ideal(2, {{1, 1}});
  EXPECT_EQ(saturate(i, m), i);
}

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(ideal(2, {{3, 0}, {0, 2}}), ExponentVector{2, 2}));
  EXPECT_TRUE(contains(ideal(2, {{2, 0}, {1, 1}, {0, 2}}), ideal(2, {{3, 0}, {2, 1}, {0, 3}})));
  EXPECT_FALSE(contains(ideal(1, {{2}}), ExponentVector{1}));
}

TEST(Artinian, Examples) {
  EXPECT_TRUE(is_artinian_colength(ideal(2, {{2, 0}, {0, 3}})));
  EXPECT_FALSE(is_artinian_colength(ideal(2, {{2, 0}, {1, 1}})));
  EXPECT_TRUE(is_artinian_colength(MonomialIdeal::unit(2)));
}

TEST(Colength, Examples) {
  EXPECT_EQ(colength(ideal(2, {{2, 0}, {0, 3}})), 6);
  EXPECT_EQ(colength(ideal(2, {{3, 0}, {2, 1}, {0, 3}})), 7);
  EXPECT_EQ(colength(MonomialIdeal::unit(3)), 0);
}

TEST(Colength, NonArtinianThrows) {
  EXPECT_THROW(colength(ideal(2, {{2, 0}, {1, 1}})), InfiniteLength);
  EXPECT_THROW(colength_by_box(ideal(2, {{2, 0}})), InfiniteLength);
  EXPECT_THROW(colength_by_inclusion_exclusion(ideal(2, {{2, 0}})), InfiniteLength);
}

TEST(Colength, LargeBoxUsesInclusionExclusion) {
  // Box volume 3000^3 is far past the enumeration threshold.
  const auto i = ideal(3, {{3000, 0, 0}, {0, 3000, 0}, {0, 0, 3000}, {1, 1, 1}});
  const Integer expected = Integer(3000) * 3000 * 3000 - Integer(2999) * 2999 * 2999;
  EXPECT_EQ(colength(i), expected);
}

TEST(NestedLength, Examples) {
  EXPECT_EQ(nested_length(ideal(2, {{2, 0}, {1, 1}}), ideal(2, {{1, 0}})), 1);
  const auto i = ideal(2, {{2, 1}, {0, 4}});
  EXPECT_EQ(nested_length(i, i), 0);
  // (y)/(yz, x^2y, y^3) in k[x,y,z]: (I0 : y) = (z, x^2, y^2) has colength 4.
  const auto i0 = e3_relations();
  EXPECT_EQ(colon(i0, ExponentVector{0, 1, 0}), ideal(3, {{0, 0, 1}, {2, 0, 0}, {0, 2, 0}}));
  EXPECT_EQ(nested_length(i0, sum(i0, ideal(3, {{0, 1, 0}}))), 4);
}

TEST(NestedLength, RequiresContainmentAndFiniteness) {
  EXPECT_THROW(nested_length(ideal(2, {{1, 0}}), ideal(2, {{2, 0}})), InputError);
  EXPECT_THROW(nested_length(ideal(2, {{1, 1}}), ideal(2, {{1, 0}})), InfiniteLength);
}

TEST(PrimaryDecomposition, Examples) {
  const auto dec = primary_decompose(e3_relations());
  ASSERT_EQ(dec.components.size(), 2u);
  std::vector<MonomialIdeal> parts;
  for (const auto& c : dec.components) parts.push_back(c.ideal);
  EXPECT_NE(std::find(parts.begin(), parts.end(), ideal(3, {{0, 1, 0}})), parts.end());
  EXPECT_NE(std::find(parts.begin(), parts.end(), ideal(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 1}})),
            parts.end());

  const auto single = primary_decompose(ideal(2, {{2, 0}, {0, 1}}));
  ASSERT_EQ(single.components.size(), 1u);
  EXPECT_EQ(single.components[0].ideal, ideal(2, {{2, 0}, {0, 1}}));

  const auto xy = primary_decompose(ideal(2, {{1, 1}}));
  ASSERT_EQ(xy.components.size(), 2u);
}

TEST(PrimaryDecomposition, UnitRejected) {
  EXPECT_THROW(primary_decompose(MonomialIdeal::unit(2)), InputError);
}

TEST(AssociatedPrimes, Examples) {
  EXPECT_EQ(associated_primes(e3_relations()), (std::vector<MonomialPrime>{{0, 1, 2}, {1}}));
  EXPECT_EQ(associated_primes(ideal(2, {{1, 1}})), (std::vector<MonomialPrime>{{0}, {1}}));
  EXPECT_EQ(associated_primes(ideal(2, {{3, 0}, {1, 1}, {0, 2}})), (std::vector<MonomialPrime>{{0, 1}}));
}

TEST(Dimension, Examples) {
  EXPECT_EQ(dimension(e3_relations()), 2u);
  EXPECT_EQ(dimension(MonomialIdeal::zero(4)), 4u);
  EXPECT_EQ(dimension(ideal(2, {{2, 0}, {0, 2}})), 0u);
  EXPECT_THROW(dimension(MonomialIdeal::unit(2)), InputError);
}

TEST(UnmixedComponent, Examples) {
  const auto u = unmixed_component(e3_relations());
  EXPECT_FALSE(u.is_zero);
  EXPECT_EQ(u.lift, ideal(3, {{0, 1, 0}}));
  EXPECT_TRUE(unmixed_component(ideal(2, {{1, 1}})).is_zero);
  EXPECT_TRUE(unmixed_component(ideal(2, {{2, 0}, {0, 5}})).is_zero);
}

// ---------------------------------------------------------------------------

TEST(MonomialProperties, ColengthAgreesWithEnumeration) {
  instances::Generator g(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = static_cast<std::size_t>(g.uniform(1, 3));
    const auto gens = g.artinian(m, 6, g.uniform(0, 4), 6);
    const MonomialIdeal i(m, gens);
    const Integer expected = oracle::colength(m, gens);
    EXPECT_EQ(colength_by_box(i), expected);
    EXPECT_EQ(colength_by_inclusion_exclusion(i), expected);
    EXPECT_EQ(colength(i), expected);
  }
}

TEST(MonomialProperties, NestedLengthAgreesWithEnumeration) {
  instances::Generator g(12);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = static_cast<std::size_t>(g.uniform(1, 3));
    const MonomialIdeal j(m, g.monomials(m, g.uniform(1, 3), 0, 4));
    auto inner = product(j, MonomialIdeal(m, g.artinian(m, 4, g.uniform(0, 2), 4))).generators();
    for (const auto& o : j.generators()) inner.push_back(o + g.monomial(m, 0, 2));
    const MonomialIdeal i(m, inner);
    ASSERT_TRUE(contains(j, i));
    EXPECT_EQ(nested_length(i, j), oracle::nested(m, i.generators(), j.generators()));
  }
}

TEST(MonomialProperties, LatticeLaws) {
  instances::Generator g(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = static_cast<std::size_t>(g.uniform(1, 3));
    const MonomialIdeal a(m, g.monomials(m, g.uniform(1, 3), 0, 4));
    const MonomialIdeal b(m, g.monomials(m, g.uniform(1, 3), 0, 4));
    const MonomialIdeal c(m, g.monomials(m, g.uniform(1, 3), 0, 4));
    EXPECT_EQ(minimalize(m, a.generators()), a);
    EXPECT_EQ(sum(a, b), sum(b, a));
    EXPECT_EQ(product(a, b), product(b, a));
    EXPECT_EQ(intersect(a, b), intersect(b, a));
    EXPECT_EQ(sum(sum(a, b), c), sum(a, sum(b, c)));
    EXPECT_EQ(product(product(a, b), c), product(a, product(b, c)));
    EXPECT_EQ(intersect(intersect(a, b), c), intersect(a, intersect(b, c)));
    EXPECT_EQ(product(a, sum(b, c)), sum(product(a, b), product(a, c)));
    EXPECT_TRUE(oracle::same_as_intersection(m, intersect(a, b).generators(),
                                             {a.generators(), b.generators()}));
  }
}

TEST(MonomialProperties, ColonMembershipAdjunction) {
  instances::Generator g(14);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = static_cast<std::size_t>(g.uniform(1, 3));
    const MonomialIdeal i(m, g.monomials(m, g.uniform(1, 4), 1, 5));
    const MonomialIdeal j(m, g.monomials(m, g.uniform(1, 3), 0, 3));
    const auto q = colon(i, j);
    oracle::for_box(m, 6, [&](const ExponentVector& u) {
      bool expected = true;
      for (const auto& gen : j.generators()) expected = expected && oracle::member(i.generators(), u + gen);
      EXPECT_EQ(contains(q, u), expected);
    });
  }
}

TEST(MonomialProperties, SaturationFacts) {
  instances::Generator g(15);
  const auto check = [](const MonomialIdeal& i) {
    const std::size_t m = i.ambient();
    const auto mm = MonomialIdeal::maximal(m);
    const auto s = saturate(i, mm);
    EXPECT_TRUE(contains(s, i));
    EXPECT_EQ(colon(s, mm), s);
    EXPECT_EQ(nested_length(i, s), oracle::nested(m, i.generators(), s.generators()));
  };
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = static_cast<std::size_t>(g.uniform(1, 3));
    const MonomialIdeal i(m, g.monomials(m, g.uniform(1, 4), 1, 5));
    if (i.is_unit()) continue;
    check(i);
  }
}

TEST(MonomialProperties, DecompositionSound) {
  instances::Generator g(16);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = static_cast<std::size_t>(g.uniform(1, 3));
    const MonomialIdeal i(m, g.monomials(m, g.uniform(1, 4), 1, 5));
    if (i.is_unit()) continue;
    const auto dec = primary_decompose(i);
    std::vector<oracle::Gens> parts;
    for (const auto& c : dec.components) {
      EXPECT_TRUE(oracle::primary(m, c.ideal.generators())) << c.ideal;
      EXPECT_EQ(support_variables(c.ideal), c.prime);
      parts.push_back(c.ideal.generators());
    }
    EXPECT_TRUE(oracle::same_as_intersection(m, i.generators(), parts)) << i;
    for (std::size_t drop = 0; drop < parts.size() && parts.size() > 1; ++drop) {
      auto fewer = parts;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
      EXPECT_FALSE(oracle::same_as_intersection(m, i.generators(), fewer)) << "redundant: " << i;
    }
    std::set<MonomialPrime> primes;
    for (const auto& c : dec.components) EXPECT_TRUE(primes.insert(c.prime).second);
  }
}
