#include <gtest/gtest.h>

#include "hilbco/huneke.hpp"
#include "support/instances.hpp"

using namespace hilbco;

namespace {

using Gens = std::vector<ExponentVector>;

}  // namespace

TEST(Huneke, PlaneExample) {
  auto r = instances::polynomial_ring(2);
  IdealHandle q(r, Gens{{3, 0}, {2, 1}, {0, 3}});
  IdealHandle k(r, Gens{{2, 0}, {1, 1}, {0, 2}});
  IdealHandle j(r, Gens{{3, 0}, {0, 3}});
  LengthCache cache;
  const auto v = v_sequence(q, k, j, 12, cache);
  ASSERT_EQ(v.values.size(), 13u);
  EXPECT_EQ(v.values[0], 9);
  EXPECT_EQ(v.values[1], -3);
  for (std::size_t n = 2; n <= 12; ++n) EXPECT_EQ(v.values[n], 0) << n;
  EXPECT_LE(v.tail_zero_from, 12u);
  EXPECT_EQ(v.reduction_number, 2u);  // (x^2y)^2 is in Q^2 but not in JQ
  EXPECT_FALSE(v.cm_warning);

  const auto [g1, g2] = g12_from_v(v, length_of_quotient(k));
  const auto fit = extract_coefficients(q, k);
  EXPECT_EQ(g1, fit.g[1]);
  EXPECT_EQ(g2, fit.g[2]);
  EXPECT_EQ(g1, -3);
}

TEST(Huneke, QEqualsJ) {
  auto r = instances::polynomial_ring(2);
  IdealHandle q(r, Gens{{2, 0}, {0, 2}});
  LengthCache cache;
  const auto v = v_sequence(q, q, q, 8, cache);
  EXPECT_EQ(v.reduction_number, 0u);
  EXPECT_EQ(v.values[1], -4);  // 4 - l(R/Q^2) + l(R/Q) = 4 - 12 + 4
  const auto [g1, g2] = g12_from_v(v, 4);
  EXPECT_EQ(g1, -4);
  EXPECT_EQ(g2, 4);
}

TEST(Huneke, Rejections) {
  LengthCache cache;
  auto s = make_ring(RingPresentation(AffineSemigroup(2, {{5, 0}, {1, 4}, {4, 1}, {0, 5}})));
  IdealHandle sq(s, SemigroupIdeal(s->semigroup(), {{5, 0}, {0, 5}}));
  EXPECT_THROW(v_sequence(sq, sq, sq, 8, cache), UnsupportedOperation);

  auto r3 = instances::polynomial_ring(3);
  IdealHandle q3(r3, Gens{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_THROW(v_sequence(q3, q3, q3, 8, cache), UnsupportedOperation);

  auto r = instances::polynomial_ring(2);
  IdealHandle m2(r, Gens{{2, 0}, {1, 1}, {0, 2}});
  IdealHandle far(r, Gens{{2, 0}, {0, 4}});  // multiplicity 8, not integral over m^2
  EXPECT_THROW(v_sequence(m2, m2, far, 8, cache), InputError);
  IdealHandle outside(r, Gens{{1, 0}, {0, 2}});
  EXPECT_THROW(v_sequence(m2, m2, outside, 8, cache), InputError);
  IdealHandle k(r, Gens{{3, 0}, {0, 3}});
  EXPECT_THROW(v_sequence(m2, k, m2, 8, cache), InputError);
}

TEST(Huneke, ShortRunDoesNotConverge) {
  VSequence v;
  v.values = {9, -3, 1};
  v.tail_zero_from = 3;
  EXPECT_THROW(g12_from_v(v, 3), NoStabilization);
}

// ---------------------------------------------------------------------------

TEST(HunekeProperties, AgreesWithFitOnCohenMacaulayInstances) {
  instances::Generator g(51);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = instances::cm_instance(g, 2);
    LengthCache cache;
    const auto v = v_sequence(inst.q, inst.k, inst.q, 12, cache);
    EXPECT_FALSE(v.cm_warning);
    const auto [g1, g2] = g12_from_v(v, length_of_quotient(inst.k));
    const auto fit = extract_coefficients(inst.q, inst.k);
    EXPECT_EQ(g1, fit.g[1]);
    EXPECT_EQ(g2, fit.g[2]);
  }
}
