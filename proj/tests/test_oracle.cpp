#include <gtest/gtest.h>

#include <random>

#include "injres/errors.hpp"
#include "injres/oracle.hpp"
#include "support.hpp"

using namespace injres;
using injres::testing::P;

namespace {

GeneralizedFraction frac(const BivarPoly& num, const BivarPoly& d1, int e1, const BivarPoly& d2, int e2) {
  return {LocalFraction(num), {{d1, e1}, {d2, e2}}};
}

}  // namespace

TEST(Membership, Examples) {
  EXPECT_TRUE(local_membership({P("Z^2"), {P("Z")}, 4}));
  EXPECT_TRUE(local_membership({P("Z"), {P("Z+W"), P("W")}, 4}));
  for (int bound = 0; bound <= 6; ++bound) {
    EXPECT_FALSE(local_membership({P("1"), {P("Z"), P("W")}, bound}));
    EXPECT_EQ(decide_membership({P("1"), {P("Z"), P("W")}, bound + 1}), Membership::NotMember);
  }
}

TEST(Membership, NeedsUnitMultiplier) {
  // Z = (Z - Z^2) / (1 - Z) locally, never globally from Z - Z^2 alone
  EXPECT_TRUE(local_membership({P("Z"), {P("Z-Z^2")}, 3}));
  EXPECT_FALSE(local_membership({P("Z"), {P("Z-Z^2")}, 3, false}));
  auto w = membership_witness({P("Z"), {P("Z-Z^2")}, 3});
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->unit.const_term(), FieldElement(1));
  EXPECT_EQ(w->unit * P("Z"), w->coefficients[0] * P("Z-Z^2"));
}

TEST(Membership, MonotoneInBound) {
  std::mt19937 rng(21);
  for (int iter = 0; iter < 30; ++iter) {
    BivarPoly t = injres::testing::random_poly(rng, 4, 4);
    std::vector<BivarPoly> gens = {P("Z+W^2"), P("W-Z^2")};
    bool seen = false;
    for (int bound = 0; bound <= 8; ++bound) {
      bool now = membership_witness({t, gens, bound}).has_value();
      if (seen) EXPECT_TRUE(now);
      seen = seen || now;
    }
  }
}

TEST(Membership, MaximalIdealPower) {
  EXPECT_EQ(maximal_ideal_power_inside({P("Z"), P("W")}, 5), 1);
  EXPECT_EQ(maximal_ideal_power_inside({P("Z^2"), P("W^3")}, 8), 4);
  EXPECT_FALSE(maximal_ideal_power_inside({P("Z*W"), P("Z^2")}, 8).has_value());
}

TEST(CechEqual, Examples) {
  EXPECT_TRUE(cech_equal(frac(1, P("Z"), 1, P("W"), 1), frac(1, P("Z"), 1, P("W"), 1)));
  for (long a : {-3, 1, 5}) {
    BivarPoly shifted = P("W") - P("Z").scale(FieldElement(a));
    EXPECT_TRUE(cech_equal(frac(1, P("Z"), 1, shifted, 1), frac(1, P("Z"), 1, P("W"), 1)));
  }
  GeneralizedFraction half{LocalFraction(BivarPoly(FieldElement(mpq_class(-1, 2)))), {{P("Z"), 1}, {P("W"), 1}}};
  EXPECT_TRUE(cech_equal(frac(1, P("Z+W"), 1, P("Z-W"), 1), half));
  EXPECT_FALSE(cech_equal(frac(1, P("Z+W"), 1, P("Z-W"), 1), frac(1, P("Z"), 1, P("W"), 1)));
}

TEST(CechEqual, TransformationExample) {
  GeneralizedFraction a = frac(1, P("W*Z"), 1, P("Z+W"), 1);
  GeneralizedFraction b = frac(P("Z-W"), P("Z"), 2, P("W"), 2);
  EXPECT_TRUE(cech_equal(a, b));
}

TEST(CechEqual, VanishingAndUnits) {
  EXPECT_TRUE(cech_equal(frac(P("Z"), P("Z"), 1, P("W"), 1), frac(0, P("Z"), 1, P("W"), 1)));
  EXPECT_TRUE(cech_equal(frac(P("W-Z^2"), P("Z+W"), 1, P("W-Z^2"), 1), frac(0, P("Z"), 1, P("W"), 1)));
  GeneralizedFraction u{LocalFraction(1, P("1+Z")), {{P("Z"), 2}, {P("W"), 1}}};
  EXPECT_TRUE(cech_equal(u, frac(P("1-Z"), P("Z"), 2, P("W"), 1)));
  EXPECT_FALSE(cech_equal(u, frac(P("1+Z"), P("Z"), 2, P("W"), 1)));
}

TEST(CechEqual, BoundTooSmall) {
  EXPECT_THROW(cech_equal(frac(1, P("Z*W"), 1, P("Z"), 1), frac(1, P("Z"), 1, P("W"), 1), 6), BoundExceeded);
}

// Agreement with reduce_h2 on random fractions, in both directions.
TEST(CechEqual, AgreesWithReduction) {
  std::mt19937 rng(2024);
  const std::vector<BivarPoly> pool = {P("Z"), P("W"), P("Z+W"), P("Z-W"), P("W-Z^2"), P("Z+W^2")};
  int checked = 0;
  for (int iter = 0; checked < 40; ++iter) {
    const BivarPoly& d1 = pool[rng() % pool.size()];
    const BivarPoly& d2 = pool[rng() % pool.size()];
    if (d1 == d2) continue;
    int e1 = 1 + static_cast<int>(rng() % 2), e2 = 1 + static_cast<int>(rng() % 2);
    GeneralizedFraction gf = frac(injres::testing::random_poly(rng, 2, 3), d1, e1, d2, e2);
    H2Canonical c = reduce_h2(gf);
    EXPECT_TRUE(cech_equal(gf, as_fraction(c))) << d1.str() << "^" << e1 << ", " << d2.str() << "^" << e2;
    // perturbing the canonical form by one basis element must be detected
    H2Canonical off = c;
    off.add({1, 1}, 1);
    EXPECT_FALSE(cech_equal(gf, as_fraction(off)));
    ++checked;
  }
}
