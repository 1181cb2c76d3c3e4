#include <gtest/gtest.h>

#include <random>

#include "injres/errors.hpp"
#include "injres/hulls.hpp"
#include "random_hulls.hpp"
#include "support.hpp"

using namespace injres;
using injres::testing::P;
using injres::testing::Q4;
using injres::testing::random_ezw;
using injres::testing::kPrimes;
using injres::testing::random_phi;

namespace {

RationalFunction phi_of(const std::string& num, const std::string& den) { return RationalFunction::from_polys(P(num), P(den)); }

std::vector<HullElement> random_elements(std::mt19937& rng) {
  using namespace injres::testing;
  return {random_principal(rng, Prime::zero()), random_principal(rng, Prime::axis(Var::Z)),
          random_principal(rng, Prime::axis(Var::W)), random_principal(rng, Prime::principal(random_prime(rng))),
          random_ezw(rng)};
}

QuadPoly random_quad(std::mt19937& rng) {
  QuadPoly r;
  std::uniform_int_distribution<int> d(0, 2);
  for (int k = 0; k < 3; ++k) r += QuadPoly::monomial(injres::testing::small_scalar(rng), d(rng), d(rng), d(rng), d(rng));
  return r;
}

}  // namespace

TEST(Hulls, OmegaExamples) {
  EXPECT_TRUE(omega(Prime::axis(Var::Z), 2, phi_of("Z^3", "1")).is_zero());
  EXPECT_FALSE(omega(Prime::axis(Var::Z), 2, phi_of("Z^2", "1")).is_zero());
  EXPECT_TRUE(EZWElement::omega(1, 1, 1).is_zero());
  EXPECT_FALSE(EZWElement::omega(1, 1, 0).is_zero());
  EXPECT_FALSE(omega(Prime::zero(), 3, phi_of("Z-W", "Z+W")).is_zero());
  // Omega_f(f^s) vanishes exactly for s >= 0
  const Prime f = Prime::principal(P("Z+W"));
  EXPECT_TRUE(omega(f, 2, phi_of("Z+W", "1")).is_zero());
  EXPECT_TRUE(omega(f, 2, phi_of("1", "1")).is_zero());
  EXPECT_FALSE(omega(f, 2, phi_of("1", "Z+W")).is_zero());
  EXPECT_THROW(EfElement(P("3*Z")), BadLocus);
  EXPECT_THROW(Prime::principal(P("1+Z")), BadLocus);
  EXPECT_EQ(Prime::principal(P("-2*W")), Prime::axis(Var::W));
}

TEST(Hulls, AxisMonomialsIndependent) {
  for (int n = 0; n <= 3; ++n)
    for (int s = -2; s <= 5; ++s)
      for (int t = -2; t <= 2; ++t) {
        const RationalFunction m = RationalFunction::monomial(1, s, t);
        EXPECT_EQ(omega(Prime::axis(Var::Z), n, m).is_zero(), s > n);
        EXPECT_EQ(omega(Prime::axis(Var::W), n, RationalFunction::monomial(1, t, s)).is_zero(), s > n);
      }
}

TEST(Hulls, ActExamples) {
  const Prime f = Prime::principal(P("Z+W"));
  EXPECT_EQ(act(Q4("X*W"), omega(f, 2, phi_of("1", "Z+W"))), omega(f, 1, phi_of("1", "Z+W")));
  EXPECT_EQ(act(Q4("X*Y"), EZWElement::omega(2, 0, 0)), EZWElement::omega(0, -1, -1));
  const RationalFunction phi = phi_of("Z-3*W^2", "Z*(Z+W)");
  for (int n = 0; n <= 4; ++n) {
    EXPECT_EQ(act(Q4("X*W").pow(n), omega(Prime::zero(), n, phi)), omega(Prime::zero(), 0, phi));
    EXPECT_EQ(act(Q4("Y*Z").pow(n), omega(Prime::zero(), n, phi)), omega(Prime::zero(), 0, phi));
  }
  EXPECT_EQ(act(Q4("Y"), omega(Prime::axis(Var::Z), 1, phi_of("1", "1"))),
            omega(Prime::axis(Var::Z), 0, phi_of("1", "Z")));
}

TEST(Hulls, LaurentExamples) {
  EXPECT_EQ(laurent_op(0, 0, 0, 2, EZWElement::omega(1, -1, -1)), EZWElement::omega(1, -1, 1));
  EXPECT_FALSE(EZWElement::omega(1, -1, 1).is_zero());
  std::mt19937 rng(5);
  const EZWElement e = random_ezw(rng);
  EXPECT_EQ(laurent_op(0, 0, 0, 0, e), e);
  // division by X does not undo multiplication by X
  const EZWElement one = EZWElement::omega(0, 0, 0);
  EXPECT_TRUE(laurent_op(-1, 0, 0, 0, act(Q4("X"), one)).is_zero());
  EXPECT_EQ(act(Q4("X"), laurent_op(-1, 0, 0, 0, one)), one);
  EXPECT_FALSE(one.is_zero());
}

TEST(Hulls, LaurentOperatorsCommute) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(0, 2);
  for (int iter = 0; iter < 100; ++iter) {
    const EZWElement e = random_ezw(rng);
    const int i = d(rng), j = d(rng), k = d(rng), l = d(rng), i2 = d(rng), j2 = d(rng), k2 = d(rng), l2 = d(rng);
    EXPECT_EQ(laurent_op(i, j, k, l, laurent_op(i2, j2, k2, l2, e)), laurent_op(i2, j2, k2, l2, laurent_op(i, j, k, l, e)));
  }
}

TEST(Hulls, SocleExamples) {
  for (int s = -3; s <= 0; ++s)
    for (int t = -3; t <= 0; ++t) EXPECT_TRUE(is_socle(EZWElement::omega(0, s, t)));
  EXPECT_FALSE(is_socle(omega(Prime::axis(Var::Z), 1, phi_of("1", "1"))));
  EXPECT_TRUE(is_socle(HullElement(EZWElement())));
  EXPECT_TRUE(is_socle(HullElement(E0Element())));
}

TEST(Hulls, SocleIsDegreeZero) {
  std::mt19937 rng(8);
  for (int iter = 0; iter < 30; ++iter)
    for (const HullElement& e : random_elements(rng)) {
      EXPECT_EQ(is_socle(e), top_degree(e) <= 0) << e.str();
      EXPECT_TRUE(is_socle(socle_project(e)));
      EXPECT_EQ(socle_project(e), graded_part(e, 0));
    }
}

TEST(Hulls, H4Examples) {
  H4Canonical one;
  one.add({1, 1, 1, 1}, 1);
  EXPECT_EQ(ezw_to_h4(EZWElement::omega(0, 0, 0)), one);
  H4Canonical w;
  w.add({1, 1, 2, 1}, 1);
  EXPECT_EQ(ezw_to_h4(EZWElement::omega(1, 0, 1)), w);
  EXPECT_EQ(h4_to_ezw(w), EZWElement::omega(1, 0, 1));
  // half of the expansion of Omega^1(1) is not annihilated by XW - YZ
  H4Canonical broken = one;
  broken.add({2, 1, 1, 2}, 1);
  EXPECT_THROW(h4_to_ezw(broken), NotInEZW);
}

TEST(Hulls, H4RoundTripAndRelation) {
  std::mt19937 rng(3);
  for (int iter = 0; iter < 100; ++iter) {
    const EZWElement e = random_ezw(rng, 6);
    const H4Canonical h = ezw_to_h4(e);
    EXPECT_EQ(h4_to_ezw(h), e);
    for (const auto& [k, c] : h.coeffs()) {
      const auto [a, b, j, l] = k;
      // a_{i(j+1)(k+1)l} = a_{(i+1)jk(l+1)}
      if (b >= 2 && j >= 2) EXPECT_EQ(c, h.at({a + 1, b - 1, j - 1, l + 1}));
      if (l >= 2) EXPECT_EQ(c, a >= 2 ? h.at({a - 1, b + 1, j + 1, l - 1}) : c);
    }
  }
}

TEST(Hulls, XWLowersGradedPieces) {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 30; ++iter)
    for (const HullElement& e : random_elements(rng)) {
      const HullElement lowered = act(Q4("X*W"), e);
      for (int n = 1; n <= 5; ++n) EXPECT_EQ(graded_part(lowered, n - 1), graded_part(e, n).shifted(1, 0, 0));
      EXPECT_TRUE(graded_part(lowered, 5).is_zero());
    }
}

TEST(Hulls, ActionIsALinearAndRespectsRelation) {
  std::mt19937 rng(12);
  for (int iter = 0; iter < 20; ++iter)
    for (const HullElement& e : random_elements(rng)) {
      EXPECT_TRUE(act(Q4("X*W-Y*Z"), e).is_zero()) << e.str();
      const QuadPoly r1 = random_quad(rng), r2 = random_quad(rng);
      EXPECT_EQ(act(r1 + r2, e), act(r1, e) + act(r2, e));
      EXPECT_EQ(act(r1 * r2, e), act(r1, act(r2, e)));
    }
}

TEST(Hulls, PrincipalGeneratorIndependence) {
  std::mt19937 rng(13);
  for (int iter = 0; iter < 40; ++iter) {
    const BivarPoly f = P(kPrimes[rng() % kPrimes.size()]);
    const RationalFunction phi = random_phi(rng, f);
    const int n = static_cast<int>(rng() % 4);
    long c = std::uniform_int_distribution<long>(-5, 5)(rng);
    if (c == 0) c = 7;
    EXPECT_EQ(EfElement::omega(f.scale(FieldElement(c)), n, phi), EfElement::omega(f, n, phi));
  }
}

TEST(Hulls, Reachability) {
  for (int n = 0; n <= 5; ++n)
    for (int s = -3; s <= n; ++s)
      for (int t = -3; t <= n; ++t) {
        if (!EZWElement::valid(n, s, t)) continue;
        bool found = false;
        for (int n1 = 0; n1 <= n && !found; ++n1) {
          const int n2 = n - n1;
          const EZWElement down = act(QuadPoly::X().pow(n1) * QuadPoly::Y().pow(n2), EZWElement::omega(n, s, t));
          found = !down.is_zero() && down == EZWElement::omega(0, s - n2, t - n1);
        }
        EXPECT_TRUE(found) << n << " " << s << " " << t;
      }
}

// Canonical form of E(Z), E(W) against the H^3 coordinates computed from the defining sum.
TEST(Hulls, AxisCanonicalFormMatchesH3) {
  std::mt19937 rng(14);
  for (Var axis : {Var::Z, Var::W}) {
    const BivarPoly v = axis == Var::Z ? BivarPoly::Z() : BivarPoly::W();
    for (int iter = 0; iter < 40; ++iter) {
      const RationalFunction phi = random_phi(rng, P(kPrimes[rng() % kPrimes.size()]));
      const int n = static_cast<int>(rng() % 4);
      const EAxisElement e = EAxisElement::omega(axis, n, phi);
      EXPECT_EQ(to_h3(e), omega_axis_h3(axis, n, phi)) << phi.str();
      // adding v^(n+1) times something regular along v changes neither route
      const RationalFunction bump(v.pow(n + 1) * injres::testing::random_poly(rng, 2, 3),
                                  FactoredDenominator(injres::testing::random_unit(rng, 1), {{P("Z+W"), 1}}));
      const RationalFunction moved = phi + bump;
      EXPECT_EQ(EAxisElement::omega(axis, n, moved), e);
      EXPECT_EQ(omega_axis_h3(axis, n, moved), to_h3(e));
      EXPECT_EQ(to_h3(e).empty(), e.is_zero());
    }
  }
}

TEST(Hulls, LocalUnitsAct) {
  std::mt19937 rng(15);
  for (int iter = 0; iter < 30; ++iter) {
    const EZWElement e = random_ezw(rng);
    const BivarPoly u = injres::testing::random_unit(rng, 2);
    EXPECT_EQ(act_local(LocalFraction(1, u), act(QuadPoly::from_bivar(u), e)), e);
    const BivarPoly g = injres::testing::random_poly(rng, 2, 3);
    EXPECT_EQ(act_local(LocalFraction(g), e), act(QuadPoly::from_bivar(g), e));
  }
}

TEST(Hulls, PrimeFieldArithmetic) {
  const Field f7 = Field::prime_field(7);
  const EZWElement e = EZWElement::omega(2, 1, -1, f7.make(3)) + EZWElement::omega(2, 1, -1, f7.make(4));
  EXPECT_TRUE(e.is_zero());
  const RationalFunction phi(BivarPoly(f7.make(2)), FactoredDenominator::of_factor(P("Z+W"), 2));
  const HullElement x = omega(Prime::principal(P("Z+W")), 1, phi);
  EXPECT_TRUE((x + x.scale(f7.make(6))).is_zero());
}
