#include <gtest/gtest.h>

#include <random>

#include "injres/errors.hpp"
#include "injres/oracle.hpp"
#include "injres/resolution.hpp"
#include "random_hulls.hpp"
#include "support.hpp"

using namespace injres;
using injres::testing::P;
using injres::testing::Q4;

namespace {

RationalFunction phi_of(const std::string& num, const std::string& den) { return RationalFunction::from_polys(P(num), P(den)); }

const PrimeIndex kZ = PrimeIndex::axis(Var::Z);
const PrimeIndex kW = PrimeIndex::axis(Var::W);

// The degree-2 chain with f-triangle applied to every height one component of e.
ChainElement triangle(const ChainElement& e) {
  ChainElement out(2);
  for (const auto& [i, x] : e.components())
    if (i.is_height_one()) out.add(i, act(f_triangle(i.prime), x));
  return out;
}

ChainElement height_one_part(const ChainElement& e, int degree) {
  ChainElement out(degree);
  for (const auto& [i, x] : e.components())
    if (i.is_height_one()) out.add(i, x);
  return out;
}

}  // namespace

TEST(Resolution, D0Examples) {
  const ChainElement a = d0(E0Element::omega(0, phi_of("W", "Z")));
  ASSERT_EQ(a.components().size(), 1u);
  EXPECT_EQ(a.at(kZ), omega(kZ.prime, 0, phi_of("W", "Z")));

  const RationalFunction phi = phi_of("1", "Z+W");
  const ChainElement b = d0(E0Element::omega(0, phi));
  EXPECT_EQ(b.components().size(), 3u);
  for (const PrimeIndex& i : {PrimeIndex::principal(P("Z+W")), kZ, kW}) {
    EXPECT_FALSE(b.at(i).is_zero());
    EXPECT_EQ(b.at(i), omega(i.prime, 0, phi));
  }
  EXPECT_TRUE(d0(E0Element()).is_zero());
}

TEST(Resolution, D1Examples) {
  EXPECT_EQ(d1_f(omega(kW.prime, 1, phi_of("1", "Z"))), EZWElement::omega(1, -1, 0));
  EXPECT_EQ(d1_f(omega(kZ.prime, 1, phi_of("1", "1"))), -EZWElement::omega(1, 0, 0));
  const EZWElement g = d1_f(omega(Prime::principal(P("Z+W")), 0, phi_of("1", "Z+W")));
  EXPECT_EQ(g, EZWElement::omega(0, 0, -1) - EZWElement::omega(0, -1, 0));
  // the same class by the oracle: [1 / WZ, Z+W] at X = Y = 1
  H2Canonical h2;
  const H4Canonical h4 = ezw_to_h4(g);
  for (const auto& [k, c] : h4.coeffs()) h2.add({k[0], k[1]}, c);
  const GeneralizedFraction raw{LocalFraction(1), {{P("W*Z"), 1}, {P("Z+W"), 1}}};
  EXPECT_TRUE(cech_equal(raw, as_fraction(h2)));
}

TEST(Resolution, MonomialIdentities) {
  for (int n = 0; n <= 4; ++n)
    for (int s = -3; s <= 4; ++s)
      for (int t = -3; t <= 4; ++t) {
        const RationalFunction m = RationalFunction::monomial(1, s, t);
        EXPECT_EQ(d1_f(omega(kW.prime, n, m)), EZWElement::omega(n, s, t));
        EXPECT_EQ(d1_f(omega(kZ.prime, n, m)), -EZWElement::omega(n, s, t));
      }
}

// d1 against the oracle on generic primes
TEST(Resolution, D1AgreesWithOracle) {
  std::mt19937 rng(31);
  for (int iter = 0; iter < 20; ++iter) {
    const BivarPoly f = injres::testing::random_prime(rng);
    const BivarPoly g = injres::testing::random_poly(rng, 2, 3);
    const BivarPoly h = injres::testing::random_unit(rng, 1);
    const int s = 1 + static_cast<int>(rng() % 2);
    const EZWElement img = d1_f(EfElement::omega(f, 0, g, h, s));
    H2Canonical h2;
    const H4Canonical h4 = ezw_to_h4(img);
    for (const auto& [k, c] : h4.coeffs()) {
      EXPECT_EQ(k[2], 1);
      EXPECT_EQ(k[3], 1);
      h2.add({k[0], k[1]}, c);
    }
    const GeneralizedFraction raw{LocalFraction(g), {{h.shift(1, 1), 1}, {f, s}}};
    EXPECT_TRUE(cech_equal(raw, as_fraction(h2))) << f.str() << " " << g.str() << " " << h.str();
  }
}

TEST(Resolution, PiExamples) {
  const FieldElement alpha(3), beta(-5);
  ChainElement c(2);
  c.add(kW, omega(kW.prime, 0, RationalFunction::monomial(alpha, 0, 0)));
  c.add(kZ, omega(kZ.prime, 0, RationalFunction::monomial(-beta, 0, 0)));
  const auto [p11, p12] = pi11_pi12(c);
  EXPECT_EQ(p11, EZWElement::omega(0, 0, 0, alpha));
  EXPECT_EQ(p12, EZWElement::omega(0, 0, 0, beta));

  const ChainElement p = pi0(E0Element::omega(0, phi_of("Z^2*W", "1")));
  EXPECT_EQ(p.at(kW), omega(kW.prime, 0, phi_of("Z^2", "1")));
  EXPECT_TRUE(p.at(kZ).is_zero());
  EXPECT_TRUE(pi0(E0Element()).is_zero());
}

TEST(Resolution, DeltaExamples) {
  ChainElement unit(0);
  unit.add(PrimeIndex::zero(), iota0(LocalFraction(1)));
  EXPECT_TRUE(delta(1, delta(0, unit)).is_zero());

  ChainElement three(3);
  three.add(PrimeIndex::maximal(0), EZWElement::omega(0, 0, 0));
  EXPECT_TRUE(delta(3, three).is_zero());

  const FieldElement alpha(2), beta(7);
  ChainElement two(2);
  two.add(kW, omega(kW.prime, 0, RationalFunction::monomial(alpha, 0, 0)));
  two.add(kZ, omega(kZ.prime, 0, RationalFunction::monomial(-beta, 0, 0)));
  ChainElement expected(3);
  expected.add(PrimeIndex::maximal(0), EZWElement::omega(0, 0, 0, alpha));
  expected.add(PrimeIndex::maximal(1), EZWElement::omega(0, 0, 0, beta));
  EXPECT_EQ(delta(2, two), expected);

  EXPECT_THROW(delta(1, unit), DegreeMismatch);
  EXPECT_THROW(ChainElement(2).add(PrimeIndex::zero(), E0Element()), DegreeMismatch);
  EXPECT_THROW(ChainElement(2).add(PrimeIndex::maximal(1), EZWElement()), DegreeMismatch);
}

TEST(Resolution, Iota0) {
  EXPECT_EQ(iota0(LocalFraction(1)), E0Element::omega(0, phi_of("Z*W", "1")));
  EXPECT_TRUE(iota0(LocalFraction(0)).is_zero());
  EXPECT_EQ(iota0(LocalFraction(P("Z"))), E0Element::omega(0, phi_of("Z^2*W", "1")));
  std::mt19937 rng(32);
  for (int iter = 0; iter < 30; ++iter) {
    ChainElement c(0);
    c.add(PrimeIndex::zero(),
          iota0(LocalFraction(injres::testing::random_poly(rng, 3, 4), injres::testing::random_unit(rng, 2))));
    EXPECT_TRUE(delta(0, c).is_zero());
  }
}

TEST(Resolution, ComplexProperty) {
  std::mt19937 rng(33);
  for (int n = 0; n <= 6; ++n)
    for (int iter = 0; iter < 100; ++iter) {
      const ChainElement e = injres::testing::random_chain(rng, n);
      const ChainElement once = delta(n, e);
      EXPECT_TRUE(delta(n + 1, once).is_zero()) << "degree " << n << ": " << e.str();
    }
}

TEST(Resolution, PiCommutation) {
  std::mt19937 rng(34);
  for (int iter = 0; iter < 40; ++iter) {
    const E0Element e = injres::testing::random_e0(rng);
    const ChainElement lhs = pi0(act(Q4("X*W"), HullElement(e)).as<E0Element>());
    EXPECT_EQ(lhs, triangle(d0(e)));

    const ChainElement c = height_one_part(injres::testing::random_chain(rng, 1), 2);
    const auto [p11, p12] = pi11_pi12(triangle(c));
    const EZWElement d = d1(c);
    EXPECT_EQ(p11, act(QuadPoly::X(), d));
    EXPECT_EQ(p12, act(QuadPoly::Y(), d));
  }
}

TEST(Resolution, D1KillsD0) {
  std::mt19937 rng(35);
  for (int iter = 0; iter < 60; ++iter) EXPECT_TRUE(d1(d0(injres::testing::random_e0(rng))).is_zero());
}

TEST(Resolution, SocleRowExact) {
  std::mt19937 rng(36);
  for (int iter = 0; iter < 60; ++iter) {
    const E0Element psi = socle_project(HullElement(injres::testing::random_e0(rng, 0))).as<E0Element>();
    const ChainElement image = d0(psi);
    EXPECT_TRUE(d1(image).is_zero());
    for (const auto& [i, x] : image.components()) EXPECT_TRUE(is_socle(x));
    const auto pre = socle_preimage(image);
    ASSERT_TRUE(pre.has_value()) << image.str();
    EXPECT_EQ(d0(*pre), image);
  }
  // not killed by d1, so no preimage
  ChainElement lone(1);
  lone.add(kW, omega(kW.prime, 0, phi_of("1", "1")));
  EXPECT_FALSE(d1(lone).is_zero());
  EXPECT_FALSE(socle_preimage(lone).has_value());
}

TEST(Resolution, SurjectivityWitnesses) {
  EXPECT_EQ(surjectivity_witness(P("W"), 0, 0), omega(kW.prime, 0, phi_of("1", "1")));
  EXPECT_EQ(surjectivity_witness(P("Z"), -1, 0), -omega(kZ.prime, 0, phi_of("1", "Z")));
  for (const std::string& f : {"W", "Z", "Z+W", "W-Z^2", "Z+W^2", "Z^2+Z*W+W^2"})
    for (int s = -2; s <= 0; ++s)
      for (int t = -2; t <= 0; ++t) {
        if (f == "Z^2+Z*W+W^2" && (s < -1 || t < -1)) continue;
        const HullElement w = surjectivity_witness(P(f), s, t);
        EXPECT_TRUE(is_socle(w));
        EXPECT_EQ(d1_f(w), EZWElement::omega(0, s, t)) << f;
      }
  // every basis element is hit
  for (int n = 0; n <= 4; ++n)
    for (int s = -3; s <= n; ++s)
      for (int t = -3; t <= n; ++t)
        if (EZWElement::valid(n, s, t))
          EXPECT_EQ(d1_f(omega(kW.prime, n, RationalFunction::monomial(1, s, t))), EZWElement::omega(n, s, t));
}

TEST(Resolution, NonExactnessWitness) {
  const HullElement e = omega(kZ.prime, 1, phi_of("Z*W", "1"));
  EXPECT_FALSE(e.is_zero());
  EXPECT_TRUE(d1_f(e).is_zero());
  EXPECT_TRUE(d0_preimage_obstructed(e.as<EAxisElement>()));
  // images of d0 with no E(W) part are never obstructed
  const ChainElement image = d0(E0Element::omega(1, phi_of("W^2", "Z")));
  EXPECT_TRUE(image.at(kW).is_zero());
  EXPECT_FALSE(d0_preimage_obstructed(image.at(kZ).as<EAxisElement>()));
}
