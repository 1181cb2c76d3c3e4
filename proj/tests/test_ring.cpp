#include <gtest/gtest.h>

#include "injres/errors.hpp"
#include "injres/parse.hpp"
#include "injres/rational.hpp"
#include "injres/ring_ops.hpp"
#include "support.hpp"

using namespace injres;
using injres::testing::P;

TEST(Field, RationalArithmetic) {
  FieldElement a = FieldElement::ratio(1, 2), b = FieldElement::ratio(-3, 4);
  EXPECT_EQ(a + b, FieldElement::ratio(-1, 4));
  EXPECT_EQ(a * b, FieldElement::ratio(-3, 8));
  EXPECT_EQ(a / b, FieldElement::ratio(-2, 3));
  EXPECT_THROW(a / FieldElement(0), DivisionByZero);
}

TEST(Field, PrimeFieldCoercion) {
  Field f7 = Field::prime_field(7);
  FieldElement x = f7.make(3);
  EXPECT_EQ(x * FieldElement(5), f7.make(1));
  EXPECT_EQ(FieldElement::ratio(1, 2) * f7.make(2), f7.make(1));
  EXPECT_EQ(x.inverse(), f7.make(5));
  EXPECT_THROW(Field::prime_field(2), UnsupportedCharacteristic);
  EXPECT_THROW(Field::prime_field(9), UnsupportedCharacteristic);
  EXPECT_THROW(f7.make(1) + Field::prime_field(11).make(1), FieldMismatch);
}

TEST(Field, AxiomsOnRandomTriples) {
  std::mt19937 rng(11);
  for (std::uint32_t p : {0u, 101u}) {
    Field k{p};
    for (int trial = 0; trial < 200; ++trial) {
      auto r = [&] {
        std::uniform_int_distribution<long> d(-50, 50), e(1, 9);
        return k.make(mpq_class(d(rng), e(rng)));
      };
      FieldElement a = r(), b = r(), c = r();
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), k.make(1));
    }
  }
}

TEST(Parse, RoundTrip) {
  for (std::string s : {"Z^2*W - 3*Z", "1/2*X*Y^3 - W + 7", "0", "-Z", "(Z+W)^2"}) {
    QuadPoly q = parse_quad(s);
    EXPECT_EQ(parse_quad(q.str()), q) << s;
  }
  EXPECT_EQ(P("(Z+W)^2"), P("Z^2 + 2*Z*W + W^2"));
  EXPECT_THROW(parse_bivar("X+Z"), ParseError);
  EXPECT_THROW(parse_quad("Z+"), ParseError);
  EXPECT_THROW(parse_quad("Q"), ParseError);
}

TEST(Parse, Fractions) {
  auto f = parse_fraction("[1 / Z^1, W-3*Z^1]");
  ASSERT_EQ(f.denominators.size(), 2u);
  EXPECT_EQ(f.denominators[1].first, parse_quad("W-3*Z"));
  auto g = parse_fraction("[(Z)/(1+Z) / (Z+W)^2, W]");
  EXPECT_EQ(g.num_den, parse_quad("1+Z"));
  EXPECT_EQ(g.denominators[0].second, 2);
  auto h = parse_fraction("[1/2*Z / Z, W]");
  EXPECT_EQ(h.num, parse_quad("1/2*Z"));
}

TEST(ExactDivide, Examples) {
  EXPECT_EQ(exact_divide(P("Z^2-W^2"), P("Z-W")), P("Z+W"));
  EXPECT_EQ(exact_divide(P("Z*W"), P("Z")), P("W"));
  EXPECT_THROW(exact_divide(P("Z+W"), P("Z")), NotDivisible);
}

TEST(Valuation, Examples) {
  EXPECT_EQ(f_adic_valuation(P("Z^3*W"), P("Z")), 3);
  EXPECT_EQ(f_adic_valuation(P("(Z+W)^2*Z"), P("Z+W")), 2);
  EXPECT_EQ(f_adic_valuation(P("W^2-Z^4"), P("W-Z^2")), 1);
  EXPECT_EQ(f_adic_valuation(BivarPoly(), P("Z")), kInfiniteValuation);
}

TEST(Valuation, PowerDividesAndNextDoesNot) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    BivarPoly f = std::vector<BivarPoly>{P("Z"), P("Z+W"), P("W-Z^2")}[trial % 3];
    BivarPoly g = injres::testing::random_poly(rng, 3) * f.pow(trial % 4);
    if (g.is_zero()) continue;
    int v = f_adic_valuation(g, f);
    EXPECT_TRUE(try_divide(g, f.pow(v)).has_value());
    EXPECT_FALSE(try_divide(g, f.pow(v + 1)).has_value());
  }
}

TEST(Gcd, Bivariate) {
  EXPECT_EQ(gcd(P("(Z+W)*(Z-W^2)"), P("(Z+W)*W")), P("Z+W"));
  EXPECT_EQ(gcd(P("Z*(1+W)"), P("Z^2")), P("Z"));
  EXPECT_TRUE(gcd(P("Z"), P("W")).is_constant());
  EXPECT_EQ(gcd(P("(1+Z)*(Z-W)^2"), P("(1+Z)*(Z-W)*W")), normalize_prime(P("(1+Z)*(Z-W)")));
}

TEST(Resultant, SylvesterOracle) {
  // 2x2 Sylvester determinant of u = W + Z, v = -W + Z in descending powers of W
  auto rb = resultant_bezout(P("Z+W"), P("Z-W"), Var::W);
  BivarPoly det = P("1*Z") - P("-1*Z");  // det [[1, Z], [-1, Z]]
  EXPECT_EQ(BivarPoly::from_uni(rb.r, Var::Z), det);
  EXPECT_EQ(rb.a * P("Z+W") + rb.b * P("Z-W"), det);
}

TEST(Resultant, DegenerateInputs) {
  auto r1 = resultant_bezout(P("Z"), P("W"), Var::W);
  EXPECT_EQ(BivarPoly::from_uni(r1.r, Var::Z), P("Z"));
  EXPECT_EQ(r1.a, BivarPoly(1));
  EXPECT_TRUE(r1.b.is_zero());
  auto r2 = resultant_bezout(P("W-Z^2"), P("W"), Var::W);
  EXPECT_EQ(r2.a * P("W-Z^2") + r2.b * P("W"), BivarPoly::from_uni(r2.r, Var::Z));
  EXPECT_EQ(r2.r.degree(), 2);
  EXPECT_THROW(resultant_bezout(P("Z+W"), P("(Z+W)*Z"), Var::W), DegenerateResultant);
}

TEST(Resultant, IdentityOnRandomPairs) {
  std::mt19937 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    BivarPoly u = injres::testing::random_poly(rng, 3), v = injres::testing::random_poly(rng, 3);
    if (u.is_constant() || v.is_constant() || !gcd(u, v).is_constant()) continue;
    for (Var e : {Var::Z, Var::W}) {
      auto rb = resultant_bezout(u, v, e);
      Var keep = e == Var::W ? Var::Z : Var::W;
      EXPECT_EQ(rb.a * u + rb.b * v, BivarPoly::from_uni(rb.r, keep));
      ++checked;
    }
  }
  EXPECT_GT(checked, 40);
}

TEST(SeriesInverse, Examples) {
  EXPECT_EQ(series_inverse_truncated(P("1-Z"), 3, 1), P("1+Z+Z^2"));
  EXPECT_EQ(series_inverse_truncated(P("2"), 1, 1), P("1/2"));
  EXPECT_EQ(series_inverse_truncated(P("1+Z+W"), 2, 2), P("1-Z-W+2*Z*W"));
  EXPECT_THROW(series_inverse_truncated(P("Z+W"), 2, 2), NotUnit);
}

TEST(SeriesInverse, MultipliesBackOnRandomUnits) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    BivarPoly q = injres::testing::random_unit(rng, 3);
    int bz = 1 + trial % 5, bw = 1 + trial % 4;
    BivarPoly p = series_inverse_truncated(q, bz, bw);
    EXPECT_EQ(BivarPoly::mul_truncated(p, q, bz, bw), BivarPoly(1)) << q.str();
  }
}

TEST(AdicExpand, Examples) {
  auto e1 = adic_expand(P("1"), P("1-Z"), Var::Z, 2);
  EXPECT_EQ(e1.size(), 3u);
  for (int m = 0; m <= 2; ++m) EXPECT_EQ(e1.at(m), UniRat(FieldElement(1)));
  auto e2 = adic_expand(P("W"), P("Z"), Var::Z, 0);
  ASSERT_EQ(e2.size(), 1u);
  EXPECT_EQ(e2.at(-1), UniRat(UniPoly::x()));
  auto e3 = adic_expand(P("Z"), P("W+Z"), Var::Z, 2);
  ASSERT_EQ(e3.size(), 2u);
  EXPECT_EQ(e3.at(1), UniRat::monomial(1, -1));
  EXPECT_EQ(e3.at(2), UniRat::monomial(-1, -2));
}

TEST(AdicExpand, RoundTripValuation) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    BivarPoly num = injres::testing::random_poly(rng, 3);
    BivarPoly den = injres::testing::random_poly(rng, 2) + P("W+1");
    if (num.is_zero() || den.is_zero() || den.at_zero(Var::Z).is_zero()) continue;
    den = den.shift(trial % 3, 0);
    const int order = 3;
    auto cs = adic_expand(num, den, Var::Z, order);
    const int k = den.monomial_valuation(Var::Z);
    const int low = std::min(0, cs.empty() ? 0 : cs.begin()->first);
    UniPoly common(FieldElement(1));
    for (const auto& [m, c] : cs) common = *UniPoly::divide_exact(common * c.den(), UniPoly::gcd(common, c.den()));
    BivarPoly series;
    for (const auto& [m, c] : cs)
      series += BivarPoly::from_uni(*UniPoly::divide_exact(c.num() * common, c.den()), Var::W).shift(m - low, 0);
    BivarPoly lhs = (num * BivarPoly::from_uni(common, Var::W)).shift(-low, 0) - den * series;
    if (lhs.is_zero()) continue;
    EXPECT_GE(f_adic_valuation(lhs, P("Z")), order + 1 + k - low) << num.str() << " / " << den.str();
  }
}

TEST(Irreducible, Examples) {
  EXPECT_EQ(verify_irreducible(P("Z+W"), 1000), Irreducibility::Verified);
  EXPECT_EQ(verify_irreducible(P("Z*W"), 1000), Irreducibility::Reducible);
  EXPECT_EQ(verify_irreducible(P("W-Z^2"), 1000), Irreducibility::Verified);
  EXPECT_EQ(verify_irreducible(P("Z^2-W^2"), 100000), Irreducibility::Reducible);
  Field f7 = Field::prime_field(7);
  BivarPoly g = P("Z^2+W^2").scale(f7.make(1));  // -1 is not a square mod 7
  EXPECT_EQ(verify_irreducible(g, 1000000), Irreducibility::Verified);
}

TEST(RationalFunction, FactoredArithmetic) {
  RationalFunction a = RationalFunction::from_polys(P("1"), P("Z+W"));
  RationalFunction b = RationalFunction::from_polys(P("Z"), P("Z*(Z+W)"));
  EXPECT_EQ(a, b);
  EXPECT_EQ(b.den().multiplicity(P("Z")), 0);
  RationalFunction c = a * RationalFunction(P("Z+W"));
  EXPECT_EQ(c, RationalFunction(P("1")));
  EXPECT_TRUE(c.den().factors().empty());
  RationalFunction d = RationalFunction::monomial(1, -1, 2) + RationalFunction::monomial(2, 0, -1);
  EXPECT_EQ(d, RationalFunction::from_polys(P("W^3 + 2*Z"), P("Z*W")));
  EXPECT_THROW(RationalFunction::from_polys(P("1"), P("(Z+W)*(Z-W)")), UnfactoredDenominator);
}

TEST(LocalFraction, LocusChecks) {
  EXPECT_NO_THROW(LocalFraction(P("Z"), P("1+W")));
  EXPECT_THROW(LocalFraction(P("1"), P("Z+W")), BadLocus);
  EXPECT_THROW(LocalFraction(P("1"), P("Z*(Z+W)"), Locus::principal(P("Z+W"))), BadLocus);
  EXPECT_EQ(LocalFraction(P("Z"), P("1+W")) + LocalFraction(P("1")), LocalFraction(P("1+Z+W"), P("1+W")));
}
