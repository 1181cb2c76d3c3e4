#include <gtest/gtest.h>

#include <random>

#include "injres/errors.hpp"
#include "injres/gfrac.hpp"
#include "injres/ring_ops.hpp"
#include "support.hpp"

using namespace injres;
using injres::testing::P;

namespace {

H2Canonical h2(std::initializer_list<std::pair<std::pair<int, int>, long>> terms) {
  H2Canonical c;
  for (const auto& [k, v] : terms) c.add(k, FieldElement(v));
  return c;
}

// Direct expansion for monomial denominators: [sum c Z^i W^j / Z^a, W^b].
H2Canonical monomial_oracle(const BivarPoly& num, int a, int b) {
  H2Canonical c;
  num.for_each_term([&](int i, int j, const FieldElement& x) {
    if (i < a && j < b) c.add({a - i, b - j}, x);
  });
  return c;
}

LocalFraction lf(const BivarPoly& p) { return LocalFraction(p); }

}  // namespace

TEST(ReduceH2, Examples) {
  EXPECT_EQ(reduce_h2(lf(1), {P("Z")}, {P("W")}), h2({{{1, 1}, 1}}));
  EXPECT_EQ(reduce_h2(lf(1), {P("Z")}, {P("W-3*Z")}), h2({{{1, 1}, 1}}));
  H2Canonical half;
  half.add({1, 1}, FieldElement(mpq_class(-1, 2)));
  EXPECT_EQ(reduce_h2(lf(1), {P("Z+W")}, {P("Z-W")}), half);
}

TEST(ReduceH2, VanishingCases) {
  EXPECT_TRUE(reduce_h2(lf(1), {P("1+Z")}, {P("W")}).is_zero());
  EXPECT_TRUE(reduce_h2(lf(P("Z")), {P("Z")}, {P("W")}).is_zero());
  EXPECT_TRUE(reduce_h2(lf(1), {P("Z"), 0}, {P("W")}).is_zero());
  EXPECT_THROW(reduce_h2(lf(1), {P("Z")}, {P("Z*W")}), NotSystemOfParameters);
}

TEST(ReduceH2, MonomialDenominatorsMatchExpansion) {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 40; ++iter) {
    BivarPoly num = injres::testing::random_poly(rng, 5, 6);
    int a = 1 + static_cast<int>(rng() % 4), b = 1 + static_cast<int>(rng() % 4);
    EXPECT_EQ(reduce_h2(lf(num), {P("Z"), a}, {P("W"), b}), monomial_oracle(num, a, b));
  }
}

TEST(ReduceH2, NumeratorDenominatorUnit) {
  // 1/(1-Z) = 1 + Z + Z^2 + ...
  LocalFraction w(1, P("1-Z"));
  EXPECT_EQ(reduce_h2(w, {P("Z"), 3}, {P("W")}), monomial_oracle(P("1+Z+Z^2"), 3, 1));
}

TEST(ReduceH2, UnitCommonFactorIsAbsorbed) {
  // [1 / (1+Z) Z, (1+Z) W] = [1/(1+Z)^2 / Z, W]
  EXPECT_EQ(reduce_h2(lf(1), {P("(1+Z)*Z")}, {P("(1+Z)*W")}), h2({{{1, 1}, 1}}));
}

// The transformation law against the monomial expansion, over random matrices.
TEST(ReduceH2, InvariantUnderTransformation) {
  std::mt19937 rng(5);
  int checked = 0;
  for (int iter = 0; iter < 60 && checked < 25; ++iter) {
    int a = 1 + static_cast<int>(rng() % 3), b = 1 + static_cast<int>(rng() % 3);
    BivarPoly num = injres::testing::random_poly(rng, 4, 5);
    TransformMatrix r;
    for (auto& row : r)
      for (auto& e : row) e = lf(injres::testing::random_poly(rng, 2, 3));
    const BivarPoly x1 = BivarPoly::monomial(1, a, 0), x2 = BivarPoly::monomial(1, 0, b);
    std::array<BivarPoly, 2> target = {r[0][0].num() * x1 + r[0][1].num() * x2, r[1][0].num() * x1 + r[1][1].num() * x2};
    if (target[0].is_zero() || target[1].is_zero() || !injres::gcd(target[0], target[1]).is_constant()) continue;
    GeneralizedFraction gf{lf(num), {{P("Z"), a}, {P("W"), b}}};
    GeneralizedFraction moved = apply_transformation(gf, r, target);
    EXPECT_EQ(reduce_h2(moved), monomial_oracle(num, a, b)) << target[0].str() << " ; " << target[1].str();
    ++checked;
  }
  EXPECT_GE(checked, 20);
}

TEST(ReduceH2, Linearity) {
  std::mt19937 rng(3);
  for (int iter = 0; iter < 20; ++iter) {
    BivarPoly n1 = injres::testing::random_poly(rng, 3), n2 = injres::testing::random_poly(rng, 3);
    FieldElement c = injres::testing::small_scalar(rng);
    Denominator d1{P("Z+W^2"), 2}, d2{P("W-Z+Z*W"), 1};
    EXPECT_EQ(reduce_h2(lf(n1 + n2.scale(c)), d1, d2), reduce_h2(lf(n1), d1, d2) + reduce_h2(lf(n2), d1, d2).scale(c));
  }
}

TEST(ReduceH2, SwappingDenominatorsFlipsSign) {
  std::mt19937 rng(8);
  for (int iter = 0; iter < 10; ++iter) {
    BivarPoly num = injres::testing::random_poly(rng, 3);
    Denominator d1{P("Z-W^2")}, d2{P("W+Z^2"), 2};
    EXPECT_EQ(reduce_h2(lf(num), d1, d2), -reduce_h2(lf(num), d2, d1));
  }
}

TEST(ReduceH2, PrimeField) {
  Field f7 = Field::prime_field(7);
  LocalFraction one(BivarPoly(f7(1)));
  H2Canonical expected;
  expected.add({1, 1}, f7(-1) / f7(2));
  EXPECT_EQ(reduce_h2(one, {P("Z+W")}, {P("Z-W")}), expected);
}

TEST(Transformation, Example) {
  // [1/WZ, Z+W] with r = (-1, Z; -1, W) becomes [(Z-W)/Z^2, W^2]
  GeneralizedFraction gf{lf(1), {{P("W*Z")}, {P("Z+W")}}};
  TransformMatrix r = {{{lf(-1), lf(P("Z"))}, {lf(-1), lf(P("W"))}}};
  GeneralizedFraction out = apply_transformation(gf, r, {P("Z^2"), P("W^2")});
  EXPECT_TRUE(out.numerator == lf(P("Z-W")));
  EXPECT_EQ(reduce_h2(out), reduce_h2(gf));
  EXPECT_EQ(reduce_h2(gf), h2({{{1, 2}, 1}, {{2, 1}, -1}}));
}

TEST(Transformation, RejectsWrongMatrix) {
  GeneralizedFraction gf{lf(1), {{P("Z")}, {P("W")}}};
  TransformMatrix r = {{{lf(1), lf(0)}, {lf(0), lf(1)}}};
  EXPECT_THROW(apply_transformation(gf, r, {P("Z"), P("W+Z")}), MatrixMismatch);
}

TEST(H4, Examples) {
  H4Canonical a = h4_reduce(lf(1), {P("W*Z")}, {P("Z+W")}, 1, 1);
  H4Canonical expected;
  expected.add({1, 2, 1, 1}, 1);
  expected.add({2, 1, 1, 1}, -1);
  EXPECT_EQ(a, expected);

  H4Canonical b = h4_reduce(lf(P("Z")), {P("Z"), 2}, {P("W"), 2}, 2, 1);
  H4Canonical expected_b;
  expected_b.add({1, 2, 2, 1}, 1);
  EXPECT_EQ(b, expected_b);
  EXPECT_TRUE(h4_reduce(lf(1), {P("Z")}, {P("W")}, 0, 1).is_zero());
}

TEST(H1, ZeroAndEquality) {
  const BivarPoly f = P("Z-W^2");
  EXPECT_THROW(h1_class(1, f * P("1+Z"), f, 1), BadDenominator);
  H1Class c = h1_class(f * P("Z"), 1, f, 1);
  EXPECT_TRUE(h1_is_zero(c));
  H1Class d = h1_class(P("Z"), 1, f, 2);
  EXPECT_FALSE(h1_is_zero(d));
  // Z / f^2 = (f + W^2) / f^2 = 1/f + W^2/f^2
  H1Class e = h1_add(h1_class(1, 1, f, 1), h1_class(P("W^2"), 1, f, 2));
  EXPECT_TRUE(h1_equal(d, e));
  EXPECT_TRUE(h1_is_zero(h1_add(d, h1_scale(e, -1))));
  // changing h by something congruent: 1/((1+f) f) = 1/f - 1/(1+f)
  EXPECT_TRUE(h1_equal(h1_class(1, P("1") + f, f, 1), h1_class(1, 1, f, 1)));
}

TEST(Lemma, Example) {
  RewriteResult r = lemma_onto_rewrite(P("Z+W"), 1, 1);
  EXPECT_EQ(r.ell, 2);
  EXPECT_TRUE(r.g == lf(P("Z")));
}

TEST(Lemma, NotApplicable) {
  EXPECT_THROW(lemma_onto_rewrite(P("W"), 1, 1), NotApplicable);
  EXPECT_THROW(lemma_onto_rewrite(P("W+W^2"), 1, 1), NotApplicable);
  RewriteResult r = lemma_onto_rewrite(P("3*Z"), 2, 2);
  EXPECT_EQ(r.ell, 2);
}

// [g / W^t, f^l] = [1 / W^t, Z^s] for every s, t <= 4.
TEST(Lemma, RewriteHoldsForSmallExponents) {
  for (const char* fs : {"Z+W", "Z-W^2", "W-Z^2", "Z^2+W^3", "2*Z+Z*W+W^2", "Z+Z^2+W"}) {
    const BivarPoly f = P(fs);
    for (int s = 1; s <= 4; ++s) {
      for (int t = 1; t <= 4; ++t) {
        RewriteResult r = lemma_onto_rewrite(f, s, t);
        H2Canonical lhs = reduce_h2(r.g, {P("W"), t}, {f, r.ell});
        // [1 / W^t, Z^s] = -[1 / Z^s, W^t]
        EXPECT_EQ(lhs, h2({{{s, t}, -1}})) << fs << " s=" << s << " t=" << t;
      }
    }
  }
}

TEST(ReduceH2, ShearInvariance) {
  std::mt19937 rng(17);
  for (int iter = 0; iter < 20; ++iter) {
    BivarPoly num = injres::testing::random_poly(rng, 3);
    FieldElement a = injres::testing::small_scalar(rng, -5, 5);
    const BivarPoly x1 = P("Z+W^2"), x2 = P("W-Z");
    EXPECT_EQ(reduce_h2(lf(num), {x1}, {x2 - x1.scale(a)}), reduce_h2(lf(num), {x1}, {x2}));
  }
}

TEST(ReduceH2, CanonicalInputIsFixed) {
  std::mt19937 rng(4);
  for (int iter = 0; iter < 20; ++iter) {
    H2Canonical c;
    for (int k = 0; k < 4; ++k)
      c.add({1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 4)}, injres::testing::small_scalar(rng));
    int a = 1, b = 1;
    for (const auto& [k, v] : c.coeffs()) a = std::max(a, k.first), b = std::max(b, k.second);
    BivarPoly num;
    for (const auto& [k, v] : c.coeffs()) num += BivarPoly::monomial(v, a - k.first, b - k.second);
    EXPECT_EQ(reduce_h2(lf(num), {P("Z"), a}, {P("W"), b}), c);
  }
}

TEST(Lemma, MixedQuadratic) {
  const BivarPoly f = P("Z^2+Z*W+W^2");
  for (int s = 1; s <= 4; ++s)
    for (int t = 1; t <= 4; ++t) {
      RewriteResult r = lemma_onto_rewrite(f, s, t);
      EXPECT_EQ(reduce_h2(r.g, {P("W"), t}, {f, r.ell}), h2({{{s, t}, -1}})) << " s=" << s << " t=" << t;
    }
}
