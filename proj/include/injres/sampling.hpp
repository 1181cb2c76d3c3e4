#pragma once

#include <random>
#include <string>
#include <vector>

#include "injres/field.hpp"
#include "injres/parse.hpp"
#include "injres/resolution.hpp"

// Seeded generators shared by the tests, the CLI and the acceptance suites.
namespace injres::sampling {

inline FieldElement small_scalar(std::mt19937& rng, int lo = -3, int hi = 3, Field field = Field::rationals()) {
  return field.make(std::uniform_int_distribution<long>(lo, hi)(rng));
}

// Random polynomial with total degree <= deg and small integer coefficients.
inline BivarPoly random_poly(std::mt19937& rng, int deg, int terms = 4, Field field = Field::rationals()) {
  BivarPoly p;
  std::uniform_int_distribution<int> d(0, deg);
  for (int k = 0; k < terms; ++k) {
    int a = d(rng), b = d(rng);
    if (a + b > deg) continue;
    p += BivarPoly::monomial(small_scalar(rng, -3, 3, field), a, b);
  }
  return p;
}

inline BivarPoly random_unit(std::mt19937& rng, int deg, Field field = Field::rationals()) {
  BivarPoly p = random_poly(rng, deg, 3, field);
  return p - BivarPoly(p.const_term()) + BivarPoly(field.make(std::uniform_int_distribution<long>(1, 4)(rng)));
}

inline const std::vector<std::string> kPrimes = {"Z+W", "W-Z^2", "Z+W^2"};

inline BivarPoly random_prime(std::mt19937& rng) { return parse_bivar(kPrimes[rng() % kPrimes.size()]); }

// num / (u Z^a W^b f^c) with a, b, c in [0, max_exp]
inline RationalFunction random_phi(std::mt19937& rng, const BivarPoly& f, int max_exp = 2, Field field = Field::rationals()) {
  BivarPoly num = random_poly(rng, 3, 4, field);
  if (num.is_zero()) num = BivarPoly(field.make(1));
  std::uniform_int_distribution<int> e(0, max_exp);
  FactoredDenominator den(random_unit(rng, 1, field), {{BivarPoly::Z(), e(rng)}, {BivarPoly::W(), e(rng)}, {f, e(rng)}});
  return {num, den};
}

inline HullElement random_principal(std::mt19937& rng, const Prime& q, int max_n = 3, int terms = 3,
                                    Field field = Field::rationals()) {
  const BivarPoly f = q.kind == Prime::Kind::Irr ? q.f : random_prime(rng);
  HullElement e = HullElement::zero_at(q);
  for (int k = 0; k < terms; ++k)
    e += omega(q, static_cast<int>(rng() % static_cast<unsigned>(max_n + 1)), random_phi(rng, f, 2, field));
  return e;
}

inline EZWElement random_ezw(std::mt19937& rng, int terms = 4, int max_n = 4, Field field = Field::rationals()) {
  EZWElement e;
  std::uniform_int_distribution<int> n(0, max_n), st(-3, 3);
  for (int k = 0; k < terms; ++k) e.add(n(rng), st(rng), st(rng), small_scalar(rng, -3, 3, field));
  return e;
}

inline E0Element random_e0(std::mt19937& rng, int max_n = 3, Field field = Field::rationals()) {
  return random_principal(rng, Prime::zero(), max_n, 3, field).as<E0Element>();
}

inline ChainElement random_chain(std::mt19937& rng, int degree, Field field = Field::rationals()) {
  ChainElement c(degree);
  auto height_one = [&](int max_n) {
    c.add(PrimeIndex::axis(Var::Z), random_principal(rng, Prime::axis(Var::Z), max_n, 2, field));
    c.add(PrimeIndex::axis(Var::W), random_principal(rng, Prime::axis(Var::W), max_n, 2, field));
    const PrimeIndex f = PrimeIndex::principal(random_prime(rng));
    c.add(f, random_principal(rng, f.prime, max_n, 2, field));
  };
  switch (degree) {
    case 0:
      c.add(PrimeIndex::zero(), random_e0(rng, 3, field));
      break;
    case 1:
      c.add(PrimeIndex::zero(), random_e0(rng, 3, field));
      height_one(2);
      break;
    case 2:
      height_one(2);
      c.add(PrimeIndex::maximal(0), random_ezw(rng, 4, 4, field));
      break;
    default:
      c.add(PrimeIndex::maximal(0), random_ezw(rng, 4, 4, field));
      c.add(PrimeIndex::maximal(1), random_ezw(rng, 4, 4, field));
  }
  return c;
}

}  // namespace injres::sampling
