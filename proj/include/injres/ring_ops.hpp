#pragma once

#include <limits>
#include <map>

#include "injres/bivar.hpp"

namespace injres {

inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

// g / f, or NotDivisible.
BivarPoly exact_divide(const BivarPoly& g, const BivarPoly& f);
std::optional<BivarPoly> try_divide(const BivarPoly& g, const BivarPoly& f);

// Largest s with f^s | g; kInfiniteValuation for g = 0.
int f_adic_valuation(const BivarPoly& g, const BivarPoly& f);

// Content of p viewed as a polynomial in `main` (a polynomial in the other variable), monic.
UniPoly content(const BivarPoly& p, Var main);
BivarPoly gcd(const BivarPoly& a, const BivarPoly& b);

struct ResultantBezout {
  UniPoly r;  // in the variable that was kept
  BivarPoly a;
  BivarPoly b;
};
// r = a*u + b*v with r the Sylvester resultant eliminating `eliminate`.
ResultantBezout resultant_bezout(const BivarPoly& u, const BivarPoly& v, Var eliminate);

// p with p*q = 1 modulo Z^boundZ, W^boundW.
BivarPoly series_inverse_truncated(const BivarPoly& q, int boundZ, int boundW);
UniPoly series_inverse_truncated(const UniPoly& q, int bound);

// Coefficients c_m (m <= order) with num/den = sum c_m v^m modulo v^{order+1} locally at (v).
std::map<int, UniRat> adic_expand(const BivarPoly& num, const BivarPoly& den, Var v, int order);

enum class Irreducibility { Verified, Unverified, Reducible };
Irreducibility verify_irreducible(const BivarPoly& f, long effort_bound);

// Generator of (f) normalized monic in lex order W > Z.
BivarPoly normalize_prime(const BivarPoly& f);

// Fraction-free determinant over kappa[y].
UniPoly bareiss_determinant(std::vector<std::vector<UniPoly>> m);

}  // namespace injres
