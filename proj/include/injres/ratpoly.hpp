#pragma once

#include <vector>

#include "injres/bivar.hpp"

namespace injres {

// Polynomial in a main variable with coefficients rational functions in the other
// variable: the Euclidean ring kappa(y)[x] used for Bezout identities and partial fractions.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<UniRat> coeffs);
  static RatPoly from_bivar(const BivarPoly& p, Var main);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<UniRat>& coeffs() const { return coeffs_; }
  UniRat lead() const { return coeffs_.empty() ? UniRat() : coeffs_.back(); }

  RatPoly operator-() const;
  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  RatPoly scale(const UniRat& c) const;

  static void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);
  // Returns g = s*a + t*b with g monic (g = gcd).
  static RatPoly ext_gcd(const RatPoly& a, const RatPoly& b, RatPoly& s, RatPoly& t);

  // Writes this = P / D with P in kappa[x, y] and D in kappa[y]; D is monic.
  BivarPoly clear_denominators(Var main, UniPoly& den) const;

 private:
  void trim();
  std::vector<UniRat> coeffs_;
};

}  // namespace injres
