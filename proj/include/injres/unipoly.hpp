#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "injres/field.hpp"

namespace injres {

// Dense univariate polynomial, coefficients stored low degree first, no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(FieldElement c);  // NOLINT(google-explicit-constructor)
  explicit UniPoly(std::vector<FieldElement> coeffs);
  static UniPoly monomial(FieldElement c, int deg);
  static UniPoly x() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  // Order of vanishing at 0; -1 for the zero polynomial.
  int order() const;
  FieldElement coeff(int k) const;
  FieldElement lead() const { return coeffs_.empty() ? FieldElement(0) : coeffs_.back(); }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  bool is_constant() const { return coeffs_.size() <= 1; }

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const FieldElement& c) { return a.scale(c); }
  friend bool operator==(const UniPoly& a, const UniPoly& b);

  UniPoly scale(const FieldElement& c) const;
  UniPoly shift(int k) const;  // multiply by x^k, k >= 0
  // Drop the lowest k coefficients' worth of x: requires x^k | this.
  UniPoly unshift(int k) const;
  UniPoly truncate(int len) const;  // keep degrees < len
  UniPoly pow(int e) const;
  UniPoly monic() const;
  UniPoly derivative() const;
  FieldElement eval(const FieldElement& at) const;

  // Euclidean division; divisor must be nonzero.
  static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
  // Exact quotient or nullopt.
  static std::optional<UniPoly> divide_exact(const UniPoly& a, const UniPoly& b);
  // Monic gcd (zero when both are zero).
  static UniPoly gcd(const UniPoly& a, const UniPoly& b);

  std::string str(char var) const;

 private:
  void trim();
  std::vector<FieldElement> coeffs_;
};

// Univariate rational function num/den in lowest terms with monic den.
class UniRat {
 public:
  UniRat() : den_(FieldElement(1)) {}
  UniRat(FieldElement c) : num_(c), den_(FieldElement(1)) {}  // NOLINT
  UniRat(UniPoly num) : num_(std::move(num)), den_(FieldElement(1)) {}  // NOLINT
  UniRat(UniPoly num, UniPoly den);
  static UniRat monomial(FieldElement c, int deg);  // c*x^deg, deg may be negative

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  // x-adic valuation; only meaningful for nonzero values.
  int order() const { return num_.order() - den_.order(); }
  // Returns (c, k) when the value is c*x^k.
  std::optional<std::pair<FieldElement, int>> as_monomial() const;
  // Laurent expansion coefficients for exponents order() .. up_to (inclusive).
  std::map<int, FieldElement> laurent(int up_to) const;
  // Multiply by x^k for any integer k.
  UniRat shift(int k) const;

  UniRat operator-() const { return UniRat(-num_, den_, true); }
  friend UniRat operator+(const UniRat& a, const UniRat& b);
  friend UniRat operator-(const UniRat& a, const UniRat& b) { return a + (-b); }
  friend UniRat operator*(const UniRat& a, const UniRat& b);
  friend UniRat operator/(const UniRat& a, const UniRat& b);
  UniRat& operator+=(const UniRat& o) { return *this = *this + o; }
  UniRat& operator-=(const UniRat& o) { return *this = *this - o; }
  UniRat& operator*=(const UniRat& o) { return *this = *this * o; }
  friend bool operator==(const UniRat& a, const UniRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str(char var) const;

 private:
  UniRat(UniPoly num, UniPoly den, bool) : num_(std::move(num)), den_(std::move(den)) {}
  UniPoly num_;
  UniPoly den_;
};

}  // namespace injres
