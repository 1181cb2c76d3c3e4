#pragma once

#include <utility>
#include <vector>

#include "injres/bivar.hpp"

namespace injres {

// Where a fraction's denominator must be invertible.
struct Locus {
  enum class Kind { Origin, Principal, Generic };
  Kind kind = Kind::Origin;
  BivarPoly prime;  // only for Principal

  static Locus origin() { return {}; }
  static Locus principal(BivarPoly f) { return {Kind::Principal, std::move(f)}; }
  static Locus generic() { return {Kind::Generic, {}}; }
};

// g/h in a localization of kappa[Z,W]; the constructor checks h stays invertible at the locus.
class LocalFraction {
 public:
  LocalFraction() : den_(1) {}
  LocalFraction(BivarPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  LocalFraction(BivarPoly num, BivarPoly den, Locus locus = Locus::origin());

  const BivarPoly& num() const { return num_; }
  const BivarPoly& den() const { return den_; }
  const Locus& locus() const { return locus_; }
  bool is_zero() const { return num_.is_zero(); }

  LocalFraction operator-() const { return {-num_, den_, locus_, true}; }
  friend LocalFraction operator+(const LocalFraction& a, const LocalFraction& b);
  friend LocalFraction operator-(const LocalFraction& a, const LocalFraction& b) { return a + (-b); }
  friend LocalFraction operator*(const LocalFraction& a, const LocalFraction& b);
  friend bool operator==(const LocalFraction& a, const LocalFraction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

 private:
  LocalFraction(BivarPoly num, BivarPoly den, Locus locus, bool)
      : num_(std::move(num)), den_(std::move(den)), locus_(std::move(locus)) {}
  BivarPoly num_;
  BivarPoly den_;
  Locus locus_;
};

// unit * prod factor^mult with unit(0,0) != 0 and each factor irreducible through the origin.
class FactoredDenominator {
 public:
  using Factor = std::pair<BivarPoly, int>;

  FactoredDenominator() : unit_(1) {}
  FactoredDenominator(BivarPoly unit, std::vector<Factor> factors);
  static FactoredDenominator of_factor(const BivarPoly& f, int mult);
  static FactoredDenominator monomial(int a, int b);  // Z^a W^b

  const BivarPoly& unit() const { return unit_; }
  const std::vector<Factor>& factors() const { return factors_; }
  int multiplicity(const BivarPoly& f) const;
  BivarPoly expand() const;
  // The expanded denominator with every power of f removed.
  BivarPoly expand_without(const BivarPoly& f) const;

  friend FactoredDenominator operator*(const FactoredDenominator& a, const FactoredDenominator& b);
  // Componentwise maximum of multiplicities, units multiplied.
  static FactoredDenominator common(const FactoredDenominator& a, const FactoredDenominator& b);
  // this / o as a polynomial; o must divide this factorwise.
  BivarPoly cofactor(const FactoredDenominator& o) const;
  FactoredDenominator with_multiplicity(const BivarPoly& f, int mult) const;

 private:
  BivarPoly unit_;
  std::vector<Factor> factors_;  // sorted by factor
};

// num / den with den kept in factored form.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(BivarPoly num) : num_(std::move(num)) {}  // NOLINT
  RationalFunction(BivarPoly num, FactoredDenominator den);
  static RationalFunction monomial(FieldElement c, int a, int b);  // c Z^a W^b, any signs
  // Factors den: powers of Z and W, then the rest must be a unit or verified irreducible.
  static RationalFunction from_polys(const BivarPoly& num, const BivarPoly& den);

  const BivarPoly& num() const { return num_; }
  const FactoredDenominator& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const { return {-num_, den_}; }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction scale(const FieldElement& c) const { return {num_.scale(c), den_}; }
  RationalFunction times_monomial(int a, int b) const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  std::string str() const;

 private:
  void cancel();
  BivarPoly num_;
  FactoredDenominator den_;
};

}  // namespace injres
