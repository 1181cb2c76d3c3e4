#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "injres/unipoly.hpp"

namespace injres {

enum class Var { Z, W };

// Polynomial in Z, W stored as layers by W-degree, each layer a dense polynomial in Z.
class BivarPoly {
 public:
  BivarPoly() = default;
  BivarPoly(FieldElement c);  // NOLINT(google-explicit-constructor)
  BivarPoly(long c) : BivarPoly(FieldElement(c)) {}  // NOLINT(google-explicit-constructor)
  explicit BivarPoly(std::vector<UniPoly> layers);
  static BivarPoly monomial(FieldElement c, int degZ, int degW);
  static BivarPoly Z() { return monomial(1, 1, 0); }
  static BivarPoly W() { return monomial(1, 0, 1); }
  // Embed a univariate polynomial as a polynomial in the given variable.
  static BivarPoly from_uni(const UniPoly& p, Var v);

  bool is_zero() const { return layers_.empty(); }
  bool is_constant() const { return layers_.size() <= 1 && (layers_.empty() || layers_[0].is_constant()); }
  int degW() const { return static_cast<int>(layers_.size()) - 1; }
  int degZ() const;
  int total_degree() const;
  size_t term_count() const;
  FieldElement coeff(int degZ, int degW) const;
  FieldElement const_term() const { return coeff(0, 0); }
  bool is_unit_at_origin() const { return !const_term().is_zero(); }
  const std::vector<UniPoly>& layers() const { return layers_; }
  UniPoly layer(int k) const;
  // Coefficients as polynomials in the other variable when viewed in `v`.
  std::vector<UniPoly> coefficients_in(Var v) const;
  static BivarPoly from_coefficients(const std::vector<UniPoly>& cs, Var v);
  // The single-variable content, when the polynomial involves only `v`.
  bool only_in(Var v) const;
  UniPoly as_uni(Var v) const;  // requires only_in(v)
  // Exponent of the largest power of Z (or W) dividing every term; -1 for zero.
  int monomial_valuation(Var v) const;
  // Leading coefficient in lex order W > Z.
  FieldElement lex_lead() const;

  void for_each_term(const std::function<void(int, int, const FieldElement&)>& fn) const;

  BivarPoly operator-() const;
  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend bool operator==(const BivarPoly& a, const BivarPoly& b);
  // Total order used for map keys: by W-layers then Z coefficients.
  friend bool operator<(const BivarPoly& a, const BivarPoly& b);

  BivarPoly scale(const FieldElement& c) const;
  BivarPoly pow(int e) const;
  // Multiply by Z^a W^b (a, b >= 0).
  BivarPoly shift(int a, int b) const;
  // Divide by Z^a W^b; requires divisibility.
  BivarPoly unshift(int a, int b) const;
  // Keep only terms Z^c W^d with c < boundZ and d < boundW.
  BivarPoly truncate(int boundZ, int boundW) const;
  static BivarPoly mul_truncated(const BivarPoly& a, const BivarPoly& b, int boundZ, int boundW);
  // Substitute W := 0 or Z := 0.
  UniPoly at_zero(Var v) const;
  BivarPoly swap_vars() const;
  BivarPoly partial(Var v) const;
  FieldElement eval(const FieldElement& z, const FieldElement& w) const;

  std::string str() const;

 private:
  void trim();
  std::vector<UniPoly> layers_;
};

// Polynomial in X, Y, Z, W with sparse terms keyed by exponent vectors.
class QuadPoly {
 public:
  using Exponent = std::array<int, 4>;  // X, Y, Z, W

  QuadPoly() = default;
  QuadPoly(FieldElement c);  // NOLINT(google-explicit-constructor)
  QuadPoly(long c) : QuadPoly(FieldElement(c)) {}  // NOLINT(google-explicit-constructor)
  static QuadPoly monomial(FieldElement c, int x, int y, int z, int w);
  static QuadPoly X() { return monomial(1, 1, 0, 0, 0); }
  static QuadPoly Y() { return monomial(1, 0, 1, 0, 0); }
  static QuadPoly Z() { return monomial(1, 0, 0, 1, 0); }
  static QuadPoly W() { return monomial(1, 0, 0, 0, 1); }
  static QuadPoly from_bivar(const BivarPoly& p);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, FieldElement>& terms() const { return terms_; }
  FieldElement coeff(const Exponent& e) const;
  // Drops X and Y; requires the polynomial to be free of them.
  BivarPoly to_bivar() const;
  bool free_of_xy() const;

  QuadPoly operator-() const;
  QuadPoly& operator+=(const QuadPoly& o);
  QuadPoly& operator-=(const QuadPoly& o);
  friend QuadPoly operator+(QuadPoly a, const QuadPoly& b) { return a += b; }
  friend QuadPoly operator-(QuadPoly a, const QuadPoly& b) { return a -= b; }
  friend QuadPoly operator*(const QuadPoly& a, const QuadPoly& b);
  friend bool operator==(const QuadPoly& a, const QuadPoly& b);
  QuadPoly pow(int e) const;

  std::string str() const;

 private:
  std::map<Exponent, FieldElement> terms_;
};

}  // namespace injres
