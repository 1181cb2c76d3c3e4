#pragma once

#include <array>
#include <map>
#include <string>
#include <variant>

#include "injres/gfrac.hpp"
#include "injres/rational.hpp"

namespace injres {

// A prime of A containing (X, Y): (q, X, Y) for q = 0, (Z), (W), (f) or (Z, W).
struct Prime {
  enum class Kind { Zero, Z, W, Irr, Maximal };
  Kind kind = Kind::Zero;
  BivarPoly f;  // normalized generator, Irr only

  static Prime zero() { return {}; }
  static Prime maximal() { return {Kind::Maximal, {}}; }
  static Prime axis(Var v) { return {v == Var::Z ? Kind::Z : Kind::W, {}}; }
  // (f) for an irreducible f through the origin; Z and W (up to units) map to the axis primes.
  static Prime principal(const BivarPoly& f);

  BivarPoly generator() const;  // 0, Z, W, f; undefined for Maximal
  std::string str() const;
  friend bool operator==(const Prime& a, const Prime& b) { return a.kind == b.kind && a.f == b.f; }
  friend bool operator<(const Prime& a, const Prime& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.f < b.f;
  }
};

// sum_n Omega^n_0(phi_n)
class E0Element {
 public:
  static E0Element omega(int n, const RationalFunction& phi);

  const std::map<int, RationalFunction>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  void add(int n, const RationalFunction& phi);

  // Omega^n(phi) -> Omega^(n-dn)(phi Z^a W^b)
  E0Element shifted(int dn, int a, int b) const;
  E0Element scale(const FieldElement& c) const;
  E0Element operator-() const { return scale(FieldElement(-1)); }
  E0Element& operator+=(const E0Element& o);
  friend E0Element operator+(E0Element a, const E0Element& b) { return a += b; }
  friend E0Element operator-(E0Element a, const E0Element& b) { return a += -b; }
  friend bool operator==(const E0Element& a, const E0Element& b);

  std::string str() const;

 private:
  std::map<int, RationalFunction> parts_;
};

// sum_n Omega^n_v(sum_m c_m v^m) for v = Z or W, c_m rational in the other variable.
// Terms with m > n vanish and are never stored.
class EAxisElement {
 public:
  using Expansion = std::map<int, UniRat>;

  explicit EAxisElement(Var axis = Var::Z) : axis_(axis) {}
  static EAxisElement omega(Var axis, int n, const RationalFunction& phi);
  static EAxisElement monomial(Var axis, int n, int m, const UniRat& c);

  Var axis() const { return axis_; }
  const std::map<int, Expansion>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  void add(int n, int m, const UniRat& c);

  // Omega^n(phi) -> Omega^(n-dn)(phi Z^a W^b)
  EAxisElement shifted(int dn, int a, int b) const;
  EAxisElement scale(const FieldElement& c) const;
  EAxisElement operator-() const { return scale(FieldElement(-1)); }
  EAxisElement& operator+=(const EAxisElement& o);
  friend EAxisElement operator+(EAxisElement a, const EAxisElement& b) { return a += b; }
  friend EAxisElement operator-(EAxisElement a, const EAxisElement& b) { return a += -b; }
  friend bool operator==(const EAxisElement& a, const EAxisElement& b);

  std::string str() const;

 private:
  Var axis_;
  std::map<int, Expansion> parts_;
};

using EZElement = EAxisElement;
using EWElement = EAxisElement;

// Coordinates in H^3 of (X, Y, v) with the other variable inverted: key (v-exponent, X-exponent, Y-exponent).
using H3Coordinates = std::map<std::array<int, 3>, UniRat>;
H3Coordinates to_h3(const EAxisElement& e);
// The same coordinates computed from the defining sum, without the stored expansion.
H3Coordinates omega_axis_h3(Var axis, int n, const RationalFunction& phi);

// sum_n Omega^n_f(g_n / (h_n f^s_n))
class EfElement {
 public:
  explicit EfElement(BivarPoly f = BivarPoly::Z() + BivarPoly::W());
  static EfElement omega(const BivarPoly& f, int n, const RationalFunction& phi);
  static EfElement omega(const BivarPoly& f, int n, const BivarPoly& g, const BivarPoly& h, int s);

  const BivarPoly& f() const { return f_; }
  const std::map<int, H1Class>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  void add(int n, const H1Class& c);

  EfElement shifted(int dn, int a, int b) const;
  EfElement scale(const FieldElement& c) const;
  EfElement operator-() const { return scale(FieldElement(-1)); }
  EfElement& operator+=(const EfElement& o);
  friend EfElement operator+(EfElement a, const EfElement& b) { return a += b; }
  friend EfElement operator-(EfElement a, const EfElement& b) { return a += -b; }
  friend bool operator==(const EfElement& a, const EfElement& b);

  std::string str() const;

 private:
  BivarPoly f_;
  std::map<int, H1Class> parts_;
};

// sum a_nst Omega^n(Z^s W^t) over n >= max(0, s, t, s + t).
class EZWElement {
 public:
  using Key = std::array<int, 3>;  // n, s, t

  static bool valid(int n, int s, int t);
  static EZWElement omega(int n, int s, int t, const FieldElement& c = FieldElement(1));
  // Omega^n_{Z,W} of a canonical H^2 element
  static EZWElement omega(int n, const H2Canonical& c);

  const CoeffMap<Key>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.is_zero(); }
  FieldElement at(int n, int s, int t) const { return coeffs_.at({n, s, t}); }
  // Invalid indices are dropped.
  void add(int n, int s, int t, const FieldElement& c);

  EZWElement shifted(int dn, int a, int b) const;
  EZWElement scale(const FieldElement& c) const;
  EZWElement operator-() const { return scale(FieldElement(-1)); }
  EZWElement& operator+=(const EZWElement& o);
  friend EZWElement operator+(EZWElement a, const EZWElement& b) { return a += b; }
  friend EZWElement operator-(EZWElement a, const EZWElement& b) { return a += -b; }
  friend bool operator==(const EZWElement& a, const EZWElement& b) { return a.coeffs_ == b.coeffs_; }

  std::string str() const;

 private:
  CoeffMap<Key> coeffs_;
};

class HullElement {
 public:
  using Payload = std::variant<E0Element, EAxisElement, EfElement, EZWElement>;

  HullElement() = default;
  HullElement(E0Element e) : payload_(std::move(e)) {}     // NOLINT
  HullElement(EAxisElement e) : payload_(std::move(e)) {}  // NOLINT
  HullElement(EfElement e) : payload_(std::move(e)) {}     // NOLINT
  HullElement(EZWElement e) : payload_(std::move(e)) {}    // NOLINT
  static HullElement zero_at(const Prime& q);

  Prime prime() const;
  const Payload& payload() const { return payload_; }
  template <class T>
  const T& as() const {
    return std::get<T>(payload_);
  }
  bool is_zero() const;

  HullElement shifted(int dn, int a, int b) const;
  HullElement scale(const FieldElement& c) const;
  HullElement operator-() const { return scale(FieldElement(-1)); }
  // Both operands must live in the same hull.
  HullElement& operator+=(const HullElement& o);
  friend HullElement operator+(HullElement a, const HullElement& b) { return a += b; }
  friend HullElement operator-(HullElement a, const HullElement& b) { return a += -b; }
  friend bool operator==(const HullElement& a, const HullElement& b);

  std::string str() const;

 private:
  Payload payload_;
};

// Omega^n_q(phi) for a principal or zero prime.
HullElement omega(const Prime& q, int n, const RationalFunction& phi);

// The A-action. X: Omega^n(phi) -> Omega^(n-1)(phi / W), Y: -> Omega^(n-1)(phi / Z).
HullElement act(const QuadPoly& r, const HullElement& e);
EZWElement act(const QuadPoly& r, const EZWElement& e);
// Multiplication by a unit-denominator fraction, via a representative truncated where it no longer acts.
EZWElement act_local(const LocalFraction& r, const EZWElement& e);

// Omega^n(Z^s W^t) -> Omega^(n-i-j)(Z^(s+k-j) W^(t+l-i)): multiplication by X^i Y^j Z^k W^l, where a
// negative exponent is the Laurent division by that variable.
EZWElement laurent_op(int i, int j, int k, int l, const EZWElement& e);

HullElement graded_part(const HullElement& e, int n);
HullElement socle_project(const HullElement& e);
bool is_socle(const HullElement& e);
// Largest n with a nonzero part; -1 for zero.
int top_degree(const HullElement& e);

H4Canonical ezw_to_h4(const EZWElement& e);
EZWElement h4_to_ezw(const H4Canonical& c);

}  // namespace injres
