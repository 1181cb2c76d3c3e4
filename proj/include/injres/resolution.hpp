#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "injres/hulls.hpp"

namespace injres {

// A summand of a term of the resolution; copy distinguishes the two E(Z,W) from degree 3 on.
struct PrimeIndex {
  Prime prime;
  int copy = 0;

  static PrimeIndex zero() { return {Prime::zero(), 0}; }
  static PrimeIndex axis(Var v) { return {Prime::axis(v), 0}; }
  static PrimeIndex principal(const BivarPoly& f) { return {Prime::principal(f), 0}; }
  static PrimeIndex maximal(int copy = 0) { return {Prime::maximal(), copy}; }

  bool is_height_one() const { return prime.kind == Prime::Kind::Z || prime.kind == Prime::Kind::W || prime.kind == Prime::Kind::Irr; }
  std::string str() const;
  friend bool operator==(const PrimeIndex& a, const PrimeIndex& b) { return a.prime == b.prime && a.copy == b.copy; }
  friend bool operator<(const PrimeIndex& a, const PrimeIndex& b) {
    if (!(a.prime == b.prime)) return a.prime < b.prime;
    return a.copy < b.copy;
  }
};

// Degree 0: E(0). Degree 1: E(0) + sum over height one primes. Degree 2: height one primes + E(Z,W).
// Degree >= 3: E(Z,W)^2.
class ChainElement {
 public:
  using Components = std::map<PrimeIndex, HullElement>;

  explicit ChainElement(int degree = 0);
  static bool legal(int degree, const PrimeIndex& i);

  int degree() const { return degree_; }
  const Components& components() const { return components_; }
  // The component, or zero of the right hull when absent.
  HullElement at(const PrimeIndex& i) const;
  void add(const PrimeIndex& i, const HullElement& e);
  bool is_zero() const { return components_.empty(); }

  ChainElement scale(const FieldElement& c) const;
  ChainElement operator-() const { return scale(FieldElement(-1)); }
  ChainElement& operator+=(const ChainElement& o);
  ChainElement& operator-=(const ChainElement& o) { return *this += -o; }
  friend ChainElement operator+(ChainElement a, const ChainElement& b) { return a += b; }
  friend ChainElement operator-(ChainElement a, const ChainElement& b) { return a += -b; }
  friend bool operator==(const ChainElement& a, const ChainElement& b) { return (a - b).is_zero(); }

  std::string str() const;

 private:
  int degree_;
  Components components_;
};

// Omega^n_0(phi) -> sum over primes f dividing the denominator, and Z, W, of Omega^n_f(phi).
ChainElement d0(const E0Element& e);
// For e in E(Z), E(W) or E(f).
EZWElement d1_f(const HullElement& e);
// Sum of d1_f over the height one components.
EZWElement d1(const ChainElement& e);

// X W on E(0); Y, X, X W on E(Z), E(W), E(f).
QuadPoly f_triangle(const Prime& q);

// pi0 = d0_Z(./Z) + d0_W(./W) + sum d0_f, landing in the height one slots of degree 2.
ChainElement pi0(const E0Element& e);
// The pair (pi11, pi12) on the height one components of e.
std::pair<EZWElement, EZWElement> pi11_pi12(const ChainElement& e);

ChainElement delta(int n, const ChainElement& e);

// The A-action componentwise.
ChainElement act(const QuadPoly& r, const ChainElement& e);

// The augmentation A/p = kappa[Z,W]_(Z,W) -> E(0): g -> Omega^0_0(Z W g).
E0Element iota0(const LocalFraction& g);

// An element of E_0(f) with d1_f image Omega^0(Z^s W^t), s, t <= 0; checked before returning.
HullElement surjectivity_witness(const BivarPoly& f, int s, int t);

// For a socle element of the height one slots killed by d1, psi in E_0(0) with d0 psi = e.
// Built from partial fractions; nullopt when the input is not in the image.
std::optional<E0Element> socle_preimage(const ChainElement& e);

// True when e, an element of E_n(Z) for one n, is certified outside d0(E_n(0)) + 0 on E(W) and E(f):
// a preimage would need every canonical coefficient to have W-order above n.
bool d0_preimage_obstructed(const EAxisElement& e);

}  // namespace injres
