#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "injres/resolution.hpp"

namespace injres {

inline constexpr int kDefaultTruncation = 8;

struct DegreeReport {
  bool finite = true;
  // Exact when finite; otherwise the number of basis elements inside the truncation window.
  long dimension = 0;
  std::vector<std::string> basis;
  // Module generators, when the degree was reduced modulo a variable acting on it.
  std::vector<std::string> generators;
  int truncation = 0;
  // "formula", "computed" or "structural"
  std::string provenance;
};

struct CohomologyReport {
  std::string functor;
  std::map<int, DegreeReport> degrees;
  std::vector<std::pair<std::string, bool>> checks;

  bool ok() const;
  // Zero report entry when the degree was not listed.
  DegreeReport at(int degree) const;
};

// A generator of I0 factored locally: unit times irreducibles through the origin. Throws
// UnfactoredDenominator when the non-monomial part is neither a unit nor a verified irreducible.
FactoredDenominator factor_generator(const BivarPoly& p);

// H^i_I(A/p) for I = (I0, X, Y); an empty list is the zero ideal.
CohomologyReport local_cohomology(const std::vector<FactoredDenominator>& generators, int truncation = kDefaultTruncation);

// Ext^2(A/m^n, A/p) as the part of E(Z,W) killed by X, Y and every monomial of degree n.
CohomologyReport ext_power_of_max(int n);

// Ext^i(A/p, A/p) from the monomial socle complex.
CohomologyReport ext_self(int i, int truncation = 3);

struct NormalHom {
  BivarPoly image_of_x;
  BivarPoly image_of_y;
  bool relation_holds = false;    // W * image_of_x = Z * image_of_y
  bool class_is_cocycle = false;  // pi0 kills Omega^0_0(g Z^2 W^2)
};
NormalHom normal_iso(const BivarPoly& g);

// The generator indices 0, 1, 2, 4, 6, ...
bool is_generator_index(int i);

struct YonedaClass {
  int index = 0;
  ChainElement representative;
};
// Throws UnsupportedIndex outside the generator set.
YonedaClass yoneda_class(int i);

// Component of the chain map over iota_j on a cochain of degree k, landing in degree k + j.
ChainElement yoneda_lift(int j, const ChainElement& x);

// e_i x e_j = sign * e_index, with the cochain that was computed.
struct YonedaProduct {
  int sign = 0;
  int index = 0;
  ChainElement cochain;
  std::string provenance;
};
YonedaProduct yoneda_product(int i, int j);

struct PresentationCheck {
  std::vector<std::pair<std::string, bool>> checks;
  bool ok() const;
};
PresentationCheck yoneda_presentation_check(int max_power = 4);

// Copies of E(q) in degree i of the resolution.
int bass_number(const Prime& q, int i);

}  // namespace injres
