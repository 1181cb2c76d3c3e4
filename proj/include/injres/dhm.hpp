#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "injres/hulls.hpp"
#include "injres/linalg.hpp"

namespace injres {

// The 15-dimensional module M over A = k[[X,Y,Z,W]]/(XW - YZ) with basis u1..u5, v1..v4, w1..w6
// stored in that order (u_i at i-1, v_i at 4+i, w_i at 8+i).
struct DHMModule {
  static constexpr int kRank = 15;
  enum class Var4 { X = 0, Y = 1, Z = 2, W = 3 };

  std::array<std::string, kRank> labels;
  // images[v][b]: variable v applied to basis vector b
  std::array<std::array<SparseVec, kRank>, 4> images;
  std::vector<std::pair<std::string, bool>> checks;

  static constexpr int u(int i) { return i - 1; }
  static constexpr int v(int i) { return 4 + i; }
  static constexpr int w(int i) { return 8 + i; }

  SparseVec act(Var4 x, const SparseVec& m) const;
  // A monomial X^a Y^b Z^c W^d applied by repeated action.
  SparseVec act(const std::array<int, 4>& exponents, const SparseVec& m) const;
  static SparseVec basis(int b) { return {{b, FieldElement(1)}}; }
};

// Transcribed once; throws InvariantViolation when a structure check fails.
const DHMModule& dhm_module();

// A homomorphism M -> E(q) recorded by its values at w1..w6.
struct DHMHom {
  std::string name;
  Prime target;
  std::array<HullElement, 6> values;
};

// Phi(b) for any basis vector b, reached from a w along a path of variables.
HullElement dhm_value(const DHMHom& phi, int b);
// Phi(x b) = x Phi(b) for every basis vector and variable.
std::vector<std::pair<std::string, bool>> dhm_conditions(const DHMHom& phi);
// The displayed list of linear conditions on Phi(w1), ..., Phi(w6), redundant rows included.
std::vector<std::pair<std::string, bool>> dhm_displayed_conditions(const DHMHom& phi);

// Phi_1 .. Phi_6, Phi_13, Phi_24, Phi_35, Phi_46, Phi_14, Phi_25, Phi_36, Phi_135, Phi_246 built by Laurent division.
std::vector<DHMHom> dhm_dual_basis();
// Coordinates of a homomorphism into E(Z,W): value index j in the high bits, monomial key below.
SparseVec dhm_coords(const DHMHom& phi);

// Solves the homomorphism conditions on truncated hull coordinates. Returns the named basis for the
// maximal ideal once the solved space is certified to equal its span, and an empty list for
// principal primes. Throws TruncationTooSmall when two successive truncations disagree.
std::vector<DHMHom> dhm_hom_space(const Prime& q, int truncation = 3);
// Dimension of the solved space, for reporting.
long dhm_hom_dimension(const Prime& q, int truncation = 3);

struct DHMGenerators {
  int count = 0;
  std::vector<std::string> complement;
  std::vector<std::pair<std::string, bool>> checks;
};
DHMGenerators dhm_generator_report();
int dhm_min_generators();

// dim Ext^i(M, A/p); throws UnsupportedIndex for i < 0 or i > 64.
int dhm_ext(int i);

struct DHMExtReport {
  int degree = 0;
  int dimension = 0;
  std::vector<std::string> classes;  // representatives in (i, j) pair notation
};
DHMExtReport dhm_ext_report(int i);

}  // namespace injres
