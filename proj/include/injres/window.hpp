#pragma once

#include <vector>

#include "injres/linalg.hpp"
#include "injres/resolution.hpp"

namespace injres {

// Finite windows of the resolution where every component is a sum of monomial Omegas:
// Omega^n_0(Z^a W^b), Omega^n_Z(Z^a W^b), Omega^n_W(Z^a W^b) and Omega^n(Z^a W^b) on the two E(Z,W).
enum class Slot { Zero = 0, Z = 1, W = 2, Max0 = 3, Max1 = 4 };

struct MonomialKey {
  Slot slot = Slot::Zero;
  int n = 0;
  int a = 0;  // Z exponent
  int b = 0;  // W exponent
};

long encode(const MonomialKey& k);
MonomialKey decode(long key);

Slot slot_of(const PrimeIndex& i);
PrimeIndex index_of(Slot s);

// Throws NotApplicable for E(f) components or non-monomial coefficients.
SparseVec monomial_coords(const ChainElement& e);
SparseVec monomial_coords(const EZWElement& e, Slot slot = Slot::Max0);
ChainElement chain_from_coords(int degree, const SparseVec& v);
HullElement monomial_hull(const MonomialKey& k, const FieldElement& c = FieldElement(1));

// Monomial socle elements of the degree-th term with exponents in [-T, T], cut to the socle
// (axis exponent <= 0 on E(Z), E(W); both <= 0 on E(Z,W)).
std::vector<ChainElement> socle_box(int degree, int T);
// Valid Omega^n(Z^s W^t) with n <= n_max and s, t in [lo, hi].
std::vector<EZWElement> ezw_box(int n_max, int lo, int hi);

struct TruncatedCohomology {
  std::vector<SparseVec> kernel;   // kernel of the outgoing map inside the window, in coordinates
  std::vector<SparseVec> classes;  // kernel vectors independent modulo the incoming image
  long dimension() const { return static_cast<long>(classes.size()); }
  long boundary_dimension() const { return static_cast<long>(kernel.size() - classes.size()); }
};

// Cohomology at C in C_prev -> C -> C_next restricted to a window of C: the basis of the window
// in coordinates, the images of those basis vectors, and the images of a (larger) window of C_prev.
TruncatedCohomology truncated_cohomology(const std::vector<SparseVec>& window, const std::vector<SparseVec>& outgoing,
                                         const std::vector<SparseVec>& incoming);

// The monomial socle complex with delta, cohomology at `degree` for the window T against images of T + 1.
TruncatedCohomology socle_cohomology(int degree, int T);
// Whether e, a socle cochain of the monomial window, is delta of something in the window of size T.
bool is_socle_coboundary(const ChainElement& e, int T);

}  // namespace injres
