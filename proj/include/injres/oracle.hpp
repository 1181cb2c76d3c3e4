#pragma once

#include <optional>
#include <vector>

#include "injres/bivar.hpp"
#include "injres/gfrac.hpp"

namespace injres {

// Independent checks by bounded linear algebra over monomial multipliers; no resultants, no series inversion.

struct MembershipProblem {
  BivarPoly target;
  std::vector<BivarPoly> generators;
  int bound = 0;
  // Allow a multiplier u with u(0,0) != 0, i.e. membership in the localization at the origin.
  bool local = true;
};

enum class Membership { Member, NotMember, Unknown };

// unit * target = sum coefficients_i * generators_i with unit(0,0) = 1.
struct MembershipWitness {
  BivarPoly unit;
  std::vector<BivarPoly> coefficients;
};

// Searches multipliers of degree <= bound.
std::optional<MembershipWitness> membership_witness(const MembershipProblem& p);

// Smallest n <= bound with (Z,W)^n inside (generators) locally, certified by the stabilization
// dim R/(I + m^n) = dim R/(I + m^(n+1)) and Nakayama.
std::optional<int> maximal_ideal_power_inside(const std::vector<BivarPoly>& generators, int bound);

// Member is always backed by a witness or by the certified quotient; NotMember only by the latter.
Membership decide_membership(const MembershipProblem& p);
bool local_membership(const MembershipProblem& p);

int default_oracle_bound(int total_degree);

// Equality of two classes in H^2 of the origin. Throws BoundExceeded when the bound is too small to decide.
bool cech_equal(const GeneralizedFraction& a, const GeneralizedFraction& b, int bound = 0);

// The canonical element as a single fraction over (Z^a, W^b).
GeneralizedFraction as_fraction(const H2Canonical& c);

}  // namespace injres
