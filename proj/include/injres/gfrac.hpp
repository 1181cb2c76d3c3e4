#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "injres/coeffmap.hpp"
#include "injres/rational.hpp"

namespace injres {

struct Denominator {
  BivarPoly base;
  int exponent = 1;
};

// [numerator / d1, d2] over kappa[Z,W] localized at the origin.
struct GeneralizedFraction {
  LocalFraction numerator;
  std::vector<Denominator> denominators;
};

// sum c_ij [1/Z^i, W^j], i, j >= 1.
using H2Canonical = CoeffMap<std::pair<int, int>>;
// sum a_ijkl [1/Z^i, W^j, X^k, Y^l], all indices >= 1.
using H4Canonical = CoeffMap<std::array<int, 4>>;

std::string to_string(const H2Canonical& c);
std::string to_string(const H4Canonical& c);

H2Canonical reduce_h2(const LocalFraction& num, const Denominator& d1, const Denominator& d2);
H2Canonical reduce_h2(const GeneralizedFraction& gf);

using TransformMatrix = std::array<std::array<LocalFraction, 2>, 2>;
// Returns [det(r) w / x'1, x'2] after checking x' = r x (with x_i = base_i^exp_i).
GeneralizedFraction apply_transformation(const GeneralizedFraction& gf, const TransformMatrix& r,
                                         const std::array<BivarPoly, 2>& target);

// The class of g / (h f^s) in H^1 at the principal prime (f).
struct H1Class {
  BivarPoly f;
  BivarPoly g;
  BivarPoly h;
  int s = 0;
};
H1Class h1_class(const BivarPoly& g, const BivarPoly& h, const BivarPoly& f, int s);
bool h1_is_zero(const H1Class& c);
bool h1_equal(const H1Class& a, const H1Class& b);
H1Class h1_add(const H1Class& a, const H1Class& b);
H1Class h1_scale(const H1Class& a, const FieldElement& c);

// g (a local fraction at the origin) and l with [g / W^t, f^l] = [1 / W^t, Z^s].
struct RewriteResult {
  LocalFraction g;
  int ell = 0;
};
RewriteResult lemma_onto_rewrite(const BivarPoly& f, int s, int t);

H4Canonical h4_reduce(const LocalFraction& num, const Denominator& d1, const Denominator& d2, int x_exp, int y_exp);

}  // namespace injres
