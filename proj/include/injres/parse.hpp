#pragma once

#include <string>
#include <utility>
#include <vector>

#include "injres/bivar.hpp"

namespace injres {

// Grammar: sums of products of rational constants, X Y Z W, parenthesized groups, and ^int powers.
QuadPoly parse_quad(const std::string& text);
// As parse_quad, but rejects X and Y.
BivarPoly parse_bivar(const std::string& text);

// "[ num / d1^e1, d2^e2, ... ]" where num is a polynomial or "(p)/(q)" and each
// denominator is a polynomial, optionally "(p)^e".
struct FractionText {
  QuadPoly num;
  QuadPoly num_den;  // 1 unless the numerator was (p)/(q)
  std::vector<std::pair<QuadPoly, int>> denominators;
};
FractionText parse_fraction(const std::string& text);

}  // namespace injres
