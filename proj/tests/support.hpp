#pragma once

#include <ostream>
#include <random>
#include <string>

#include "injres/bivar.hpp"
#include "injres/parse.hpp"
#include "injres/sampling.hpp"

namespace injres::testing {

inline BivarPoly P(const std::string& s) { return parse_bivar(s); }
inline QuadPoly Q4(const std::string& s) { return parse_quad(s); }

using sampling::random_poly;
using sampling::random_unit;
using sampling::small_scalar;

}  // namespace injres::testing

namespace injres {
inline void PrintTo(const BivarPoly& p, std::ostream* os) { *os << p.str(); }
inline void PrintTo(const QuadPoly& p, std::ostream* os) { *os << p.str(); }
inline void PrintTo(const FieldElement& p, std::ostream* os) { *os << p.str(); }
}  // namespace injres

#include "injres/gfrac.hpp"
namespace injres {
inline void PrintTo(const H2Canonical& c, std::ostream* os) { *os << to_string(c); }
inline void PrintTo(const H4Canonical& c, std::ostream* os) { *os << to_string(c); }
}  // namespace injres
