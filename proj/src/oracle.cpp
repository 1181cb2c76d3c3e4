#include "injres/oracle.hpp"

#include <algorithm>

#include "injres/errors.hpp"
#include "injres/linalg.hpp"

namespace injres {

namespace {

constexpr long kStride = 1L << 20;

long key(int z, int w) { return static_cast<long>(z) * kStride + w; }

// Terms of total degree < below (all terms when below < 0).
SparseVec to_vec(const BivarPoly& p, int below = -1) {
  SparseVec v;
  p.for_each_term([&](int z, int w, const FieldElement& c) {
    if (below < 0 || z + w < below) v.emplace(key(z, w), c);
  });
  return v;
}

template <class Fn>
void for_monomials_of_degree(int d, Fn&& fn) {
  for (int z = d; z >= 0; --z) fn(z, d - z);
}

// dim of R / (I + m^n)
long colength(const std::vector<BivarPoly>& gens, int n) {
  Echelon e;
  for (int d = 0; d < n; ++d)
    for_monomials_of_degree(d, [&](int z, int w) {
      for (const auto& g : gens) e.insert(to_vec(g.shift(z, w), n));
    });
  return static_cast<long>(n) * (n + 1) / 2 - static_cast<long>(e.rank());
}

int max_total_degree(const std::vector<BivarPoly>& ps) {
  int d = 0;
  for (const auto& p : ps) d = std::max(d, p.total_degree());
  return d;
}

// [num / u1 Z^k1, u2 W^k2]
struct MonomialForm {
  BivarPoly num;
  BivarPoly u1;
  int k1 = 1;
  BivarPoly u2;
  int k2 = 1;
};

struct ClearedFraction {
  BivarPoly num, x1, x2;
};

ClearedFraction clear(const GeneralizedFraction& gf) {
  if (gf.denominators.size() != 2) throw NotSystemOfParameters("expected two denominators");
  const Denominator &d1 = gf.denominators[0], &d2 = gf.denominators[1];
  if (gf.numerator.is_zero() || d1.exponent <= 0 || d2.exponent <= 0) return {BivarPoly(), BivarPoly::Z(), BivarPoly::W()};
  // [N/D / x1, x2] = [N / D x1, x2]
  return {gf.numerator.num(), gf.numerator.den() * d1.base.pow(d1.exponent), d2.base.pow(d2.exponent)};
}

MembershipWitness witness_or_throw(const BivarPoly& target, const ClearedFraction& f, int bound) {
  auto w = membership_witness({target, {f.x1, f.x2}, bound, true});
  if (!w) throw BoundExceeded("no relation for " + target.str() + " within degree " + std::to_string(bound));
  return *w;
}

MonomialForm monomialize(const ClearedFraction& f, int bound) {
  if (f.num.is_zero()) return {BivarPoly(), BivarPoly(1), 1, BivarPoly(1), 1};
  const auto n = maximal_ideal_power_inside({f.x1, f.x2}, bound);
  if (!n) throw BoundExceeded("(" + f.x1.str() + ", " + f.x2.str() + ") not certified primary within the bound");
  const int k = std::max(*n, 1);
  // u1 Z^k = r11 x1 + r12 x2, u2 W^k = r21 x1 + r22 x2
  const MembershipWitness wz = witness_or_throw(BivarPoly::monomial(1, k, 0), f, bound);
  const MembershipWitness ww = witness_or_throw(BivarPoly::monomial(1, 0, k), f, bound);
  const BivarPoly det = wz.coefficients[0] * ww.coefficients[1] - wz.coefficients[1] * ww.coefficients[0];
  return {det * f.num, wz.unit, k, ww.unit, k};
}

}  // namespace

int default_oracle_bound(int total_degree) { return 2 * total_degree + 4; }

std::optional<MembershipWitness> membership_witness(const MembershipProblem& p) {
  const size_t ng = p.generators.size();
  if (p.target.is_zero()) return MembershipWitness{BivarPoly(1), std::vector<BivarPoly>(ng)};
  Echelon e(true);
  // the j-th inserted vector is m * generator (gen >= 0) or m * target (gen = -1)
  struct Column {
    int z, w, gen;
  };
  std::vector<Column> columns;
  const SparseVec target = to_vec(p.target);
  for (int d = 0; d <= p.bound; ++d) {
    for_monomials_of_degree(d, [&](int z, int w) {
      for (size_t i = 0; i < ng; ++i) {
        e.insert(to_vec(p.generators[i].shift(z, w)));
        columns.push_back({z, w, static_cast<int>(i)});
      }
      if (p.local && d > 0) {
        e.insert(to_vec(p.target.shift(z, w)));
        columns.push_back({z, w, -1});
      }
    });
    auto combo = e.express(target);
    if (!combo) continue;
    MembershipWitness out{BivarPoly(1), std::vector<BivarPoly>(ng)};
    for (const auto& [j, c] : *combo) {
      const Column& col = columns[static_cast<size_t>(j)];
      const BivarPoly term = BivarPoly::monomial(c, col.z, col.w);
      if (col.gen < 0)
        out.unit -= term;
      else
        out.coefficients[static_cast<size_t>(col.gen)] += term;
    }
    return out;
  }
  return std::nullopt;
}

std::optional<int> maximal_ideal_power_inside(const std::vector<BivarPoly>& generators, int bound) {
  long prev = colength(generators, 0);
  for (int n = 0; n <= bound; ++n) {
    const long next = colength(generators, n + 1);
    if (next == prev) return n;
    prev = next;
  }
  return std::nullopt;
}

Membership decide_membership(const MembershipProblem& p) {
  if (p.target.is_zero()) return Membership::Member;
  if (p.local) {
    if (auto n = maximal_ideal_power_inside(p.generators, p.bound)) {
      // target in I R_m iff target in I + m^n
      Echelon e;
      for (int d = 0; d < *n; ++d)
        for_monomials_of_degree(d, [&](int z, int w) {
          for (const auto& g : p.generators) e.insert(to_vec(g.shift(z, w), *n));
        });
      return e.contains(to_vec(p.target, *n)) ? Membership::Member : Membership::NotMember;
    }
  }
  return membership_witness(p) ? Membership::Member : Membership::Unknown;
}

bool local_membership(const MembershipProblem& p) { return decide_membership(p) == Membership::Member; }

GeneralizedFraction as_fraction(const H2Canonical& c) {
  int a = 1, b = 1;
  for (const auto& [k, v] : c.coeffs()) {
    a = std::max(a, k.first);
    b = std::max(b, k.second);
  }
  BivarPoly num;
  for (const auto& [k, v] : c.coeffs()) num += BivarPoly::monomial(v, a - k.first, b - k.second);
  return {LocalFraction(num), {{BivarPoly::Z(), a}, {BivarPoly::W(), b}}};
}

bool cech_equal(const GeneralizedFraction& a, const GeneralizedFraction& b, int bound) {
  const ClearedFraction ca = clear(a), cb = clear(b);
  if (bound <= 0)
    bound = default_oracle_bound(max_total_degree({ca.num, ca.x1, ca.x2, cb.num, cb.x1, cb.x2}));
  const MonomialForm ma = monomialize(ca, bound), mb = monomialize(cb, bound);

  // common denominators (ua1 ub1 Z^K1, ua2 ub2 W^K2)
  const int K1 = std::max(ma.k1, mb.k1), K2 = std::max(ma.k2, mb.k2);
  const BivarPoly P1 = (ma.u1 * mb.u1).shift(K1, 0), P2 = (ma.u2 * mb.u2).shift(0, K2);
  const BivarPoly na = (ma.num * mb.u1 * mb.u2).shift(K1 - ma.k1, K2 - ma.k2);
  const BivarPoly nb = (mb.num * ma.u1 * ma.u2).shift(K1 - mb.k1, K2 - mb.k2);

  // a regular sequence makes the Cech map injective at s = 0: the difference vanishes iff it lies in (P1, P2)
  const MembershipProblem prob{na - nb, {P1, P2}, std::max(bound, K1 + K2 + 1), true};
  switch (decide_membership(prob)) {
    case Membership::Member:
      return true;
    case Membership::NotMember:
      return false;
    case Membership::Unknown:
      break;
  }
  throw BoundExceeded("difference not decided within degree " + std::to_string(prob.bound));
}

}  // namespace injres
