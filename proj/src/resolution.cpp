#include "injres/resolution.hpp"

#include <set>

#include "injres/errors.hpp"
#include "injres/ratpoly.hpp"
#include "injres/ring_ops.hpp"

namespace injres {

namespace {

const PrimeIndex kZ = PrimeIndex::axis(Var::Z);
const PrimeIndex kW = PrimeIndex::axis(Var::W);

EZWElement as_ezw(const HullElement& e) { return e.as<EZWElement>(); }

// c(other) v^m as a rational function, other = the variable that is not v
RationalFunction axis_term(Var v, int m, const UniRat& c) {
  const Var o = v == Var::Z ? Var::W : Var::Z;
  BivarPoly num = BivarPoly::from_uni(c.num(), o), den = BivarPoly::from_uni(c.den(), o);
  const int up = std::max(m, 0), down = std::max(-m, 0);
  num = v == Var::Z ? num.shift(up, 0) : num.shift(0, up);
  den = v == Var::Z ? den.shift(down, 0) : den.shift(0, down);
  return RationalFunction::from_polys(num, den);
}

// The part of g / (h f^s) with only f in the denominator, up to kappa(Z) coefficients, as P / (D(Z) f^s).
RationalFunction principal_part(const H1Class& c) {
  const BivarPoly fs = c.f.pow(c.s);
  const RatPoly G = RatPoly::from_bivar(c.g, Var::W), H = RatPoly::from_bivar(c.h, Var::W),
                F = RatPoly::from_bivar(fs, Var::W);
  RatPoly a, b, q, r;
  const RatPoly one = RatPoly::ext_gcd(H, F, a, b);
  if (one.degree() != 0) throw InvariantViolation(c.h.str() + " and " + c.f.str() + " share a factor over kappa(Z)");
  RatPoly::divmod(G * a, F, q, r);
  UniPoly d;
  const BivarPoly num = r.clear_denominators(Var::W, d);
  const BivarPoly dz = BivarPoly::from_uni(d, Var::Z);
  const int k = dz.monomial_valuation(Var::Z);
  std::vector<FactoredDenominator::Factor> fs_list = {{c.f, c.s}};
  if (k > 0) fs_list.emplace_back(BivarPoly::Z(), k);
  return {num, FactoredDenominator(dz.unshift(k, 0), std::move(fs_list))};
}

}  // namespace

std::string PrimeIndex::str() const {
  if (prime.kind == Prime::Kind::Maximal) return "(Z,W)#" + std::to_string(copy);
  return "(" + prime.str() + ")";
}

// ---- ChainElement

ChainElement::ChainElement(int degree) : degree_(degree) {
  if (degree < 0) throw DegreeMismatch("negative degree");
}

bool ChainElement::legal(int degree, const PrimeIndex& i) {
  const bool maximal = i.prime.kind == Prime::Kind::Maximal;
  if (maximal && (i.copy < 0 || i.copy > 1)) return false;
  if (!maximal && i.copy != 0) return false;
  switch (degree) {
    case 0:
      return i.prime.kind == Prime::Kind::Zero;
    case 1:
      return !maximal;
    case 2:
      return i.is_height_one() || (maximal && i.copy == 0);
    default:
      return maximal;
  }
}

HullElement ChainElement::at(const PrimeIndex& i) const {
  auto it = components_.find(i);
  return it == components_.end() ? HullElement::zero_at(i.prime) : it->second;
}

void ChainElement::add(const PrimeIndex& i, const HullElement& e) {
  if (!legal(degree_, i)) throw DegreeMismatch(i.str() + " is not a summand in degree " + std::to_string(degree_));
  if (!(e.prime() == i.prime)) throw InvariantViolation("element of E(" + e.prime().str() + ") placed at " + i.str());
  if (e.is_zero()) return;
  auto [it, fresh] = components_.emplace(i, e);
  if (!fresh) {
    it->second += e;
    if (it->second.is_zero()) components_.erase(it);
  }
}

ChainElement ChainElement::scale(const FieldElement& c) const {
  ChainElement out(degree_);
  for (const auto& [i, e] : components_) out.add(i, e.scale(c));
  return out;
}

ChainElement& ChainElement::operator+=(const ChainElement& o) {
  if (o.degree_ != degree_) throw DegreeMismatch("adding chains of degrees " + std::to_string(degree_) + " and " + std::to_string(o.degree_));
  for (const auto& [i, e] : o.components_) add(i, e);
  return *this;
}

std::string ChainElement::str() const {
  if (components_.empty()) return "0";
  std::string out;
  for (const auto& [i, e] : components_) {
    if (!out.empty()) out += " ; ";
    out += i.str() + ": " + e.str();
  }
  return out;
}

// ---- maps

ChainElement d0(const E0Element& e) {
  ChainElement out(1);
  for (const auto& [n, phi] : e.parts()) {
    std::set<Prime> support = {Prime::axis(Var::Z), Prime::axis(Var::W)};
    for (const auto& [f, m] : phi.den().factors()) support.insert(Prime::principal(f));
    for (const Prime& q : support) out.add({q, 0}, omega(q, n, phi));
  }
  return out;
}

EZWElement d1_f(const HullElement& e) {
  EZWElement out;
  const Prime q = e.prime();
  switch (q.kind) {
    case Prime::Kind::Z:
    case Prime::Kind::W: {
      // d1_W Omega^n_W(Z^s W^t) = Omega^n(Z^s W^t), d1_Z Omega^n_Z(Z^s W^t) = -Omega^n(Z^s W^t),
      // extended through the expansion of each coefficient; higher terms are killed.
      const EAxisElement& x = e.as<EAxisElement>();
      const bool along_z = q.kind == Prime::Kind::Z;
      for (const auto& [n, part] : x.parts())
        for (const auto& [m, c] : part)
          for (const auto& [t, a] : c.laurent(std::min(n, n - m))) {
            if (along_z)
              out.add(n, m, t, -a);
            else
              out.add(n, t, m, a);
          }
      return out;
    }
    case Prime::Kind::Irr: {
      const EfElement& x = e.as<EfElement>();
      for (const auto& [n, c] : x.parts()) {
        H4Canonical h4;
        for (int i = 0; i <= n; ++i)
          h4 += h4_reduce(LocalFraction(c.g), {c.h.shift(n + 1 - i, i + 1), 1}, {c.f, c.s}, i + 1, n + 1 - i);
        out += h4_to_ezw(h4);
      }
      return out;
    }
    default:
      break;
  }
  throw BadLocus("d1 is defined on E(Z), E(W), E(f), not E(" + q.str() + ")");
}

EZWElement d1(const ChainElement& e) {
  EZWElement out;
  for (const auto& [i, x] : e.components())
    if (i.is_height_one()) out += d1_f(x);
  return out;
}

QuadPoly f_triangle(const Prime& q) {
  switch (q.kind) {
    case Prime::Kind::Z:
      return QuadPoly::Y();
    case Prime::Kind::W:
      return QuadPoly::X();
    case Prime::Kind::Zero:
    case Prime::Kind::Irr:
      return QuadPoly::X() * QuadPoly::W();
    case Prime::Kind::Maximal:
      break;
  }
  throw BadLocus("no f-triangle at (Z,W)");
}

ChainElement pi0(const E0Element& e) {
  ChainElement out(2);
  for (const auto& [n, phi] : e.parts()) {
    for (const auto& [f, m] : phi.den().factors()) {
      const PrimeIndex i = PrimeIndex::principal(f);
      if (i.prime.kind == Prime::Kind::Irr) out.add(i, omega(i.prime, n, phi));
    }
    out.add(kZ, omega(kZ.prime, n, phi.times_monomial(-1, 0)));
    out.add(kW, omega(kW.prime, n, phi.times_monomial(0, -1)));
  }
  return out;
}

std::pair<EZWElement, EZWElement> pi11_pi12(const ChainElement& e) {
  EZWElement p11, p12;
  for (const auto& [i, x] : e.components()) {
    switch (i.prime.kind) {
      case Prime::Kind::Irr:
        p11 += d1_f(x.shifted(0, 0, -1));
        p12 += d1_f(x.shifted(0, -1, 0));
        break;
      case Prime::Kind::Z:
        p11 += d1_f(x.shifted(0, 1, -1));
        p12 += d1_f(x);
        break;
      case Prime::Kind::W:
        p11 += d1_f(x);
        p12 += d1_f(x.shifted(0, -1, 1));
        break;
      default:
        break;
    }
  }
  return {p11, p12};
}

ChainElement delta(int n, const ChainElement& e) {
  if (e.degree() != n) throw DegreeMismatch("delta^" + std::to_string(n) + " applied to degree " + std::to_string(e.degree()));
  ChainElement out(n + 1);
  const PrimeIndex zero = PrimeIndex::zero(), m0 = PrimeIndex::maximal(0), m1 = PrimeIndex::maximal(1);
  const QuadPoly X = QuadPoly::X(), Y = QuadPoly::Y(), Z = QuadPoly::Z(), W = QuadPoly::W();
  if (n == 0) {
    const HullElement psi = e.at(zero);
    out.add(zero, act(X * W, psi));
    out += d0(psi.as<E0Element>());
  } else if (n == 1) {
    out += pi0(e.at(zero).as<E0Element>());
    for (const auto& [i, x] : e.components())
      if (i.is_height_one()) out.add(i, -act(f_triangle(i.prime), x));
    out.add(m0, d1(e));
  } else if (n == 2) {
    const EZWElement psi = as_ezw(e.at(m0));
    const auto [p11, p12] = pi11_pi12(e);
    out.add(m0, act(X, psi) + p11);
    out.add(m1, act(Y, psi) + p12);
  } else {
    const EZWElement a = as_ezw(e.at(m0)), b = as_ezw(e.at(m1));
    if (n % 2 == 1) {
      out.add(m0, act(W, a) - act(Z, b));
      out.add(m1, act(X, b) - act(Y, a));
    } else {
      out.add(m0, act(X, a) + act(Z, b));
      out.add(m1, act(Y, a) + act(W, b));
    }
  }
  return out;
}

ChainElement act(const QuadPoly& r, const ChainElement& e) {
  ChainElement out(e.degree());
  for (const auto& [i, x] : e.components()) out.add(i, act(r, x));
  return out;
}

E0Element iota0(const LocalFraction& g) {
  if (g.is_zero()) return {};
  return E0Element::omega(0, RationalFunction(g.num().shift(1, 1), FactoredDenominator(g.den(), {})));
}

HullElement surjectivity_witness(const BivarPoly& f, int s, int t) {
  if (s > 0 || t > 0) throw BadIdeal("surjectivity witnesses are for s, t <= 0");
  const Prime q = Prime::principal(f);
  HullElement w;
  switch (q.kind) {
    case Prime::Kind::W:
      w = omega(q, 0, RationalFunction::monomial(1, s, t));
      break;
    case Prime::Kind::Z:
      w = omega(q, 0, RationalFunction::monomial(-1, s, t));
      break;
    case Prime::Kind::Irr: {
      // [g / W^(1-t), f^l] = [1 / W^(1-t), Z^(1-s)], so Omega^0_f(-g Z W^t / f^l) maps to Omega^0(Z^s W^t)
      const RewriteResult rw = lemma_onto_rewrite(q.f, 1 - s, 1 - t);
      w = EfElement::omega(q.f, 0, -rw.g.num().shift(1, 0), rw.g.den().shift(0, -t), rw.ell);
      break;
    }
    default:
      throw BadLocus("no surjectivity witness at " + q.str());
  }
  if (!(d1_f(w) == EZWElement::omega(0, s, t)))
    throw InvariantViolation("witness at " + q.str() + " misses Omega^0(Z^" + std::to_string(s) + " W^" + std::to_string(t) + ")");
  return w;
}

std::optional<E0Element> socle_preimage(const ChainElement& e) {
  ChainElement rest(1);
  for (const auto& [i, x] : e.components()) {
    if (!i.is_height_one()) continue;
    if (top_degree(x) > 0) return std::nullopt;
    rest.add(i, x);
  }
  const ChainElement target = rest;
  E0Element psi;
  auto take = [&](const RationalFunction& phi) {
    const E0Element piece = E0Element::omega(0, phi);
    psi += piece;
    rest -= d0(piece);
  };
  // principal parts at each generic prime
  for (const auto& [i, x] : target.components())
    if (i.prime.kind == Prime::Kind::Irr)
      for (const auto& [n, c] : x.as<EfElement>().parts()) take(principal_part(c));
  // then the W-expansion, then the Z-expansion, which the kernel condition keeps off E(W)
  for (Var v : {Var::W, Var::Z}) {
    RationalFunction phi;
    const HullElement part = rest.at(PrimeIndex::axis(v));
    for (const auto& [n, terms] : part.as<EAxisElement>().parts())
      for (const auto& [m, c] : terms) phi += axis_term(v, m, c);
    if (!phi.is_zero()) take(phi);
  }
  if (!rest.is_zero()) return std::nullopt;
  return psi;
}

bool d0_preimage_obstructed(const EAxisElement& e) {
  if (e.axis() != Var::Z || e.parts().size() != 1) return false;
  const auto& [n, terms] = *e.parts().begin();
  for (const auto& [m, c] : terms)
    if (c.order() <= n) return true;
  return false;
}

}  // namespace injres
