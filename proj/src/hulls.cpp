#include "injres/hulls.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <type_traits>

#include "injres/errors.hpp"
#include "injres/ratpoly.hpp"
#include "injres/ring_ops.hpp"

namespace injres {

namespace {

char var_char(Var v) { return v == Var::Z ? 'Z' : 'W'; }
Var other(Var v) { return v == Var::Z ? Var::W : Var::Z; }

BivarPoly monomial_part(int a, int b) { return BivarPoly::monomial(1, std::max(a, 0), std::max(b, 0)); }

template <class Map>
std::string join_terms(const Map& parts, const std::function<std::string(const typename Map::value_type&)>& fn) {
  if (parts.empty()) return "0";
  std::string out;
  for (const auto& kv : parts) {
    if (!out.empty()) out += " + ";
    out += fn(kv);
  }
  return out;
}

RatPoly truncated(const RatPoly& p, int bound) {
  std::vector<UniRat> cs(p.coeffs().begin(), p.coeffs().begin() + std::min<long>(bound, p.degree() + 1));
  return RatPoly(std::move(cs));
}

// q with h q = 1 modulo v^bound, h(0) invertible
RatPoly newton_inverse(const RatPoly& h, int bound) {
  RatPoly q(std::vector<UniRat>{UniRat(FieldElement(1)) / h.coeffs().at(0)});
  const RatPoly two(std::vector<UniRat>{UniRat(FieldElement(2))});
  for (int prec = 1; prec < bound;) {
    prec = std::min(2 * prec, bound);
    q = truncated(q * (two - truncated(h, prec) * q), prec);
  }
  return q;
}

}  // namespace

// ---- Prime

Prime Prime::principal(const BivarPoly& f) {
  if (f.is_zero()) return zero();
  const BivarPoly g = normalize_prime(f);
  if (g.is_constant() || g.is_unit_at_origin()) throw BadLocus(f.str() + " does not define a prime through the origin");
  if (g == BivarPoly::Z()) return axis(Var::Z);
  if (g == BivarPoly::W()) return axis(Var::W);
  return {Kind::Irr, g};
}

BivarPoly Prime::generator() const {
  switch (kind) {
    case Kind::Zero:
      return BivarPoly();
    case Kind::Z:
      return BivarPoly::Z();
    case Kind::W:
      return BivarPoly::W();
    case Kind::Irr:
      return f;
    case Kind::Maximal:
      break;
  }
  throw BadLocus("(Z,W) is not principal");
}

std::string Prime::str() const {
  switch (kind) {
    case Kind::Zero:
      return "0";
    case Kind::Z:
      return "Z";
    case Kind::W:
      return "W";
    case Kind::Irr:
      return f.str();
    case Kind::Maximal:
      break;
  }
  return "Z,W";
}

// ---- E(0)

E0Element E0Element::omega(int n, const RationalFunction& phi) {
  E0Element e;
  e.add(n, phi);
  return e;
}

void E0Element::add(int n, const RationalFunction& phi) {
  if (n < 0 || phi.is_zero()) return;
  auto [it, fresh] = parts_.emplace(n, phi);
  if (!fresh) {
    it->second += phi;
    if (it->second.is_zero()) parts_.erase(it);
  }
}

E0Element E0Element::shifted(int dn, int a, int b) const {
  E0Element out;
  for (const auto& [n, phi] : parts_) out.add(n - dn, phi.times_monomial(a, b));
  return out;
}

E0Element E0Element::scale(const FieldElement& c) const {
  E0Element out;
  for (const auto& [n, phi] : parts_) out.add(n, phi.scale(c));
  return out;
}

E0Element& E0Element::operator+=(const E0Element& o) {
  for (const auto& [n, phi] : o.parts_) add(n, phi);
  return *this;
}

bool operator==(const E0Element& a, const E0Element& b) {
  if (a.parts_.size() != b.parts_.size()) return false;
  for (const auto& [n, phi] : a.parts_) {
    auto it = b.parts_.find(n);
    if (it == b.parts_.end() || !(it->second == phi)) return false;
  }
  return true;
}

std::string E0Element::str() const {
  return join_terms(parts_, [](const auto& kv) {
    return "Omega[0; " + std::to_string(kv.first) + "](" + kv.second.str() + ")";
  });
}

// ---- E(Z), E(W)

EAxisElement EAxisElement::omega(Var axis, int n, const RationalFunction& phi) {
  EAxisElement e(axis);
  if (n < 0 || phi.is_zero()) return e;
  for (const auto& [m, c] : adic_expand(phi.num(), phi.den().expand(), axis, n)) e.add(n, m, c);
  return e;
}

EAxisElement EAxisElement::monomial(Var axis, int n, int m, const UniRat& c) {
  EAxisElement e(axis);
  e.add(n, m, c);
  return e;
}

void EAxisElement::add(int n, int m, const UniRat& c) {
  if (n < 0 || m > n || c.is_zero()) return;
  Expansion& part = parts_[n];
  auto [it, fresh] = part.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) part.erase(it);
  }
  if (part.empty()) parts_.erase(n);
}

EAxisElement EAxisElement::shifted(int dn, int a, int b) const {
  const int along = axis_ == Var::Z ? a : b, across = axis_ == Var::Z ? b : a;
  EAxisElement out(axis_);
  for (const auto& [n, part] : parts_)
    for (const auto& [m, c] : part) out.add(n - dn, m + along, c.shift(across));
  return out;
}

EAxisElement EAxisElement::scale(const FieldElement& c) const {
  EAxisElement out(axis_);
  for (const auto& [n, part] : parts_)
    for (const auto& [m, x] : part) out.add(n, m, x * UniRat(c));
  return out;
}

EAxisElement& EAxisElement::operator+=(const EAxisElement& o) {
  if (o.axis_ != axis_) throw InvariantViolation("adding elements of E(Z) and E(W)");
  for (const auto& [n, part] : o.parts_)
    for (const auto& [m, c] : part) add(n, m, c);
  return *this;
}

bool operator==(const EAxisElement& a, const EAxisElement& b) { return a.axis_ == b.axis_ && a.parts_ == b.parts_; }

std::string EAxisElement::str() const {
  const char v = var_char(axis_), o = var_char(other(axis_));
  std::string out;
  for (const auto& [n, part] : parts_) {
    std::string arg;
    for (const auto& [m, c] : part) {
      if (!arg.empty()) arg += " + ";
      arg += "(" + c.str(o) + ")*" + v + "^" + std::to_string(m);
    }
    if (!out.empty()) out += " + ";
    out += "Omega[" + std::string(1, v) + "; " + std::to_string(n) + "](" + arg + ")";
  }
  return out.empty() ? "0" : out;
}

H3Coordinates to_h3(const EAxisElement& e) {
  H3Coordinates out;
  auto put = [&](const std::array<int, 3>& k, const UniRat& c) {
    UniRat& slot = out[k];
    slot += c;
    if (slot.is_zero()) out.erase(k);
  };
  for (const auto& [n, part] : e.parts())
    for (const auto& [m, c] : part)
      for (int i = 0; i <= n; ++i) {
        if (e.axis() == Var::Z) {
          // c Z^m [1/Z^(n+1-i), (XW)^(i+1), Y^(n+1-i)] with W a unit
          const int a = n + 1 - i - m;
          if (a >= 1) put({a, i + 1, n + 1 - i}, c.shift(-(i + 1)));
        } else {
          const int a = i + 1 - m;
          if (a >= 1) put({a, i + 1, n + 1 - i}, c.shift(-(n + 1 - i)));
        }
      }
  return out;
}

H3Coordinates omega_axis_h3(Var axis, int n, const RationalFunction& phi) {
  H3Coordinates out;
  if (n < 0 || phi.is_zero()) return out;
  const BivarPoly v = axis == Var::Z ? BivarPoly::Z() : BivarPoly::W();
  const int s = phi.den().multiplicity(v);
  const RatPoly g = RatPoly::from_bivar(phi.num(), axis);
  const RatPoly h = RatPoly::from_bivar(phi.den().expand_without(v), axis);
  for (int i = 0; i <= n; ++i) {
    const int a = axis == Var::Z ? s + n + 1 - i : s + i + 1;
    if (a <= 0) continue;
    // g/h modulo v^a, inverting h by Newton iteration
    const RatPoly r = truncated(g * newton_inverse(h, a), a);
    const int unit_shift = axis == Var::Z ? -(i + 1) : -(n + 1 - i);
    for (int e = 0; e <= r.degree(); ++e) {
      const UniRat& c = r.coeffs()[static_cast<size_t>(e)];
      if (c.is_zero()) continue;
      out[{a - e, i + 1, n + 1 - i}] += c.shift(unit_shift);
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// ---- E(f)

EfElement::EfElement(BivarPoly f) : f_(normalize_prime(f)) {
  if (f_ == BivarPoly::Z() || f_ == BivarPoly::W() || f_.is_unit_at_origin() || f_.is_constant())
    throw BadLocus(f.str() + " is not a prime other than (Z), (W) through the origin");
}

EfElement EfElement::omega(const BivarPoly& f, int n, const RationalFunction& phi) {
  const BivarPoly g = normalize_prime(f);
  return omega(g, n, phi.num(), phi.den().expand_without(g), phi.den().multiplicity(g));
}

EfElement EfElement::omega(const BivarPoly& f, int n, const BivarPoly& g, const BivarPoly& h, int s) {
  EfElement e(f);
  if (n >= 0) e.add(n, h1_class(g, h, e.f_, s));
  return e;
}

void EfElement::add(int n, const H1Class& c) {
  if (n < 0 || h1_is_zero(c)) return;
  auto [it, fresh] = parts_.emplace(n, c);
  if (!fresh) {
    it->second = h1_add(it->second, c);
    if (h1_is_zero(it->second)) parts_.erase(it);
  }
}

EfElement EfElement::shifted(int dn, int a, int b) const {
  EfElement out(f_);
  for (const auto& [n, c] : parts_)
    out.add(n - dn, h1_class(c.g * monomial_part(a, b), c.h * monomial_part(-a, -b), f_, c.s));
  return out;
}

EfElement EfElement::scale(const FieldElement& c) const {
  EfElement out(f_);
  for (const auto& [n, x] : parts_) out.add(n, h1_scale(x, c));
  return out;
}

EfElement& EfElement::operator+=(const EfElement& o) {
  if (!(o.f_ == f_)) throw InvariantViolation("adding elements of E(" + f_.str() + ") and E(" + o.f_.str() + ")");
  for (const auto& [n, c] : o.parts_) add(n, c);
  return *this;
}

bool operator==(const EfElement& a, const EfElement& b) { return a.f_ == b.f_ && (a - b).is_zero(); }

std::string EfElement::str() const {
  return join_terms(parts_, [&](const auto& kv) {
    const H1Class& c = kv.second;
    return "Omega[" + f_.str() + "; " + std::to_string(kv.first) + "]((" + c.g.str() + ")/((" + c.h.str() + ")*(" +
           f_.str() + ")^" + std::to_string(c.s) + "))";
  });
}

// ---- E(Z,W)

bool EZWElement::valid(int n, int s, int t) { return n >= 0 && n >= s && n >= t && n >= s + t; }

EZWElement EZWElement::omega(int n, int s, int t, const FieldElement& c) {
  EZWElement e;
  e.add(n, s, t, c);
  return e;
}

EZWElement EZWElement::omega(int n, const H2Canonical& c) {
  EZWElement e;
  for (const auto& [uv, x] : c.coeffs()) e.add(n, -uv.first, -uv.second, x);
  return e;
}

void EZWElement::add(int n, int s, int t, const FieldElement& c) {
  if (valid(n, s, t)) coeffs_.add({n, s, t}, c);
}

EZWElement EZWElement::shifted(int dn, int a, int b) const {
  EZWElement out;
  for (const auto& [k, c] : coeffs_.coeffs()) out.add(k[0] - dn, k[1] + a, k[2] + b, c);
  return out;
}

EZWElement EZWElement::scale(const FieldElement& c) const {
  EZWElement out;
  out.coeffs_ = coeffs_.scale(c);
  return out;
}

EZWElement& EZWElement::operator+=(const EZWElement& o) {
  coeffs_ += o.coeffs_;
  return *this;
}

std::string EZWElement::str() const {
  return join_terms(coeffs_.coeffs(), [](const auto& kv) {
    const auto& [k, c] = kv;
    return c.str() + "*Omega^" + std::to_string(k[0]) + "(Z^" + std::to_string(k[1]) + " W^" + std::to_string(k[2]) + ")";
  });
}

// ---- HullElement

HullElement HullElement::zero_at(const Prime& q) {
  switch (q.kind) {
    case Prime::Kind::Zero:
      return E0Element();
    case Prime::Kind::Z:
      return EAxisElement(Var::Z);
    case Prime::Kind::W:
      return EAxisElement(Var::W);
    case Prime::Kind::Irr:
      return EfElement(q.f);
    case Prime::Kind::Maximal:
      break;
  }
  return EZWElement();
}

Prime HullElement::prime() const {
  struct {
    Prime operator()(const E0Element&) const { return Prime::zero(); }
    Prime operator()(const EAxisElement& e) const { return Prime::axis(e.axis()); }
    Prime operator()(const EfElement& e) const { return {Prime::Kind::Irr, e.f()}; }
    Prime operator()(const EZWElement&) const { return Prime::maximal(); }
  } visitor;
  return std::visit(visitor, payload_);
}

bool HullElement::is_zero() const {
  return std::visit([](const auto& e) { return e.is_zero(); }, payload_);
}

HullElement HullElement::shifted(int dn, int a, int b) const {
  return std::visit([&](const auto& e) { return HullElement(e.shifted(dn, a, b)); }, payload_);
}

HullElement HullElement::scale(const FieldElement& c) const {
  return std::visit([&](const auto& e) { return HullElement(e.scale(c)); }, payload_);
}

HullElement& HullElement::operator+=(const HullElement& o) {
  if (!(prime() == o.prime()))
    throw InvariantViolation("adding elements of E(" + prime().str() + ") and E(" + o.prime().str() + ")");
  std::visit(
      [&](auto& e) {
        using T = std::decay_t<decltype(e)>;
        e += std::get<T>(o.payload_);
      },
      payload_);
  return *this;
}

bool operator==(const HullElement& a, const HullElement& b) { return a.prime() == b.prime() && (a - b).is_zero(); }

std::string HullElement::str() const {
  return std::visit([](const auto& e) { return e.str(); }, payload_);
}

// ---- operations

HullElement omega(const Prime& q, int n, const RationalFunction& phi) {
  switch (q.kind) {
    case Prime::Kind::Zero:
      return E0Element::omega(n, phi);
    case Prime::Kind::Z:
      return EAxisElement::omega(Var::Z, n, phi);
    case Prime::Kind::W:
      return EAxisElement::omega(Var::W, n, phi);
    case Prime::Kind::Irr:
      return EfElement::omega(q.f, n, phi);
    case Prime::Kind::Maximal:
      break;
  }
  throw BadLocus("Omega at (Z,W) takes a canonical H^2 argument");
}

HullElement act(const QuadPoly& r, const HullElement& e) {
  HullElement out = HullElement::zero_at(e.prime());
  for (const auto& [x, c] : r.terms()) out += e.shifted(x[0] + x[1], x[2] - x[1], x[3] - x[0]).scale(c);
  return out;
}

EZWElement act(const QuadPoly& r, const EZWElement& e) {
  EZWElement out;
  for (const auto& [x, c] : r.terms()) out += e.shifted(x[0] + x[1], x[2] - x[1], x[3] - x[0]).scale(c);
  return out;
}

EZWElement act_local(const LocalFraction& r, const EZWElement& e) {
  if (e.is_zero() || r.is_zero()) return {};
  if (!r.den().is_unit_at_origin()) throw BadLocus("denominator " + r.den().str() + " vanishes at the origin");
  // Z^c W^d kills Omega^n(Z^s W^t) once c > n - s or d > n - t
  int bz = 0, bw = 0;
  for (const auto& [k, c] : e.coeffs().coeffs()) {
    bz = std::max(bz, k[0] - k[1] + 1);
    bw = std::max(bw, k[0] - k[2] + 1);
  }
  const BivarPoly series =
      BivarPoly::mul_truncated(r.num(), series_inverse_truncated(r.den(), bz, bw), bz, bw);
  EZWElement out;
  series.for_each_term([&](int c, int d, const FieldElement& x) { out += e.shifted(0, c, d).scale(x); });
  return out;
}

EZWElement laurent_op(int i, int j, int k, int l, const EZWElement& e) { return e.shifted(i + j, k - j, l - i); }

HullElement graded_part(const HullElement& e, int n) {
  struct {
    int n;
    HullElement operator()(const E0Element& x) const {
      auto it = x.parts().find(n);
      return it == x.parts().end() ? E0Element() : E0Element::omega(n, it->second);
    }
    HullElement operator()(const EAxisElement& x) const {
      EAxisElement out(x.axis());
      if (auto it = x.parts().find(n); it != x.parts().end())
        for (const auto& [m, c] : it->second) out.add(n, m, c);
      return out;
    }
    HullElement operator()(const EfElement& x) const {
      EfElement out(x.f());
      if (auto it = x.parts().find(n); it != x.parts().end()) out.add(n, it->second);
      return out;
    }
    HullElement operator()(const EZWElement& x) const {
      EZWElement out;
      for (const auto& [k, c] : x.coeffs().coeffs())
        if (k[0] == n) out.add(k[0], k[1], k[2], c);
      return out;
    }
  } visitor{n};
  return std::visit(visitor, e.payload());
}

HullElement socle_project(const HullElement& e) { return graded_part(e, 0); }

bool is_socle(const HullElement& e) { return act(QuadPoly::X(), e).is_zero() && act(QuadPoly::Y(), e).is_zero(); }

int top_degree(const HullElement& e) {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        int top = -1;
        if constexpr (std::is_same_v<T, EZWElement>) {
          for (const auto& [k, c] : x.coeffs().coeffs()) top = std::max(top, k[0]);
        } else if (!x.parts().empty()) {
          top = x.parts().rbegin()->first;
        }
        return top;
      },
      e.payload());
}

H4Canonical ezw_to_h4(const EZWElement& e) {
  H4Canonical out;
  for (const auto& [k, c] : e.coeffs().coeffs()) {
    const auto [n, s, t] = k;
    for (int i = 0; i <= n; ++i) {
      const int a = n + 1 - i - s, b = i + 1 - t;
      if (a >= 1 && b >= 1) out.add({a, b, i + 1, n + 1 - i}, c);
    }
  }
  return out;
}

EZWElement h4_to_ezw(const H4Canonical& c) {
  // every index [1/Z^a, W^b, X^j, Y^k] belongs to exactly one Omega^n(Z^s W^t)
  std::set<EZWElement::Key> candidates;
  for (const auto& [k, x] : c.coeffs()) {
    const auto [a, b, j, y] = k;
    if (a < 1 || b < 1 || j < 1 || y < 1) throw NotInEZW("index out of range in " + to_string(c));
    candidates.insert({j + y - 2, y - a, j - b});
  }
  EZWElement out;
  for (const auto& [n, s, t] : candidates) {
    const int iw = std::max(0, t);
    out.add(n, s, t, c.at({n + 1 - iw - s, iw + 1 - t, iw + 1, n + 1 - iw}));
  }
  if (!(ezw_to_h4(out) == c)) throw NotInEZW(to_string(c) + " is not annihilated by XW - YZ");
  return out;
}

}  // namespace injres
