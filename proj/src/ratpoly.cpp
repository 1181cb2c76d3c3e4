#include "injres/ratpoly.hpp"

#include "injres/errors.hpp"

namespace injres {

RatPoly::RatPoly(std::vector<UniRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RatPoly RatPoly::from_bivar(const BivarPoly& p, Var main) {
  std::vector<UniRat> cs;
  for (const auto& c : p.coefficients_in(main)) cs.emplace_back(c);
  return RatPoly(std::move(cs));
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<UniRat> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t k = 0; k < out.size(); ++k) {
    if (k < a.coeffs_.size()) out[k] += a.coeffs_[k];
    if (k < b.coeffs_.size()) out[k] += b.coeffs_[k];
  }
  return RatPoly(std::move(out));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<UniRat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(std::move(out));
}

RatPoly RatPoly::scale(const UniRat& c) const {
  std::vector<UniRat> out;
  for (const auto& x : coeffs_) out.push_back(x * c);
  return RatPoly(std::move(out));
}

void RatPoly::divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  if (b.is_zero()) throw DivisionByZero("RatPoly division by zero");
  std::vector<UniRat> rc = a.coeffs_;
  std::vector<UniRat> qc;
  const int db = b.degree();
  if (a.degree() >= db) qc.resize(static_cast<size_t>(a.degree() - db) + 1);
  UniRat inv = UniRat(FieldElement(1)) / b.lead();
  for (int k = a.degree(); k >= db; --k) {
    if (rc[static_cast<size_t>(k)].is_zero()) continue;
    UniRat c = rc[static_cast<size_t>(k)] * inv;
    qc[static_cast<size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) rc[static_cast<size_t>(k - db + j)] -= c * b.coeffs_[static_cast<size_t>(j)];
  }
  q = RatPoly(std::move(qc));
  r = RatPoly(std::move(rc));
}

RatPoly RatPoly::ext_gcd(const RatPoly& a, const RatPoly& b, RatPoly& s, RatPoly& t) {
  RatPoly r0 = a, r1 = b;
  RatPoly s0({UniRat(FieldElement(1))}), s1;
  RatPoly t0, t1({UniRat(FieldElement(1))});
  while (!r1.is_zero()) {
    RatPoly q, r;
    divmod(r0, r1, q, r);
    RatPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = s0;
    t = t0;
    return r0;
  }
  UniRat inv = UniRat(FieldElement(1)) / r0.lead();
  s = s0.scale(inv);
  t = t0.scale(inv);
  return r0.scale(inv);
}

BivarPoly RatPoly::clear_denominators(Var main, UniPoly& den) const {
  UniPoly l(FieldElement(1));
  for (const auto& c : coeffs_) {
    UniPoly g = UniPoly::gcd(l, c.den());
    l = *UniPoly::divide_exact(l * c.den(), g);
  }
  den = l.monic();
  std::vector<UniPoly> out;
  for (const auto& c : coeffs_) out.push_back(*UniPoly::divide_exact(c.num() * den, c.den()));
  return BivarPoly::from_coefficients(out, main);
}

}  // namespace injres
