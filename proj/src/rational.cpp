#include "injres/rational.hpp"

#include <algorithm>

#include "injres/errors.hpp"
#include "injres/ring_ops.hpp"

namespace injres {

LocalFraction::LocalFraction(BivarPoly num, BivarPoly den, Locus locus)
    : num_(std::move(num)), den_(std::move(den)), locus_(std::move(locus)) {
  if (den_.is_zero()) throw BadLocus("zero denominator");
  switch (locus_.kind) {
    case Locus::Kind::Origin:
      if (!den_.is_unit_at_origin()) throw BadLocus(den_.str() + " vanishes at the origin");
      break;
    case Locus::Kind::Principal:
      if (try_divide(den_, locus_.prime)) throw BadLocus(locus_.prime.str() + " divides " + den_.str());
      break;
    case Locus::Kind::Generic:
      break;
  }
}

LocalFraction operator+(const LocalFraction& a, const LocalFraction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_, a.locus_, true};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, a.locus_, true};
}

LocalFraction operator*(const LocalFraction& a, const LocalFraction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_, a.locus_, true};
}

FactoredDenominator::FactoredDenominator(BivarPoly unit, std::vector<Factor> factors) : unit_(std::move(unit)) {
  if (!unit_.is_unit_at_origin()) throw BadDenominator("unit part " + unit_.str() + " vanishes at the origin");
  for (auto& [f, m] : factors) {
    if (m < 0) throw BadDenominator("negative multiplicity");
    if (m == 0) continue;
    BivarPoly g = normalize_prime(f);
    if (g.is_unit_at_origin() || g.is_constant()) throw BadDenominator(g.str() + " does not vanish at the origin");
    // absorb the normalizing scalar into the unit
    unit_ = unit_.scale(f.lex_lead().pow(m));
    auto it = std::find_if(factors_.begin(), factors_.end(), [&](const Factor& x) { return x.first == g; });
    if (it == factors_.end()) {
      factors_.emplace_back(std::move(g), m);
    } else {
      it->second += m;
    }
  }
  std::sort(factors_.begin(), factors_.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
}

FactoredDenominator FactoredDenominator::of_factor(const BivarPoly& f, int mult) {
  return FactoredDenominator(BivarPoly(1), {{f, mult}});
}

FactoredDenominator FactoredDenominator::monomial(int a, int b) {
  std::vector<Factor> fs;
  if (a > 0) fs.emplace_back(BivarPoly::Z(), a);
  if (b > 0) fs.emplace_back(BivarPoly::W(), b);
  return FactoredDenominator(BivarPoly(1), std::move(fs));
}

int FactoredDenominator::multiplicity(const BivarPoly& f) const {
  BivarPoly g = normalize_prime(f);
  for (const auto& [h, m] : factors_)
    if (h == g) return m;
  return 0;
}

BivarPoly FactoredDenominator::expand() const {
  BivarPoly out = unit_;
  for (const auto& [f, m] : factors_) out = out * f.pow(m);
  return out;
}

BivarPoly FactoredDenominator::expand_without(const BivarPoly& f) const {
  BivarPoly g = normalize_prime(f);
  BivarPoly out = unit_;
  for (const auto& [h, m] : factors_)
    if (!(h == g)) out = out * h.pow(m);
  return out;
}

FactoredDenominator operator*(const FactoredDenominator& a, const FactoredDenominator& b) {
  std::vector<FactoredDenominator::Factor> fs = a.factors_;
  fs.insert(fs.end(), b.factors_.begin(), b.factors_.end());
  return FactoredDenominator(a.unit_ * b.unit_, std::move(fs));
}

FactoredDenominator FactoredDenominator::common(const FactoredDenominator& a, const FactoredDenominator& b) {
  std::vector<Factor> fs = a.factors_;
  for (const auto& [f, m] : b.factors_) {
    auto it = std::find_if(fs.begin(), fs.end(), [&](const Factor& x) { return x.first == f; });
    if (it == fs.end()) {
      fs.emplace_back(f, m);
    } else {
      it->second = std::max(it->second, m);
    }
  }
  BivarPoly unit = a.unit_ == b.unit_ ? a.unit_ : a.unit_ * b.unit_;
  return FactoredDenominator(std::move(unit), std::move(fs));
}

BivarPoly FactoredDenominator::cofactor(const FactoredDenominator& o) const {
  BivarPoly out = exact_divide(unit_, o.unit_);
  for (const auto& [f, m] : factors_) {
    int k = m - o.multiplicity(f);
    if (k < 0) throw InvariantViolation("cofactor of a non-divisor");
    if (k > 0) out = out * f.pow(k);
  }
  return out;
}

FactoredDenominator FactoredDenominator::with_multiplicity(const BivarPoly& f, int mult) const {
  std::vector<Factor> fs;
  for (const auto& x : factors_)
    if (!(x.first == f)) fs.push_back(x);
  if (mult > 0) fs.emplace_back(f, mult);
  return FactoredDenominator(unit_, std::move(fs));
}

RationalFunction::RationalFunction(BivarPoly num, FactoredDenominator den) : num_(std::move(num)), den_(std::move(den)) {
  cancel();
}

void RationalFunction::cancel() {
  if (num_.is_zero()) {
    den_ = FactoredDenominator();
    return;
  }
  std::vector<FactoredDenominator::Factor> fs;
  bool changed = false;
  for (auto [f, m] : den_.factors()) {
    while (m > 0) {
      auto q = try_divide(num_, f);
      if (!q) break;
      num_ = std::move(*q);
      --m;
      changed = true;
    }
    if (m > 0) fs.emplace_back(f, m);
  }
  BivarPoly unit = den_.unit();
  if (!unit.is_constant()) {
    if (auto q = try_divide(num_, unit)) {
      num_ = std::move(*q);
      unit = BivarPoly(1);
      changed = true;
    }
  }
  if (unit.is_constant() && !(unit == BivarPoly(1))) {
    num_ = num_.scale(unit.const_term().inverse());
    unit = BivarPoly(1);
    changed = true;
  }
  if (changed) den_ = FactoredDenominator(std::move(unit), std::move(fs));
}

RationalFunction RationalFunction::monomial(FieldElement c, int a, int b) {
  return {BivarPoly::monomial(std::move(c), std::max(a, 0), std::max(b, 0)),
          FactoredDenominator::monomial(std::max(-a, 0), std::max(-b, 0))};
}

RationalFunction RationalFunction::from_polys(const BivarPoly& num, const BivarPoly& den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  const int a = den.monomial_valuation(Var::Z), b = den.monomial_valuation(Var::W);
  BivarPoly rest = den.unshift(a, b);
  std::vector<FactoredDenominator::Factor> fs;
  if (a > 0) fs.emplace_back(BivarPoly::Z(), a);
  if (b > 0) fs.emplace_back(BivarPoly::W(), b);
  if (rest.is_unit_at_origin()) return {num, FactoredDenominator(rest, std::move(fs))};
  if (verify_irreducible(rest, 200000) != Irreducibility::Verified)
    throw UnfactoredDenominator(rest.str() + " is not a verified irreducible");
  fs.emplace_back(rest, 1);
  return {num, FactoredDenominator(BivarPoly(1), std::move(fs))};
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  FactoredDenominator d = FactoredDenominator::common(a.den_, b.den_);
  return {a.num_ * d.cofactor(a.den_) + b.num_ * d.cofactor(b.den_), d};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction RationalFunction::times_monomial(int a, int b) const {
  return *this * monomial(1, a, b);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ * b.den_.expand() == b.num_ * a.den_.expand();
}

std::string RationalFunction::str() const {
  BivarPoly d = den_.expand();
  if (d == BivarPoly(1)) return num_.str();
  return "(" + num_.str() + ")/(" + d.str() + ")";
}

}  // namespace injres
