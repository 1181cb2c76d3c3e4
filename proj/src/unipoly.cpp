#include "injres/unipoly.hpp"

#include <algorithm>

#include "injres/errors.hpp"

namespace injres {

UniPoly::UniPoly(FieldElement c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

UniPoly::UniPoly(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(FieldElement c, int deg) {
  if (c.is_zero()) return {};
  std::vector<FieldElement> v(static_cast<size_t>(deg) + 1, FieldElement(0).in_field(c.prime()));
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int UniPoly::order() const {
  for (size_t k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return static_cast<int>(k);
  return -1;
}

FieldElement UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(k)];
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) { return *this += -o; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (size_t k = 0; k < a.coeffs_.size(); ++k)
    if (a.coeffs_[k] != b.coeffs_[k]) return false;
  return true;
}

UniPoly UniPoly::scale(const FieldElement& c) const {
  if (c.is_zero()) return {};
  UniPoly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  r.trim();
  return r;
}

UniPoly UniPoly::shift(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<FieldElement> v(static_cast<size_t>(k));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return UniPoly(std::move(v));
}

UniPoly UniPoly::unshift(int k) const {
  if (is_zero() || k == 0) return *this;
  if (order() < k) throw NotDivisible("x^" + std::to_string(k) + " does not divide");
  return UniPoly(std::vector<FieldElement>(coeffs_.begin() + k, coeffs_.end()));
}

UniPoly UniPoly::truncate(int len) const {
  if (len >= static_cast<int>(coeffs_.size())) return *this;
  if (len <= 0) return {};
  return UniPoly(std::vector<FieldElement>(coeffs_.begin(), coeffs_.begin() + len));
}

UniPoly UniPoly::pow(int e) const {
  UniPoly result(FieldElement(1));
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scale(lead().inverse());
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<FieldElement> v(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * FieldElement(static_cast<long>(k));
  return UniPoly(std::move(v));
}

FieldElement UniPoly::eval(const FieldElement& at) const {
  FieldElement acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  r = a;
  q = UniPoly();
  if (a.degree() < b.degree()) return;
  std::vector<FieldElement> qc(static_cast<size_t>(a.degree() - b.degree()) + 1);
  FieldElement inv = b.lead().inverse();
  std::vector<FieldElement>& rc = r.coeffs_;
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const FieldElement& top = rc[static_cast<size_t>(k)];
    if (top.is_zero()) continue;
    FieldElement c = top * inv;
    qc[static_cast<size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) rc[static_cast<size_t>(k - db + j)] -= c * b.coeffs_[static_cast<size_t>(j)];
  }
  r.trim();
  q = UniPoly(std::move(qc));
}

std::optional<UniPoly> UniPoly::divide_exact(const UniPoly& a, const UniPoly& b) {
  UniPoly q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::string UniPoly::str(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const FieldElement& c = coeffs_[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool neg = cs[0] == '-';
    if (neg) cs.erase(0, 1);
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (k == 0) {
      out += cs;
      continue;
    }
    if (cs != "1") out += cs + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

UniRat::UniRat(UniPoly num, UniPoly den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = UniPoly(FieldElement(1).in_field(den.lead().prime()));
    return;
  }
  UniPoly g = UniPoly::gcd(num, den);
  if (!g.is_constant()) {
    num = *UniPoly::divide_exact(num, g);
    den = *UniPoly::divide_exact(den, g);
  }
  FieldElement lc = den.lead();
  num_ = num.scale(lc.inverse());
  den_ = den.monic();
}

UniRat UniRat::monomial(FieldElement c, int deg) {
  if (deg >= 0) return UniRat(UniPoly::monomial(c, deg));
  return UniRat(UniPoly(c), UniPoly::monomial(1, -deg), true);
}

std::optional<std::pair<FieldElement, int>> UniRat::as_monomial() const {
  if (is_zero()) return std::nullopt;
  int on = num_.order(), od = den_.order();
  if (num_.degree() != on || den_.degree() != od) return std::nullopt;
  return std::make_pair(num_.lead() / den_.lead(), on - od);
}

std::map<int, FieldElement> UniRat::laurent(int up_to) const {
  std::map<int, FieldElement> out;
  if (is_zero()) return out;
  int on = num_.order(), od = den_.order();
  int v = on - od;
  if (up_to < v) return out;
  UniPoly n = num_.unshift(on), d = den_.unshift(od);
  int len = up_to - v + 1;
  // power-series division n/d to len terms
  std::vector<FieldElement> q(static_cast<size_t>(len));
  FieldElement inv = d.coeff(0).inverse();
  for (int k = 0; k < len; ++k) {
    FieldElement acc = n.coeff(k);
    for (int j = 1; j <= std::min(k, d.degree()); ++j) acc -= d.coeff(j) * q[static_cast<size_t>(k - j)];
    q[static_cast<size_t>(k)] = acc * inv;
    if (!q[static_cast<size_t>(k)].is_zero()) out.emplace(v + k, q[static_cast<size_t>(k)]);
  }
  return out;
}

UniRat UniRat::shift(int k) const {
  if (is_zero() || k == 0) return *this;
  if (k > 0) return UniRat(num_.shift(k), den_);
  return UniRat(num_, den_.shift(-k));
}

UniRat operator+(const UniRat& a, const UniRat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return UniRat(a.num_ + b.num_, a.den_);
  return UniRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

UniRat operator*(const UniRat& a, const UniRat& b) {
  if (a.is_zero() || b.is_zero()) return UniRat();
  return UniRat(a.num_ * b.num_, a.den_ * b.den_);
}

UniRat operator/(const UniRat& a, const UniRat& b) {
  if (b.is_zero()) throw DivisionByZero("rational function division by zero");
  return UniRat(a.num_ * b.den_, a.den_ * b.num_);
}

std::string UniRat::str(char var) const {
  if (den_.is_constant()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace injres
