#include "injres/bivar.hpp"

#include <algorithm>

#include "injres/errors.hpp"

namespace injres {

namespace {

std::string term_text(const FieldElement& c, const std::vector<std::pair<char, int>>& powers, bool first) {
  std::string cs = c.str();
  bool neg = cs[0] == '-';
  if (neg) cs.erase(0, 1);
  std::string out = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
  std::string mono;
  for (auto [name, e] : powers) {
    if (e == 0) continue;
    if (!mono.empty()) mono += "*";
    mono += name;
    if (e > 1) mono += "^" + std::to_string(e);
  }
  if (mono.empty()) return out + cs;
  if (cs != "1") out += cs + "*";
  return out + mono;
}

}  // namespace

BivarPoly::BivarPoly(FieldElement c) {
  if (!c.is_zero()) layers_.emplace_back(std::move(c));
}

BivarPoly::BivarPoly(std::vector<UniPoly> layers) : layers_(std::move(layers)) { trim(); }

BivarPoly BivarPoly::monomial(FieldElement c, int degZ, int degW) {
  if (c.is_zero()) return {};
  std::vector<UniPoly> layers(static_cast<size_t>(degW) + 1);
  layers.back() = UniPoly::monomial(c, degZ);
  return BivarPoly(std::move(layers));
}

BivarPoly BivarPoly::from_uni(const UniPoly& p, Var v) {
  if (v == Var::Z) return BivarPoly(std::vector<UniPoly>{p});
  std::vector<UniPoly> layers;
  for (const auto& c : p.coeffs()) layers.emplace_back(c);
  return BivarPoly(std::move(layers));
}

void BivarPoly::trim() {
  while (!layers_.empty() && layers_.back().is_zero()) layers_.pop_back();
}

int BivarPoly::degZ() const {
  int d = -1;
  for (const auto& l : layers_) d = std::max(d, l.degree());
  return d;
}

int BivarPoly::total_degree() const {
  int d = -1;
  for (size_t k = 0; k < layers_.size(); ++k)
    if (!layers_[k].is_zero()) d = std::max(d, layers_[k].degree() + static_cast<int>(k));
  return d;
}

size_t BivarPoly::term_count() const {
  size_t n = 0;
  for (const auto& l : layers_)
    for (const auto& c : l.coeffs()) n += c.is_zero() ? 0 : 1;
  return n;
}

FieldElement BivarPoly::coeff(int degZ, int degW) const {
  if (degW < 0 || degW >= static_cast<int>(layers_.size())) return 0;
  return layers_[static_cast<size_t>(degW)].coeff(degZ);
}

UniPoly BivarPoly::layer(int k) const {
  if (k < 0 || k >= static_cast<int>(layers_.size())) return {};
  return layers_[static_cast<size_t>(k)];
}

std::vector<UniPoly> BivarPoly::coefficients_in(Var v) const {
  if (v == Var::W) return layers_;
  return swap_vars().layers_;
}

BivarPoly BivarPoly::from_coefficients(const std::vector<UniPoly>& cs, Var v) {
  BivarPoly p{std::vector<UniPoly>(cs)};
  return v == Var::W ? p : p.swap_vars();
}

bool BivarPoly::only_in(Var v) const {
  if (v == Var::Z) return layers_.size() <= 1;
  for (const auto& l : layers_)
    if (l.degree() > 0) return false;
  return true;
}

UniPoly BivarPoly::as_uni(Var v) const {
  if (!only_in(v)) throw InvariantViolation("polynomial involves both variables");
  if (v == Var::Z) return layer(0);
  std::vector<FieldElement> cs;
  for (const auto& l : layers_) cs.push_back(l.coeff(0));
  return UniPoly(std::move(cs));
}

int BivarPoly::monomial_valuation(Var v) const {
  if (is_zero()) return -1;
  if (v == Var::W) {
    for (size_t k = 0; k < layers_.size(); ++k)
      if (!layers_[k].is_zero()) return static_cast<int>(k);
    return -1;
  }
  int best = -1;
  for (const auto& l : layers_) {
    if (l.is_zero()) continue;
    int o = l.order();
    best = best < 0 ? o : std::min(best, o);
  }
  return best;
}

FieldElement BivarPoly::lex_lead() const { return layers_.empty() ? FieldElement(0) : layers_.back().lead(); }

void BivarPoly::for_each_term(const std::function<void(int, int, const FieldElement&)>& fn) const {
  for (size_t k = 0; k < layers_.size(); ++k) {
    const auto& cs = layers_[k].coeffs();
    for (size_t j = 0; j < cs.size(); ++j)
      if (!cs[j].is_zero()) fn(static_cast<int>(j), static_cast<int>(k), cs[j]);
  }
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly r = *this;
  for (auto& l : r.layers_) l = -l;
  return r;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  if (o.layers_.size() > layers_.size()) layers_.resize(o.layers_.size());
  for (size_t k = 0; k < o.layers_.size(); ++k) layers_[k] += o.layers_[k];
  trim();
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) { return *this += -o; }

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<UniPoly> out(a.layers_.size() + b.layers_.size() - 1);
  for (size_t i = 0; i < a.layers_.size(); ++i) {
    if (a.layers_[i].is_zero()) continue;
    for (size_t j = 0; j < b.layers_.size(); ++j) {
      if (b.layers_[j].is_zero()) continue;
      out[i + j] += a.layers_[i] * b.layers_[j];
    }
  }
  return BivarPoly(std::move(out));
}

bool operator==(const BivarPoly& a, const BivarPoly& b) {
  if (a.layers_.size() != b.layers_.size()) return false;
  for (size_t k = 0; k < a.layers_.size(); ++k)
    if (!(a.layers_[k] == b.layers_[k])) return false;
  return true;
}

bool operator<(const BivarPoly& a, const BivarPoly& b) {
  if (a.layers_.size() != b.layers_.size()) return a.layers_.size() < b.layers_.size();
  for (size_t k = a.layers_.size(); k-- > 0;) {
    const auto& x = a.layers_[k].coeffs();
    const auto& y = b.layers_[k].coeffs();
    if (x.size() != y.size()) return x.size() < y.size();
    for (size_t j = x.size(); j-- > 0;) {
      if (x[j] == y[j]) continue;
      return x[j].value() < y[j].value();
    }
  }
  return false;
}

BivarPoly BivarPoly::scale(const FieldElement& c) const {
  if (c.is_zero()) return {};
  BivarPoly r = *this;
  for (auto& l : r.layers_) l = l.scale(c);
  return r;
}

BivarPoly BivarPoly::pow(int e) const {
  BivarPoly result(FieldElement(1));
  BivarPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

BivarPoly BivarPoly::shift(int a, int b) const {
  if (is_zero()) return *this;
  std::vector<UniPoly> out(static_cast<size_t>(b));
  for (const auto& l : layers_) out.push_back(l.shift(a));
  return BivarPoly(std::move(out));
}

BivarPoly BivarPoly::unshift(int a, int b) const {
  if (is_zero()) return *this;
  if (monomial_valuation(Var::W) < b || monomial_valuation(Var::Z) < a)
    throw NotDivisible("monomial does not divide polynomial");
  std::vector<UniPoly> out;
  for (size_t k = static_cast<size_t>(b); k < layers_.size(); ++k) out.push_back(layers_[k].unshift(a));
  return BivarPoly(std::move(out));
}

BivarPoly BivarPoly::truncate(int boundZ, int boundW) const {
  std::vector<UniPoly> out;
  for (size_t k = 0; k < layers_.size() && static_cast<int>(k) < boundW; ++k)
    out.push_back(layers_[k].truncate(boundZ));
  return BivarPoly(std::move(out));
}

BivarPoly BivarPoly::mul_truncated(const BivarPoly& a, const BivarPoly& b, int boundZ, int boundW) {
  if (a.is_zero() || b.is_zero() || boundZ <= 0 || boundW <= 0) return {};
  size_t nw = std::min(a.layers_.size() + b.layers_.size() - 1, static_cast<size_t>(boundW));
  std::vector<std::vector<FieldElement>> acc(nw);
  for (size_t i = 0; i < a.layers_.size() && i < nw; ++i) {
    const auto& x = a.layers_[i].coeffs();
    if (x.empty()) continue;
    for (size_t j = 0; j < b.layers_.size() && i + j < nw; ++j) {
      const auto& y = b.layers_[j].coeffs();
      if (y.empty()) continue;
      auto& dst = acc[i + j];
      size_t len = std::min(x.size() + y.size() - 1, static_cast<size_t>(boundZ));
      if (dst.size() < len) dst.resize(len);
      for (size_t p = 0; p < x.size() && p < len; ++p) {
        if (x[p].is_zero()) continue;
        for (size_t q = 0; q < y.size() && p + q < len; ++q) dst[p + q] += x[p] * y[q];
      }
    }
  }
  std::vector<UniPoly> out;
  for (auto& v : acc) out.emplace_back(std::move(v));
  return BivarPoly(std::move(out));
}

UniPoly BivarPoly::at_zero(Var v) const {
  if (v == Var::W) return layer(0);
  std::vector<FieldElement> cs;
  for (const auto& l : layers_) cs.push_back(l.coeff(0));
  return UniPoly(std::move(cs));
}

BivarPoly BivarPoly::swap_vars() const {
  int dz = degZ();
  if (dz < 0) return {};
  std::vector<std::vector<FieldElement>> out(static_cast<size_t>(dz) + 1, std::vector<FieldElement>(layers_.size()));
  for (size_t k = 0; k < layers_.size(); ++k) {
    const auto& cs = layers_[k].coeffs();
    for (size_t j = 0; j < cs.size(); ++j) out[j][k] = cs[j];
  }
  std::vector<UniPoly> layers;
  for (auto& v : out) layers.emplace_back(std::move(v));
  return BivarPoly(std::move(layers));
}

BivarPoly BivarPoly::partial(Var v) const {
  if (v == Var::Z) {
    std::vector<UniPoly> out;
    for (const auto& l : layers_) out.push_back(l.derivative());
    return BivarPoly(std::move(out));
  }
  std::vector<UniPoly> out;
  for (size_t k = 1; k < layers_.size(); ++k) out.push_back(layers_[k].scale(FieldElement(static_cast<long>(k))));
  return BivarPoly(std::move(out));
}

FieldElement BivarPoly::eval(const FieldElement& z, const FieldElement& w) const {
  FieldElement acc(0);
  for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) acc = acc * w + it->eval(z);
  return acc;
}

std::string BivarPoly::str() const {
  if (is_zero()) return "0";
  // total degree descending, then W-degree descending
  std::vector<std::tuple<int, int, FieldElement>> terms;
  for_each_term([&](int z, int w, const FieldElement& c) { terms.emplace_back(z, w, c); });
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = std::get<0>(a) + std::get<1>(a), db = std::get<0>(b) + std::get<1>(b);
    if (da != db) return da > db;
    return std::get<1>(a) > std::get<1>(b);
  });
  std::string out;
  for (const auto& [z, w, c] : terms) out += term_text(c, {{'Z', z}, {'W', w}}, out.empty());
  return out;
}

QuadPoly::QuadPoly(FieldElement c) {
  if (!c.is_zero()) terms_.emplace(Exponent{0, 0, 0, 0}, std::move(c));
}

QuadPoly QuadPoly::monomial(FieldElement c, int x, int y, int z, int w) {
  QuadPoly p;
  if (!c.is_zero()) p.terms_.emplace(Exponent{x, y, z, w}, std::move(c));
  return p;
}

QuadPoly QuadPoly::from_bivar(const BivarPoly& p) {
  QuadPoly q;
  p.for_each_term([&](int z, int w, const FieldElement& c) { q.terms_.emplace(Exponent{0, 0, z, w}, c); });
  return q;
}

FieldElement QuadPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? FieldElement(0) : it->second;
}

bool QuadPoly::free_of_xy() const {
  for (const auto& [e, c] : terms_)
    if (e[0] != 0 || e[1] != 0) return false;
  return true;
}

BivarPoly QuadPoly::to_bivar() const {
  if (!free_of_xy()) throw InvariantViolation("polynomial involves X or Y");
  BivarPoly out;
  for (const auto& [e, c] : terms_) out += BivarPoly::monomial(c, e[2], e[3]);
  return out;
}

QuadPoly QuadPoly::operator-() const {
  QuadPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

QuadPoly& QuadPoly::operator+=(const QuadPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

QuadPoly& QuadPoly::operator-=(const QuadPoly& o) { return *this += -o; }

QuadPoly operator*(const QuadPoly& a, const QuadPoly& b) {
  QuadPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out += QuadPoly::monomial(ca * cb, ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]);
  return out;
}

bool operator==(const QuadPoly& a, const QuadPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [e, c] : a.terms_) {
    if (it->first != e || it->second != c) return false;
    ++it;
  }
  return true;
}

QuadPoly QuadPoly::pow(int e) const {
  QuadPoly r(FieldElement(1));
  for (int k = 0; k < e; ++k) r = r * *this;
  return r;
}

std::string QuadPoly::str() const {
  if (is_zero()) return "0";
  std::vector<std::pair<Exponent, FieldElement>> terms(terms_.begin(), terms_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = a.first[0] + a.first[1] + a.first[2] + a.first[3];
    int db = b.first[0] + b.first[1] + b.first[2] + b.first[3];
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [e, c] : terms)
    out += term_text(c, {{'X', e[0]}, {'Y', e[1]}, {'Z', e[2]}, {'W', e[3]}}, out.empty());
  return out;
}

}  // namespace injres
