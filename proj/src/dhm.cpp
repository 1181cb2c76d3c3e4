#include "injres/dhm.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "injres/errors.hpp"
#include "injres/ratpoly.hpp"
#include "injres/resolution.hpp"
#include "injres/window.hpp"

namespace injres {

namespace {

using Var4 = DHMModule::Var4;
constexpr std::array<Var4, 4> kVars = {Var4::X, Var4::Y, Var4::Z, Var4::W};
constexpr std::array<const char*, 4> kVarNames = {"X", "Y", "Z", "W"};
constexpr int kValues = 6;

QuadPoly variable(Var4 x) {
  switch (x) {
    case Var4::X:
      return QuadPoly::X();
    case Var4::Y:
      return QuadPoly::Y();
    case Var4::Z:
      return QuadPoly::Z();
    case Var4::W:
      return QuadPoly::W();
  }
  throw InvariantViolation("unknown variable");
}

QuadPoly monomial(const std::array<int, 4>& e) { return QuadPoly::monomial(1, e[0], e[1], e[2], e[3]); }

std::array<int, 4> unit_exponent(Var4 x) {
  std::array<int, 4> e{};
  e[static_cast<size_t>(x)] = 1;
  return e;
}

std::string exponent_text(const std::array<int, 4>& e) {
  std::string out;
  for (size_t k = 0; k < 4; ++k)
    for (int r = 0; r < e[k]; ++r) out += kVarNames[k];
  return out;
}

std::vector<std::array<int, 4>> monomials_of_degree(int d) {
  std::vector<std::array<int, 4>> out;
  for (int x = 0; x <= d; ++x)
    for (int y = 0; x + y <= d; ++y)
      for (int z = 0; x + y + z <= d; ++z) out.push_back({x, y, z, d - x - y - z});
  return out;
}

// How each basis vector is reached from a w: b = path * w_source.
struct Path {
  int source = 0;  // 1..6
  std::array<int, 4> exponents{};
};

Path path_of(int b) {
  using M = DHMModule;
  if (b >= M::w(1)) return {b - M::w(1) + 1, {}};
  if (b >= M::v(1)) return {b - M::v(1) + 1, unit_exponent(Var4::X)};
  switch (b) {
    case M::u(1):
      return {1, unit_exponent(Var4::W)};
    case M::u(2):
      return {2, unit_exponent(Var4::W)};
    case M::u(3):
      return {1, unit_exponent(Var4::Y)};
    case M::u(4):
      return {2, unit_exponent(Var4::Y)};
    default:
      return {3, unit_exponent(Var4::Y)};
  }
}

DHMModule build_module() {
  using M = DHMModule;
  M m;
  for (int i = 1; i <= 5; ++i) m.labels[static_cast<size_t>(M::u(i))] = "u" + std::to_string(i);
  for (int i = 1; i <= 4; ++i) m.labels[static_cast<size_t>(M::v(i))] = "v" + std::to_string(i);
  for (int i = 1; i <= 6; ++i) m.labels[static_cast<size_t>(M::w(i))] = "w" + std::to_string(i);
  auto set = [&](Var4 x, int from, std::initializer_list<int> to) {
    SparseVec img;
    for (int t : to) img[t] = FieldElement(1);
    m.images[static_cast<size_t>(x)][static_cast<size_t>(from)] = img;
  };
  set(Var4::X, M::v(1), {M::u(1)});
  set(Var4::X, M::v(2), {M::u(2)});
  set(Var4::Z, M::v(3), {M::u(1)});
  set(Var4::Z, M::v(4), {M::u(2)});

  set(Var4::X, M::w(1), {M::v(1)});
  set(Var4::Y, M::w(1), {M::u(3)});
  set(Var4::W, M::w(1), {M::u(1)});
  set(Var4::X, M::w(2), {M::v(2)});
  set(Var4::Y, M::w(2), {M::u(4)});
  set(Var4::W, M::w(2), {M::u(2)});
  set(Var4::X, M::w(3), {M::v(3)});
  set(Var4::Y, M::w(3), {M::u(5)});
  set(Var4::Z, M::w(3), {M::v(1)});
  set(Var4::X, M::w(4), {M::v(4)});
  set(Var4::Z, M::w(4), {M::v(2)});
  set(Var4::W, M::w(4), {M::u(3)});
  set(Var4::X, M::w(5), {M::u(4)});
  set(Var4::Z, M::w(5), {M::v(3)});
  set(Var4::W, M::w(5), {M::u(4)});
  set(Var4::X, M::w(6), {M::u(5)});
  set(Var4::Z, M::w(6), {M::u(3), M::v(4)});
  set(Var4::W, M::w(6), {M::u(5)});

  bool commute = true, relation = true, degree_two = true, degree_three = true;
  for (int b = 0; b < M::kRank; ++b) {
    const SparseVec e = M::basis(b);
    for (Var4 x : kVars)
      for (Var4 y : kVars) commute = commute && m.act(x, m.act(y, e)) == m.act(y, m.act(x, e));
    relation = relation && m.act(Var4::X, m.act(Var4::W, e)) == m.act(Var4::Y, m.act(Var4::Z, e));
  }
  // X^2 w1 = XZ w3 = Z^2 w5 = u1 and the same with w2, w4, w6 and u2
  const std::vector<std::tuple<std::array<int, 4>, int, int>> survivors = {
      {{2, 0, 0, 0}, M::w(1), M::u(1)}, {{1, 0, 1, 0}, M::w(3), M::u(1)}, {{0, 0, 2, 0}, M::w(5), M::u(1)},
      {{2, 0, 0, 0}, M::w(2), M::u(2)}, {{1, 0, 1, 0}, M::w(4), M::u(2)}, {{0, 0, 2, 0}, M::w(6), M::u(2)}};
  for (int b = 0; b < M::kRank; ++b) {
    for (const auto& mono : monomials_of_degree(2)) {
      SparseVec expected;
      for (const auto& [e, from, to] : survivors)
        if (e == mono && from == b) expected = M::basis(to);
      degree_two = degree_two && m.act(mono, M::basis(b)) == expected;
    }
    for (const auto& mono : monomials_of_degree(3)) degree_three = degree_three && m.act(mono, M::basis(b)).empty();
  }
  m.checks = {{"actions commute pairwise", commute},
              {"XW = YZ on every basis vector", relation},
              {"degree-2 monomials vanish except the six survivors", degree_two},
              {"degree-3 monomials vanish", degree_three}};
  for (const auto& [name, ok] : m.checks)
    if (!ok) throw InvariantViolation("module table: " + name);
  return m;
}

// Coordinates over K of hulls at principal primes: K = kappa(W) on E(Z), kappa(Z) on E(W) and E(f).
using KVec = std::map<long, UniRat>;

void add_k(KVec& out, long key, const UniRat& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = out.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

RatPoly ratpoly_power(const RatPoly& p, int e) {
  RatPoly out(std::vector<UniRat>{UniRat(FieldElement(1))});
  for (int k = 0; k < e; ++k) out = out * p;
  return out;
}

void add_ef(KVec& out, const EfElement& e) {
  const RatPoly f = RatPoly::from_bivar(e.f(), Var::W);
  for (const auto& [n, c] : e.parts()) {
    if (c.s <= 0) continue;
    const RatPoly fs = ratpoly_power(f, c.s);
    const RatPoly h = RatPoly::from_bivar(c.h, Var::W);
    RatPoly inverse;
    if (h.degree() == 0) {
      inverse = RatPoly(std::vector<UniRat>{UniRat(FieldElement(1)) / h.lead()});
    } else {
      RatPoly t;
      RatPoly::ext_gcd(h, fs, inverse, t);
    }
    RatPoly q, r;
    RatPoly::divmod(RatPoly::from_bivar(c.g, Var::W) * inverse, fs, q, r);
    // r = sum_i digit_i f^i and the class is sum_i digit_i / f^(s - i)
    for (int i = 0; i < c.s && !r.is_zero(); ++i) {
      RatPoly digit;
      RatPoly::divmod(r, f, q, digit);
      for (size_t j = 0; j < digit.coeffs().size(); ++j)
        add_k(out, (static_cast<long>(n) * 64 + (c.s - i)) * 64 + static_cast<long>(j), digit.coeffs()[j]);
      r = q;
    }
  }
}

KVec k_coords(const HullElement& x) {
  KVec out;
  const auto& p = x.payload();
  if (const auto* ax = std::get_if<EAxisElement>(&p)) {
    for (const auto& [n, expansion] : ax->parts())
      for (const auto& [m, c] : expansion) add_k(out, static_cast<long>(n) * 4096 + m + 2048, c);
  } else if (const auto* ef = std::get_if<EfElement>(&p)) {
    add_ef(out, *ef);
  } else if (!x.is_zero()) {
    throw NotApplicable("no coordinates over the residue field of a principal prime for " + x.str());
  }
  return out;
}

long condition_key(size_t condition, long key) { return (static_cast<long>(condition) << 32) | key; }

// Every residual x Phi(b) - Phi(x b), in order (b, x).
std::vector<HullElement> residuals(const DHMHom& phi) {
  const DHMModule& m = dhm_module();
  std::vector<HullElement> values;
  for (int b = 0; b < DHMModule::kRank; ++b) values.push_back(dhm_value(phi, b));
  std::vector<HullElement> out;
  for (int b = 0; b < DHMModule::kRank; ++b)
    for (Var4 x : kVars) {
      HullElement r = act(variable(x), values[static_cast<size_t>(b)]);
      for (const auto& [t, c] : m.images[static_cast<size_t>(x)][static_cast<size_t>(b)])
        r += -values[static_cast<size_t>(t)].scale(c);
      out.push_back(std::move(r));
    }
  return out;
}

SparseVec residual_coords(const DHMHom& phi) {
  SparseVec out;
  const auto rs = residuals(phi);
  for (size_t c = 0; c < rs.size(); ++c) {
    ChainElement holder(2);
    holder.add(PrimeIndex::maximal(0), rs[c]);
    for (const auto& [k, x] : monomial_coords(holder)) out.emplace(condition_key(c, k), x);
  }
  return out;
}

KVec residual_k_coords(const DHMHom& phi) {
  KVec out;
  const auto rs = residuals(phi);
  for (size_t c = 0; c < rs.size(); ++c)
    for (const auto& [k, x] : k_coords(rs[c])) out.emplace(condition_key(c, k), x);
  return out;
}

DHMHom single_value(const Prime& q, int j, const HullElement& value) {
  DHMHom h;
  h.target = q;
  for (auto& v : h.values) v = HullElement::zero_at(q);
  h.values[static_cast<size_t>(j)] = value;
  return h;
}

std::vector<HullElement> principal_unknowns(const Prime& q, int T) {
  std::vector<HullElement> out;
  for (int n = 0; n <= T; ++n) switch (q.kind) {
      case Prime::Kind::Z:
      case Prime::Kind::W: {
        const Var axis = q.kind == Prime::Kind::Z ? Var::Z : Var::W;
        for (int m = -T; m <= n; ++m) out.emplace_back(EAxisElement::monomial(axis, n, m, UniRat(FieldElement(1))));
        break;
      }
      case Prime::Kind::Irr:
        for (int k = 1; k <= T; ++k)
          for (int j = 0; j < q.f.degW(); ++j)
            out.emplace_back(EfElement::omega(q.f, n, BivarPoly::monomial(1, 0, j), BivarPoly(1), k));
        break;
      default:
        throw BadLocus("not a principal prime: " + q.str());
    }
  return out;
}

long principal_dimension(const Prime& q, int T) {
  std::vector<KVec> rows;
  const auto unknowns = principal_unknowns(q, T);
  for (int j = 0; j < kValues; ++j)
    for (const HullElement& u : unknowns) rows.push_back(residual_k_coords(single_value(q, j, u)));
  return static_cast<long>(rows.size()) - static_cast<long>(sparse_rank<UniRat>(rows));
}

std::vector<DHMHom> maximal_solutions(int T) {
  const Prime q = Prime::maximal();
  const std::vector<EZWElement> box = ezw_box(T, -T, T);
  std::vector<SparseVec> columns;
  for (int j = 0; j < kValues; ++j)
    for (const EZWElement& e : box) columns.push_back(residual_coords(single_value(q, j, e)));
  std::vector<DHMHom> out;
  for (const SparseVec& k : kernel_basis(columns)) {
    DHMHom h = single_value(q, 0, EZWElement());
    for (const auto& [col, c] : k) {
      const size_t j = static_cast<size_t>(col) / box.size(), idx = static_cast<size_t>(col) % box.size();
      h.values[j] += HullElement(box[idx].scale(c));
    }
    out.push_back(std::move(h));
  }
  return out;
}

using EzwOp = std::function<EZWElement(const EZWElement&)>;

EzwOp divide(int i, int j, int k, int l) {
  return [=](const EZWElement& e) { return laurent_op(-i, -j, -k, -l, e); };
}
EzwOp then(EzwOp first, EzwOp second) {
  return [=](const EZWElement& e) { return second(first(e)); };
}
EzwOp plus(EzwOp a, EzwOp b, int sign = 1) {
  return [=](const EZWElement& e) { return a(e) + b(e).scale(FieldElement(sign)); };
}

// sum over (op, i) of op applied to Phi_i
DHMHom named(const std::string& name, const std::vector<std::pair<EzwOp, int>>& terms) {
  DHMHom h = single_value(Prime::maximal(), 0, EZWElement());
  h.name = name;
  for (const auto& [op, i] : terms) h.values[static_cast<size_t>(i - 1)] += HullElement(op(EZWElement::omega(0, 0, 0)));
  return h;
}

const std::vector<DHMHom>& dual_basis_cache() {
  static const std::vector<DHMHom> basis = [] {
    std::vector<DHMHom> out;
    const EzwOp id = [](const EZWElement& e) { return e; };
    const EzwOp Xi = divide(1, 0, 0, 0), Yi = divide(0, 1, 0, 0), Zi = divide(0, 0, 1, 0), Wi = divide(0, 0, 0, 1);
    for (int i = 1; i <= kValues; ++i) out.push_back(named("Phi" + std::to_string(i), {{id, i}}));
    out.push_back(named("Phi13", {{Xi, 1}, {Zi, 3}}));
    out.push_back(named("Phi24", {{Xi, 2}, {Zi, 4}}));
    out.push_back(named("Phi35", {{Xi, 3}, {Zi, 5}}));
    out.push_back(named("Phi46", {{Xi, 4}, {Zi, 6}}));
    out.push_back(named("Phi14", {{Yi, 1}, {plus(Wi, Xi, -1), 4}}));
    out.push_back(named("Phi25", {{Yi, 2}, {plus(Wi, Xi), 5}}));
    out.push_back(named("Phi36", {{Yi, 3}, {plus(Wi, Xi), 6}}));
    const EzwOp head = plus(Wi, then(Xi, Xi)), mid = then(Xi, Zi), tail = then(Zi, Zi);
    out.push_back(named("Phi135", {{head, 1}, {mid, 3}, {tail, 5}}));
    out.push_back(named("Phi246", {{head, 2}, {mid, 4}, {tail, 6}}));
    return out;
  }();
  return basis;
}

bool all_pass(const std::vector<std::pair<std::string, bool>>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

// Expresses homomorphisms into E(Z,W) in the named basis.
class DualCoordinates {
 public:
  DualCoordinates() : echelon_(true) {
    for (const DHMHom& phi : dhm_dual_basis()) echelon_.insert(dhm_coords(phi));
    if (echelon_.rank() != static_cast<size_t>(DHMModule::kRank)) throw InvariantViolation("named dual basis is dependent");
  }
  SparseVec express(const DHMHom& phi) const {
    auto c = echelon_.express(dhm_coords(phi));
    if (!c) throw InvariantViolation((phi.name.empty() ? std::string("homomorphism") : phi.name) + " is outside M'");
    return *c;
  }

 private:
  Echelon echelon_;
};

const DualCoordinates& dual_coordinates() {
  static const DualCoordinates coords;
  return coords;
}

// The cochain Phi placed in `slot` of degree k, pushed through delta; returns the image in
// the named basis, slot-major (index slot * 15 + basis position).
SparseVec delta_in_basis(int k, int slot, const DHMHom& phi) {
  std::array<DHMHom, 2> images;
  for (auto& h : images) h = single_value(Prime::maximal(), 0, EZWElement());
  for (int j = 0; j < kValues; ++j) {
    ChainElement c(k);
    c.add(PrimeIndex::maximal(slot), phi.values[static_cast<size_t>(j)]);
    const ChainElement d = delta(k, c);
    for (int s = 0; s < 2; ++s) images[static_cast<size_t>(s)].values[static_cast<size_t>(j)] = d.at(PrimeIndex::maximal(s));
  }
  SparseVec out;
  for (int s = 0; s < 2; ++s)
    for (const auto& [i, c] : dual_coordinates().express(images[static_cast<size_t>(s)]))
      out.emplace(s * DHMModule::kRank + i, c);
  return out;
}

int slots(int k) { return k < 2 ? 0 : (k == 2 ? 1 : 2); }

// Columns of the degree-k differential on the Hom complex, in the named basis.
std::vector<SparseVec> hom_differential(int k) {
  std::vector<SparseVec> out;
  const auto& basis = dhm_dual_basis();
  for (int s = 0; s < slots(k); ++s)
    for (const DHMHom& phi : basis) out.push_back(delta_in_basis(k, s, phi));
  return out;
}

std::string short_name(size_t i) { return dhm_dual_basis()[i].name.substr(3); }

std::string pair_text(const SparseVec& v) {
  std::array<std::string, 2> parts;
  for (const auto& [key, c] : v) {
    const size_t s = static_cast<size_t>(key) / DHMModule::kRank, i = static_cast<size_t>(key) % DHMModule::kRank;
    std::string term = c == FieldElement(1) ? short_name(i) : c.str() + "*" + short_name(i);
    parts[s] += (parts[s].empty() ? "" : "+") + term;
  }
  for (auto& p : parts)
    if (p.empty()) p = "0";
  return "(" + parts[0] + "," + parts[1] + ")";
}

}  // namespace

SparseVec DHMModule::act(Var4 x, const SparseVec& m) const {
  SparseVec out;
  for (const auto& [b, c] : m) axpy(out, c, images[static_cast<size_t>(x)][static_cast<size_t>(b)]);
  return out;
}

SparseVec DHMModule::act(const std::array<int, 4>& exponents, const SparseVec& m) const {
  SparseVec out = m;
  for (size_t k = 0; k < 4; ++k)
    for (int r = 0; r < exponents[k]; ++r) out = act(kVars[k], out);
  return out;
}

const DHMModule& dhm_module() {
  static const DHMModule m = build_module();
  return m;
}

HullElement dhm_value(const DHMHom& phi, int b) {
  if (b < 0 || b >= DHMModule::kRank) throw UnsupportedIndex("basis index " + std::to_string(b));
  const Path p = path_of(b);
  return act(monomial(p.exponents), phi.values[static_cast<size_t>(p.source - 1)]);
}

std::vector<std::pair<std::string, bool>> dhm_conditions(const DHMHom& phi) {
  const DHMModule& m = dhm_module();
  const auto rs = residuals(phi);
  std::vector<std::pair<std::string, bool>> out;
  for (size_t c = 0; c < rs.size(); ++c) {
    const std::string x = kVarNames[c % 4], b = m.labels[c / 4];
    out.emplace_back("Phi(" + x + b + ") = " + x + "Phi(" + b + ")", rs[c].is_zero());
  }
  return out;
}

std::vector<std::pair<std::string, bool>> dhm_displayed_conditions(const DHMHom& phi) {
  auto P = [&](int i) { return phi.values[static_cast<size_t>(i - 1)]; };
  auto on = [&](const std::string& mono, int i) {
    std::array<int, 4> e{};
    for (char ch : mono) e[static_cast<size_t>(std::string("XYZW").find(ch))] += 1;
    return act(monomial(e), P(i));
  };
  std::vector<std::pair<std::string, bool>> out;
  auto zero = [&](const std::string& mono, int i) {
    out.emplace_back(mono + "Phi(w" + std::to_string(i) + ") = 0", on(mono, i).is_zero());
  };
  auto equal = [&](std::vector<std::pair<std::string, int>> chain) {
    std::string name;
    bool ok = true;
    for (const auto& [mono, i] : chain) {
      name += (name.empty() ? "" : " = ") + mono + "Phi(w" + std::to_string(i) + ")";
      ok = ok && on(mono, i) == on(chain.front().first, chain.front().second);
    }
    out.emplace_back(name, ok);
  };
  zero("Z", 1);
  zero("Z", 2);
  zero("W", 3);
  zero("Y", 4);
  zero("Y", 5);
  zero("Y", 6);
  equal({{"X", 1}, {"Z", 3}});
  equal({{"X", 2}, {"Z", 4}});
  equal({{"X", 3}, {"Z", 5}});
  equal({{"Y", 1}, {"W", 4}});
  equal({{"X", 5}, {"Y", 2}, {"W", 5}});
  equal({{"X", 6}, {"Y", 3}, {"W", 6}});
  out.emplace_back("ZPhi(w6) = YPhi(w1) + XPhi(w4)", on("Z", 6) == on("Y", 1) + on("X", 4));
  equal({{"W", 1}, {"XX", 1}, {"XZ", 3}, {"ZZ", 5}});
  equal({{"W", 2}, {"XX", 2}, {"XZ", 4}, {"ZZ", 6}});
  const std::vector<std::pair<std::string, int>> survivors = {{"XX", 1}, {"XZ", 3}, {"ZZ", 5},
                                                              {"XX", 2}, {"XZ", 4}, {"ZZ", 6}};
  for (int i = 1; i <= kValues; ++i) {
    for (const auto& e : monomials_of_degree(2)) {
      const std::string mono = exponent_text(e);
      if (std::find(survivors.begin(), survivors.end(), std::make_pair(mono, i)) == survivors.end()) zero(mono, i);
    }
    for (const auto& e : monomials_of_degree(3)) zero(exponent_text(e), i);
  }
  return out;
}

std::vector<DHMHom> dhm_dual_basis() { return dual_basis_cache(); }

SparseVec dhm_coords(const DHMHom& phi) {
  if (phi.target.kind != Prime::Kind::Maximal) throw BadLocus("coordinates are kept for E(Z,W) only");
  SparseVec out;
  for (size_t j = 0; j < phi.values.size(); ++j) {
    ChainElement holder(2);
    holder.add(PrimeIndex::maximal(0), phi.values[j]);
    for (const auto& [k, c] : monomial_coords(holder)) out.emplace(condition_key(j, k), c);
  }
  return out;
}

long dhm_hom_dimension(const Prime& q, int truncation) {
  if (q.kind == Prime::Kind::Maximal) return static_cast<long>(maximal_solutions(truncation).size());
  return principal_dimension(q, truncation);
}

std::vector<DHMHom> dhm_hom_space(const Prime& q, int truncation) {
  if (q.kind == Prime::Kind::Zero) throw BadLocus("homomorphisms into E(0) are not solved here");
  if (q.kind != Prime::Kind::Maximal) {
    const long lo = principal_dimension(q, truncation), hi = principal_dimension(q, truncation + 1);
    if (lo != hi) throw TruncationTooSmall("Hom(M, E(" + q.str() + ")) changes between truncations");
    if (lo != 0) throw InvariantViolation("nonzero homomorphisms M -> E(" + q.str() + ")");
    return {};
  }
  const std::vector<DHMHom> solved = maximal_solutions(truncation);
  if (solved.size() != maximal_solutions(truncation + 1).size())
    throw TruncationTooSmall("Hom(M, E(Z,W)) changes between truncations");
  Echelon span;
  for (const DHMHom& phi : dhm_dual_basis()) span.insert(dhm_coords(phi));
  for (const DHMHom& phi : solved)
    if (!span.contains(dhm_coords(phi))) throw InvariantViolation("solution outside the span of the named basis");
  if (solved.size() != span.rank()) throw InvariantViolation("named basis is not inside the solved space");
  return dhm_dual_basis();
}

DHMGenerators dhm_generator_report() {
  const auto& basis = dhm_dual_basis();
  Echelon multiples;
  for (const DHMHom& phi : basis)
    for (Var4 x : kVars) {
      DHMHom image = phi;
      for (auto& v : image.values) v = act(variable(x), v);
      multiples.insert(dhm_coords(image));
    }
  DHMGenerators g;
  g.count = static_cast<int>(basis.size() - multiples.rank());
  const std::set<std::string> inner_names = {"Phi1", "Phi2", "Phi3", "Phi4", "Phi5", "Phi6", "Phi13", "Phi24", "Phi35", "Phi46"};
  Echelon inner;
  bool inside = true;
  for (const DHMHom& phi : basis)
    if (inner_names.count(phi.name)) inside = multiples.contains(dhm_coords(phi)) && inner.insert(dhm_coords(phi)) && inside;
  Echelon full = multiples;
  for (const DHMHom& phi : basis)
    if (!inner_names.count(phi.name) && full.insert(dhm_coords(phi))) g.complement.push_back(phi.name);
  g.checks = {{"mM' is spanned by Phi1..Phi6, Phi13, Phi24, Phi35, Phi46", inside && inner.rank() == multiples.rank()},
              {"Phi14, Phi25, Phi36, Phi135, Phi246 complete a basis", g.complement.size() == 5 && full.rank() == basis.size()},
              {"dim M' = 15", basis.size() == static_cast<size_t>(DHMModule::kRank)}};
  return g;
}

int dhm_min_generators() { return dhm_generator_report().count; }

DHMExtReport dhm_ext_report(int i) {
  if (i < 0 || i > 64) throw UnsupportedIndex("Ext degree " + std::to_string(i));
  DHMExtReport r;
  r.degree = i;
  // Hom(M, E(0)) = 0 (M has finite length) and Hom(M, E(f)) = 0, so degrees 0 and 1 carry nothing
  if (i < 2) return r;
  const std::vector<SparseVec> outgoing = hom_differential(i);
  Echelon image;
  for (const SparseVec& v : hom_differential(i - 1)) image.insert(v);
  std::vector<SparseVec> kernel = kernel_basis(outgoing);
  // prefer single-entry representatives, second slot first
  std::vector<SparseVec> candidates;
  Echelon kernel_span;
  for (const SparseVec& v : kernel) kernel_span.insert(v);
  for (int s = slots(i) - 1; s >= 0; --s)
    for (int b = 0; b < DHMModule::kRank; ++b) {
      const SparseVec e = {{static_cast<long>(s * DHMModule::kRank + b), FieldElement(1)}};
      if (kernel_span.contains(e)) candidates.push_back(e);
    }
  candidates.insert(candidates.end(), kernel.begin(), kernel.end());
  for (const SparseVec& v : candidates)
    if (image.insert(v)) r.classes.push_back(pair_text(v));
  r.dimension = static_cast<int>(kernel.size()) - static_cast<int>(image.rank() - r.classes.size());
  if (r.dimension != static_cast<int>(r.classes.size())) throw InvariantViolation("class count mismatch");
  return r;
}

int dhm_ext(int i) { return dhm_ext_report(i).dimension; }

}  // namespace injres
