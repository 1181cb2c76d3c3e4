#include "injres/ring_ops.hpp"

#include <algorithm>

#include "injres/errors.hpp"
#include "injres/ratpoly.hpp"

namespace injres {

std::optional<BivarPoly> try_divide(const BivarPoly& g, const BivarPoly& f) {
  if (f.is_zero()) throw DivisionByZero("exact_divide by zero");
  if (g.is_zero()) return BivarPoly();
  const int df = f.degW();
  const UniPoly lf = f.layer(df);
  std::vector<UniPoly> rem = g.layers();
  std::vector<UniPoly> quo;
  if (g.degW() >= df) quo.resize(static_cast<size_t>(g.degW() - df) + 1);
  for (int k = g.degW(); k >= df; --k) {
    if (rem[static_cast<size_t>(k)].is_zero()) continue;
    auto c = UniPoly::divide_exact(rem[static_cast<size_t>(k)], lf);
    if (!c) return std::nullopt;
    quo[static_cast<size_t>(k - df)] = *c;
    for (int j = 0; j <= df; ++j) rem[static_cast<size_t>(k - df + j)] -= *c * f.layer(j);
  }
  for (const auto& r : rem)
    if (!r.is_zero()) return std::nullopt;
  return BivarPoly(std::move(quo));
}

BivarPoly exact_divide(const BivarPoly& g, const BivarPoly& f) {
  auto q = try_divide(g, f);
  if (!q) throw NotDivisible(f.str() + " does not divide " + g.str());
  return *q;
}

int f_adic_valuation(const BivarPoly& g, const BivarPoly& f) {
  if (g.is_zero()) return kInfiniteValuation;
  if (f.is_constant()) throw InvariantViolation("valuation at a unit");
  int s = 0;
  BivarPoly cur = g;
  while (auto q = try_divide(cur, f)) {
    cur = std::move(*q);
    ++s;
  }
  return s;
}

UniPoly content(const BivarPoly& p, Var main) {
  UniPoly g;
  for (const auto& c : p.coefficients_in(main)) {
    g = UniPoly::gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

namespace {

BivarPoly primitive_part(const BivarPoly& p) {
  if (p.is_zero()) return p;
  UniPoly c = content(p, Var::W);
  if (c.is_constant()) return p;
  return exact_divide(p, BivarPoly::from_uni(c, Var::Z));
}

// lc(b)^(deg a - deg b + 1) * a mod b in kappa[Z][W].
BivarPoly pseudo_remainder(const BivarPoly& a, const BivarPoly& b) {
  const int db = b.degW();
  const UniPoly lb = b.layer(db);
  std::vector<UniPoly> r = a.layers();
  for (int k = a.degW(); k >= db; --k) {
    UniPoly c = r[static_cast<size_t>(k)];
    for (auto& l : r) l = l * lb;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(k - db + j)] -= c * b.layer(j);
    r.resize(static_cast<size_t>(k));
  }
  return BivarPoly(std::move(r));
}

}  // namespace

BivarPoly normalize_prime(const BivarPoly& f) {
  if (f.is_zero()) return f;
  return f.scale(f.lex_lead().inverse());
}

BivarPoly gcd(const BivarPoly& a, const BivarPoly& b) {
  if (a.is_zero()) return normalize_prime(b);
  if (b.is_zero()) return normalize_prime(a);
  UniPoly c = UniPoly::gcd(content(a, Var::W), content(b, Var::W));
  BivarPoly x = primitive_part(a), y = primitive_part(b);
  if (x.degW() < y.degW()) std::swap(x, y);
  while (!y.is_zero() && y.degW() > 0) {
    BivarPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  BivarPoly g = y.is_zero() ? x : BivarPoly(FieldElement(1));
  return normalize_prime(g * BivarPoly::from_uni(c, Var::Z));
}

UniPoly bareiss_determinant(std::vector<std::vector<UniPoly>> m) {
  const size_t n = m.size();
  if (n == 0) return UniPoly(FieldElement(1));
  bool negate = false;
  UniPoly prev(FieldElement(1));
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return {};
      std::swap(m[k], m[piv]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        UniPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = *UniPoly::divide_exact(num, prev);
      }
      m[i][k] = UniPoly();
    }
    prev = m[k][k];
  }
  UniPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

ResultantBezout resultant_bezout(const BivarPoly& u, const BivarPoly& v, Var eliminate) {
  if (u.is_zero() || v.is_zero()) throw DegenerateResultant("zero input");
  const Var keep = eliminate == Var::W ? Var::Z : Var::W;
  auto cu = u.coefficients_in(eliminate);
  auto cv = v.coefficients_in(eliminate);
  const int m = static_cast<int>(cu.size()) - 1, n = static_cast<int>(cv.size()) - 1;
  if (m == 0) return {cu[0], BivarPoly(1), BivarPoly()};
  if (n == 0) return {cv[0], BivarPoly(), BivarPoly(1)};

  // Sylvester matrix, coefficients in descending powers of the eliminated variable.
  const int size = m + n;
  std::vector<std::vector<UniPoly>> syl(static_cast<size_t>(size), std::vector<UniPoly>(static_cast<size_t>(size)));
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= m; ++k) syl[static_cast<size_t>(row)][static_cast<size_t>(row + k)] = cu[static_cast<size_t>(m - k)];
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= n; ++k) syl[static_cast<size_t>(n + row)][static_cast<size_t>(row + k)] = cv[static_cast<size_t>(n - k)];
  UniPoly r = bareiss_determinant(std::move(syl));
  if (r.is_zero()) throw DegenerateResultant("common factor in " + u.str() + ", " + v.str());

  RatPoly s, t;
  RatPoly g = RatPoly::ext_gcd(RatPoly::from_bivar(u, eliminate), RatPoly::from_bivar(v, eliminate), s, t);
  if (g.degree() != 0) throw DegenerateResultant("nontrivial gcd");
  auto scaled = [&](const RatPoly& p) {
    std::vector<UniPoly> cs;
    for (const auto& c : p.coeffs()) {
      auto q = UniPoly::divide_exact(c.num() * r, c.den());
      if (!q) throw InvariantViolation("Bezout coefficient is not polynomial after scaling");
      cs.push_back(*q);
    }
    return BivarPoly::from_coefficients(cs, eliminate);
  };
  ResultantBezout out{r, scaled(s), scaled(t)};
  if (!(out.a * u + out.b * v == BivarPoly::from_uni(r, keep)))
    throw InvariantViolation("Bezout identity failed");
  return out;
}

UniPoly series_inverse_truncated(const UniPoly& q, int bound) {
  if (q.coeff(0).is_zero()) throw NotUnit("series inverse of a non-unit");
  if (bound <= 0) return {};
  std::vector<FieldElement> p(static_cast<size_t>(bound));
  FieldElement inv = q.coeff(0).inverse();
  for (int k = 0; k < bound; ++k) {
    FieldElement acc = k == 0 ? FieldElement(1) : FieldElement(0);
    for (int j = 1; j <= std::min(k, q.degree()); ++j) acc -= q.coeff(j) * p[static_cast<size_t>(k - j)];
    p[static_cast<size_t>(k)] = acc * inv;
  }
  return UniPoly(std::move(p));
}

BivarPoly series_inverse_truncated(const BivarPoly& q, int boundZ, int boundW) {
  if (!q.is_unit_at_origin()) throw NotUnit(q.str() + " vanishes at the origin");
  if (boundZ <= 0 || boundW <= 0) return {};
  const UniPoly s0 = series_inverse_truncated(q.layer(0), boundZ);
  std::vector<UniPoly> p(static_cast<size_t>(boundW));
  p[0] = s0;
  for (int k = 1; k < boundW; ++k) {
    UniPoly acc;
    for (int j = 1; j <= std::min(k, q.degW()); ++j) acc += (q.layer(j) * p[static_cast<size_t>(k - j)]).truncate(boundZ);
    p[static_cast<size_t>(k)] = -(s0 * acc).truncate(boundZ);
  }
  return BivarPoly(std::move(p));
}

std::map<int, UniRat> adic_expand(const BivarPoly& num, const BivarPoly& den, Var v, int order) {
  if (den.is_zero()) throw DivisionByZero("adic_expand with zero denominator");
  std::map<int, UniRat> out;
  if (num.is_zero()) return out;
  auto cn = num.coefficients_in(v);
  auto cd = den.coefficients_in(v);
  int en = 0, ed = 0;
  while (cn[static_cast<size_t>(en)].is_zero()) ++en;
  while (cd[static_cast<size_t>(ed)].is_zero()) ++ed;
  const int val = en - ed;
  if (order < val) return out;
  const int len = order - val + 1;
  const UniRat inv = UniRat(FieldElement(1)) / UniRat(cd[static_cast<size_t>(ed)]);
  std::vector<UniRat> q(static_cast<size_t>(len));
  auto nc = [&](int k) { return k + en < static_cast<int>(cn.size()) ? UniRat(cn[static_cast<size_t>(k + en)]) : UniRat(); };
  auto dc = [&](int k) { return k + ed < static_cast<int>(cd.size()) ? UniRat(cd[static_cast<size_t>(k + ed)]) : UniRat(); };
  for (int k = 0; k < len; ++k) {
    UniRat acc = nc(k);
    for (int j = 1; j <= k && j + ed < static_cast<int>(cd.size()); ++j) acc -= dc(j) * q[static_cast<size_t>(k - j)];
    q[static_cast<size_t>(k)] = acc * inv;
    if (!q[static_cast<size_t>(k)].is_zero()) out.emplace(val + k, q[static_cast<size_t>(k)]);
  }
  return out;
}

namespace {

// Searches lex-monic candidate divisors of total degree <= max_deg; returns true on a proper divisor.
// `exhausted` reports whether every candidate was examined.
bool search_divisor(const BivarPoly& f, int max_deg, long effort, bool& exhausted) {
  std::vector<std::pair<int, int>> monos;  // (degW, degZ), lex order W > Z
  for (int w = 0; w <= max_deg; ++w)
    for (int z = 0; z + w <= max_deg; ++z) monos.emplace_back(w, z);
  std::sort(monos.begin(), monos.end());
  const std::uint32_t p = f.lex_lead().prime();
  long spent = 0;
  exhausted = true;
  for (size_t lead = 1; lead < monos.size(); ++lead) {
    // coefficient alphabet: all of F_p, or small integers over Q
    std::vector<FieldElement> alphabet;
    if (p != 0) {
      for (std::uint32_t c = 0; c < p; ++c) alphabet.push_back(FieldElement(mpq_class(c), p));
    } else {
      exhausted = false;
      for (long c = -3; c <= 3; ++c) alphabet.emplace_back(c);
    }
    std::vector<size_t> digits(lead, 0);
    while (true) {
      if (++spent > effort) {
        exhausted = false;
        return false;
      }
      BivarPoly g = BivarPoly::monomial(1, monos[lead].second, monos[lead].first);
      for (size_t k = 0; k < lead; ++k)
        g += BivarPoly::monomial(alphabet[digits[k]], monos[k].second, monos[k].first);
      if (g.total_degree() < f.total_degree() && try_divide(f, g)) return true;
      size_t k = 0;
      while (k < lead && ++digits[k] == alphabet.size()) digits[k++] = 0;
      if (k == lead) break;
    }
  }
  return false;
}

}  // namespace

Irreducibility verify_irreducible(const BivarPoly& f, long effort_bound) {
  if (f.is_constant()) return Irreducibility::Reducible;
  const int d = f.total_degree();
  if (d == 1) return Irreducibility::Verified;
  if (f.term_count() == 1) return Irreducibility::Reducible;
  if (f.degW() > 0 && !content(f, Var::W).is_constant()) return Irreducibility::Reducible;
  if (f.degZ() > 0 && !content(f, Var::Z).is_constant()) return Irreducibility::Reducible;
  // primitive and linear in one variable
  if (f.degW() == 1 || f.degZ() == 1) return Irreducibility::Verified;
  for (Var v : {Var::W, Var::Z}) {
    BivarPoly df = f.partial(v);
    if (!df.is_zero() && !gcd(f, df).is_constant()) return Irreducibility::Reducible;
  }
  bool exhausted = false;
  if (search_divisor(f, d / 2, effort_bound, exhausted)) return Irreducibility::Reducible;
  return exhausted ? Irreducibility::Verified : Irreducibility::Unverified;
}

}  // namespace injres
