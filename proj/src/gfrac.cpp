#include "injres/gfrac.hpp"

#include <climits>

#include "injres/errors.hpp"
#include "injres/ring_ops.hpp"

namespace injres {

namespace {

constexpr int kUnbounded = INT_MAX / 4;

Var other(Var v) { return v == Var::Z ? Var::W : Var::Z; }

// k when p = c * x^k for the variable x, otherwise -1.
int pure_power(const BivarPoly& p, Var x) {
  if (p.term_count() != 1) return -1;
  int k = -1;
  p.for_each_term([&](int z, int w, const FieldElement&) {
    if (x == Var::Z && w == 0) k = z;
    if (x == Var::W && z == 0) k = w;
  });
  return k;
}

BivarPoly pow_truncated(const BivarPoly& p, int e, int boundZ, int boundW) {
  BivarPoly result(1), base = p.truncate(boundZ, boundW);
  while (e > 0) {
    if (e & 1) result = BivarPoly::mul_truncated(result, base, boundZ, boundW);
    e >>= 1;
    if (e) base = BivarPoly::mul_truncated(base, base, boundZ, boundW);
  }
  return result;
}

// keep^a * unit(keep) = A u + B v, with unit(0) != 0.
struct PowerRelation {
  int a = 0;
  BivarPoly A, B;
  UniPoly unit;
};

// u = c * x^b: the identity v0^b = B v + (-1)^b w^b x^b with v = v0 + x w.
PowerRelation relation_against_pure_power(const BivarPoly& u, int b, const BivarPoly& v, Var x) {
  const Var keep = other(x);
  const UniPoly v0 = v.at_zero(x);
  if (v0.is_zero()) throw NotSystemOfParameters("denominators share a factor through the origin");
  const BivarPoly v0b = BivarPoly::from_uni(v0, keep);
  const BivarPoly w = x == Var::W ? (v - v0b).unshift(0, 1) : (v - v0b).unshift(1, 0);
  const BivarPoly xw = x == Var::W ? w.shift(0, 1) : w.shift(1, 0);
  BivarPoly B;
  BivarPoly term = BivarPoly(1);  // (-x w)^i
  for (int i = 0; i < b; ++i) {
    B += v0b.pow(b - 1 - i) * term;
    term = term * (-xw);
  }
  const FieldElement c = u.lex_lead();
  BivarPoly A = w.pow(b).scale((b % 2 == 0 ? FieldElement(1) : FieldElement(-1)) / c);
  const int ord = v0.order();
  return {ord * b, std::move(A), std::move(B), v0.unshift(ord).pow(b)};
}

PowerRelation power_relation(const BivarPoly& u, const BivarPoly& v, Var keep) {
  const Var x = other(keep);
  if (int b = pure_power(u, x); b > 0) return relation_against_pure_power(u, b, v, x);
  if (int b = pure_power(v, x); b > 0) {
    PowerRelation r = relation_against_pure_power(v, b, u, x);
    std::swap(r.A, r.B);
    return r;
  }
  ResultantBezout rb;
  try {
    rb = resultant_bezout(u, v, x);
  } catch (const DegenerateResultant& e) {
    throw NotSystemOfParameters(e.what());
  }
  const int a = rb.r.order();
  return {a, std::move(rb.a), std::move(rb.b), rb.r.unshift(a)};
}

}  // namespace

std::string to_string(const H2Canonical& c) {
  std::string out = "{";
  for (const auto& [k, v] : c.coeffs()) {
    if (out.size() > 1) out += ", ";
    out += "(" + std::to_string(k.first) + "," + std::to_string(k.second) + "): " + v.str();
  }
  return out + "}";
}

std::string to_string(const H4Canonical& c) {
  std::string out = "{";
  for (const auto& [k, v] : c.coeffs()) {
    if (out.size() > 1) out += ", ";
    out += "(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) + "," +
           std::to_string(k[3]) + "): " + v.str();
  }
  return out + "}";
}

H2Canonical reduce_h2(const LocalFraction& num, const Denominator& d1, const Denominator& d2) {
  if (num.is_zero() || d1.exponent <= 0 || d2.exponent <= 0) return {};
  if (d1.base.is_zero() || d2.base.is_zero()) throw NotSystemOfParameters("zero denominator");
  if (d1.base.is_unit_at_origin() || d2.base.is_unit_at_origin()) return {};
  BivarPoly N = num.num(), D = num.den();
  if (!D.is_unit_at_origin()) throw BadLocus("numerator denominator vanishes at the origin");

  // A pure-power denominator x^b lets the other data be reduced modulo x^b before any large power is formed.
  BivarPoly u, v;
  bool reduced = false;
  for (Var x : {Var::Z, Var::W}) {
    for (int side = 0; side < 2 && !reduced; ++side) {
      const Denominator& pivot = side == 0 ? d1 : d2;
      const Denominator& partner = side == 0 ? d2 : d1;
      const int k = pure_power(pivot.base, x);
      if (k <= 0) continue;
      const int b = k * pivot.exponent;
      const int bz = x == Var::Z ? b : kUnbounded, bw = x == Var::W ? b : kUnbounded;
      BivarPoly rest = pow_truncated(partner.base, partner.exponent, bz, bw);
      if (rest.is_zero() || rest.at_zero(x).is_zero())
        throw NotSystemOfParameters("denominators share a factor through the origin");
      if (rest.is_unit_at_origin()) return {};
      (side == 0 ? u : v) = pivot.base.pow(pivot.exponent);
      (side == 0 ? v : u) = std::move(rest);
      N = N.truncate(bz, bw);
      reduced = true;
    }
  }
  if (!reduced) {
    u = d1.base.pow(d1.exponent);
    v = d2.base.pow(d2.exponent);
    const BivarPoly g = gcd(u, v);
    if (!g.is_constant()) {
      if (!g.is_unit_at_origin()) throw NotSystemOfParameters("common factor " + g.str());
      u = exact_divide(u, g);
      v = exact_divide(v, g);
      D = D * g * g;
    }
  }
  if (N.is_zero()) return {};

  const PowerRelation zr = power_relation(u, v, Var::Z);
  const PowerRelation wr = power_relation(u, v, Var::W);
  const int a = zr.a, b = wr.a;
  if (a <= 0 || b <= 0) return {};

  // [N/D / u, v] = [N det / (D eZ eW) / Z^a, W^b]
  const BivarPoly det = BivarPoly::mul_truncated(zr.A, wr.B, a, b) - BivarPoly::mul_truncated(zr.B, wr.A, a, b);
  BivarPoly P = BivarPoly::mul_truncated(N.truncate(a, b), det, a, b);
  const BivarPoly U = BivarPoly::mul_truncated(
      BivarPoly::mul_truncated(D, BivarPoly::from_uni(zr.unit, Var::Z), a, b), BivarPoly::from_uni(wr.unit, Var::W),
      a, b);
  P = BivarPoly::mul_truncated(P, series_inverse_truncated(U, a, b), a, b);

  H2Canonical out;
  P.for_each_term([&](int c, int d, const FieldElement& x) { out.add({a - c, b - d}, x); });
  return out;
}

H2Canonical reduce_h2(const GeneralizedFraction& gf) {
  if (gf.denominators.size() != 2) throw NotSystemOfParameters("expected two denominators");
  return reduce_h2(gf.numerator, gf.denominators[0], gf.denominators[1]);
}

GeneralizedFraction apply_transformation(const GeneralizedFraction& gf, const TransformMatrix& r,
                                         const std::array<BivarPoly, 2>& target) {
  if (gf.denominators.size() != 2) throw MatrixMismatch("expected two denominators");
  const std::array<LocalFraction, 2> x = {LocalFraction(gf.denominators[0].base.pow(gf.denominators[0].exponent)),
                                          LocalFraction(gf.denominators[1].base.pow(gf.denominators[1].exponent))};
  for (int i = 0; i < 2; ++i) {
    if (!(r[i][0] * x[0] + r[i][1] * x[1] == LocalFraction(target[static_cast<size_t>(i)])))
      throw MatrixMismatch("row " + std::to_string(i + 1) + " does not produce " + target[static_cast<size_t>(i)].str());
  }
  const LocalFraction det = r[0][0] * r[1][1] - r[0][1] * r[1][0];
  return {det * gf.numerator, {{target[0], 1}, {target[1], 1}}};
}

H1Class h1_class(const BivarPoly& g, const BivarPoly& h, const BivarPoly& f, int s) {
  if (h.is_zero()) throw BadDenominator("zero h");
  const BivarPoly fn = normalize_prime(f);
  if (try_divide(h, fn)) throw BadDenominator(fn.str() + " divides " + h.str());
  // fn = c f, so g / (h f^s) = c^s g / (h fn^s)
  const FieldElement c = fn.lex_lead() / f.lex_lead();
  return {fn, g.scale(c.pow(std::max(s, 0))), h, s};
}

bool h1_is_zero(const H1Class& c) { return c.s <= 0 || c.g.is_zero() || f_adic_valuation(c.g, c.f) >= c.s; }

bool h1_equal(const H1Class& a, const H1Class& b) {
  const int m = std::max({a.s, b.s, 0});
  const BivarPoly diff = a.g * b.h * a.f.pow(m - std::max(a.s, 0)) - b.g * a.h * a.f.pow(m - std::max(b.s, 0));
  return diff.is_zero() || f_adic_valuation(diff, a.f) >= m;
}

H1Class h1_add(const H1Class& a, const H1Class& b) {
  if (!(a.f == b.f)) throw InvariantViolation("H1 classes at different primes");
  if (h1_is_zero(a)) return b;
  if (h1_is_zero(b)) return a;
  const int m = std::max(a.s, b.s);
  if (a.h == b.h) return {a.f, a.g * a.f.pow(m - a.s) + b.g * a.f.pow(m - b.s), a.h, m};
  return {a.f, a.g * b.h * a.f.pow(m - a.s) + b.g * a.h * a.f.pow(m - b.s), a.h * b.h, m};
}

H1Class h1_scale(const H1Class& a, const FieldElement& c) { return {a.f, a.g.scale(c), a.h, a.s}; }

namespace {

BivarPoly binomial(int n, int k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return BivarPoly(FieldElement(mpq_class(c)));
}

BivarPoly pow_mod_w(const BivarPoly& p, int e, int t) { return pow_truncated(p, e, kUnbounded, t); }

struct Split {
  BivarPoly f0;  // in kappa[Z], f0(0) != 0
  int u = 0;
  BivarPoly f1;  // f1(Z, 0) != 0
  int v = 0;
};

struct Partial {
  BivarPoly num;
  BivarPoly den;  // a power of f0
  int ell = 0;
};

// The induction on ceil(t / v); all numerators are kept modulo W^t, which does not change the class.
Partial rewrite_step(const BivarPoly& f, const Split& sp, int s, int t) {
  const int q = s / sp.u, r = s % sp.u;
  const BivarPoly zur = BivarPoly::monomial(1, sp.u - r, 0);
  if (t <= sp.v) return {(sp.f0.pow(q + 1) * zur).truncate(kUnbounded, t), BivarPoly(1), q + 1};

  const int n = (t + sp.v - 1) / sp.v - 1;
  const BivarPoly a0 = sp.f0 * BivarPoly::monomial(1, sp.u, 0);   // f0 Z^u
  const BivarPoly a1 = -(sp.f1 * BivarPoly::monomial(1, 0, sp.v));  // -f1 W^v
  BivarPoly F;
  for (int i = 0; i < n; ++i) F += BivarPoly::mul_truncated(pow_mod_w(a0, i, t), pow_mod_w(a1, n - i - 1, t), kUnbounded, t);
  const BivarPoly a1F = BivarPoly::mul_truncated(a1, F, kUnbounded, t);
  BivarPoly G;
  for (int j = 0; j <= q; ++j)
    G += BivarPoly::mul_truncated(binomial(q + 1, j) * pow_mod_w(a0, n * j, t), pow_mod_w(a1F, q - j, t), kUnbounded, t);

  const Partial inner = rewrite_step(f, sp, sp.u * (n + 1) * (q + 1), t - sp.v);
  const BivarPoly f0_pow = sp.f0.pow(n * (q + 1));
  // g = f^l0 f0^(q+1) Z^(u-r) + f^(q+1) g0 f0^(-n(q+1)) Z^(u-r) W^v f1 F G, over the common denominator
  BivarPoly first = BivarPoly::mul_truncated(pow_mod_w(f, inner.ell, t), sp.f0.pow(q + 1) * zur * inner.den * f0_pow,
                                             kUnbounded, t);
  BivarPoly second = BivarPoly::mul_truncated(pow_mod_w(f, q + 1, t), inner.num, kUnbounded, t);
  second = BivarPoly::mul_truncated(second, (zur * sp.f1).shift(0, sp.v), kUnbounded, t);
  second = BivarPoly::mul_truncated(second, BivarPoly::mul_truncated(F, G, kUnbounded, t), kUnbounded, t);
  return {first + second, inner.den * f0_pow, inner.ell + q + 1};
}

}  // namespace

RewriteResult lemma_onto_rewrite(const BivarPoly& f, int s, int t) {
  if (s < 1 || t < 1) throw NotApplicable("s and t must be positive");
  if (pure_power(f, Var::W) == 1) throw NotApplicable("f is W up to a unit");
  if (pure_power(f, Var::Z) == 1) {
    // [c^s / W^t, (cZ)^s] = [1 / W^t, Z^s]
    return {LocalFraction(BivarPoly(f.lex_lead().pow(s))), s};
  }
  const UniPoly low = f.at_zero(Var::W);  // f(Z, 0) = f0 Z^u
  if (low.is_zero()) throw NotApplicable("W divides f");
  Split sp;
  sp.u = low.order();
  if (sp.u == 0) throw NotApplicable("f does not vanish at the origin");
  sp.f0 = BivarPoly::from_uni(low.unshift(sp.u), Var::Z);
  const BivarPoly rest = f - BivarPoly::from_uni(low, Var::Z);
  if (rest.is_zero()) throw NotApplicable("f lies in kappa[Z] but is not Z");
  sp.v = rest.monomial_valuation(Var::W);
  sp.f1 = rest.unshift(0, sp.v);
  Partial res = rewrite_step(f, sp, s, t);
  return {LocalFraction(res.num, res.den), res.ell};
}

H4Canonical h4_reduce(const LocalFraction& num, const Denominator& d1, const Denominator& d2, int x_exp, int y_exp) {
  H4Canonical out;
  if (x_exp <= 0 || y_exp <= 0) return out;
  const H2Canonical base = reduce_h2(num, d1, d2);
  for (const auto& [k, c] : base.coeffs()) out.add({k.first, k.second, x_exp, y_exp}, c);
  return out;
}

}  // namespace injres
