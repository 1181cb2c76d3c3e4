#include "injres/window.hpp"

#include "injres/errors.hpp"

namespace injres {

namespace {

constexpr long kExpSpan = 1024;
constexpr long kExpOffset = 512;
constexpr long kDegreeSpan = 128;

void add_to(SparseVec& v, long key, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = v.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

void add_e0(SparseVec& out, Slot slot, const E0Element& e) {
  for (const auto& [n, phi] : e.parts()) {
    const FactoredDenominator& den = phi.den();
    for (const auto& [f, mult] : den.factors())
      if (!(f == BivarPoly::Z()) && !(f == BivarPoly::W()))
        throw NotApplicable("denominator factor " + f.str() + " has no monomial coordinates");
    if (!den.unit().is_constant()) throw NotApplicable("non-constant unit " + den.unit().str());
    const FieldElement u = den.unit().const_term();
    const int a0 = den.multiplicity(BivarPoly::Z()), b0 = den.multiplicity(BivarPoly::W());
    phi.num().for_each_term([&](int i, int j, const FieldElement& c) {
      add_to(out, encode({slot, n, i - a0, j - b0}), c / u);
    });
  }
}

void add_axis(SparseVec& out, Slot slot, const EAxisElement& e) {
  for (const auto& [n, expansion] : e.parts())
    for (const auto& [m, c] : expansion) {
      const auto mono = c.as_monomial();
      if (!mono) throw NotApplicable("coefficient " + c.str(e.axis() == Var::Z ? 'W' : 'Z') + " is not a monomial");
      const MonomialKey k = e.axis() == Var::Z ? MonomialKey{slot, n, m, mono->second} : MonomialKey{slot, n, mono->second, m};
      add_to(out, encode(k), mono->first);
    }
}

void add_ezw(SparseVec& out, Slot slot, const EZWElement& e) {
  for (const auto& [k, c] : e.coeffs().coeffs()) add_to(out, encode({slot, k[0], k[1], k[2]}), c);
}

std::vector<SparseVec> coords_of(const std::vector<ChainElement>& xs) {
  std::vector<SparseVec> out;
  out.reserve(xs.size());
  for (const ChainElement& x : xs) out.push_back(monomial_coords(x));
  return out;
}

std::vector<SparseVec> delta_coords(int degree, const std::vector<ChainElement>& xs) {
  std::vector<SparseVec> out;
  out.reserve(xs.size());
  for (const ChainElement& x : xs) out.push_back(monomial_coords(delta(degree, x)));
  return out;
}

}  // namespace

long encode(const MonomialKey& k) {
  if (k.n < 0 || k.n >= kDegreeSpan || k.a < -kExpOffset || k.a >= kExpSpan - kExpOffset || k.b < -kExpOffset ||
      k.b >= kExpSpan - kExpOffset)
    throw NotApplicable("monomial key out of the coordinate range");
  return ((static_cast<long>(k.slot) * kDegreeSpan + k.n) * kExpSpan + (k.a + kExpOffset)) * kExpSpan + (k.b + kExpOffset);
}

MonomialKey decode(long key) {
  MonomialKey k;
  k.b = static_cast<int>(key % kExpSpan - kExpOffset);
  key /= kExpSpan;
  k.a = static_cast<int>(key % kExpSpan - kExpOffset);
  key /= kExpSpan;
  k.n = static_cast<int>(key % kDegreeSpan);
  k.slot = static_cast<Slot>(key / kDegreeSpan);
  return k;
}

Slot slot_of(const PrimeIndex& i) {
  switch (i.prime.kind) {
    case Prime::Kind::Zero:
      return Slot::Zero;
    case Prime::Kind::Z:
      return Slot::Z;
    case Prime::Kind::W:
      return Slot::W;
    case Prime::Kind::Maximal:
      return i.copy == 0 ? Slot::Max0 : Slot::Max1;
    case Prime::Kind::Irr:
      break;
  }
  throw NotApplicable("E(" + i.prime.str() + ") has no monomial coordinates");
}

PrimeIndex index_of(Slot s) {
  switch (s) {
    case Slot::Zero:
      return PrimeIndex::zero();
    case Slot::Z:
      return PrimeIndex::axis(Var::Z);
    case Slot::W:
      return PrimeIndex::axis(Var::W);
    case Slot::Max0:
      return PrimeIndex::maximal(0);
    case Slot::Max1:
      return PrimeIndex::maximal(1);
  }
  throw InvariantViolation("unknown slot");
}

SparseVec monomial_coords(const ChainElement& e) {
  SparseVec out;
  for (const auto& [i, x] : e.components()) {
    const Slot slot = slot_of(i);
    const auto& p = x.payload();
    if (const auto* e0 = std::get_if<E0Element>(&p)) add_e0(out, slot, *e0);
    else if (const auto* ax = std::get_if<EAxisElement>(&p)) add_axis(out, slot, *ax);
    else if (const auto* ezw = std::get_if<EZWElement>(&p)) add_ezw(out, slot, *ezw);
    else throw NotApplicable("E(f) component");
  }
  return out;
}

SparseVec monomial_coords(const EZWElement& e, Slot slot) {
  SparseVec out;
  add_ezw(out, slot, e);
  return out;
}

HullElement monomial_hull(const MonomialKey& k, const FieldElement& c) {
  switch (k.slot) {
    case Slot::Zero:
      return E0Element::omega(k.n, RationalFunction::monomial(c, k.a, k.b));
    case Slot::Z:
      return EAxisElement::monomial(Var::Z, k.n, k.a, UniRat::monomial(c, k.b));
    case Slot::W:
      return EAxisElement::monomial(Var::W, k.n, k.b, UniRat::monomial(c, k.a));
    case Slot::Max0:
    case Slot::Max1:
      return EZWElement::omega(k.n, k.a, k.b, c);
  }
  throw InvariantViolation("unknown slot");
}

ChainElement chain_from_coords(int degree, const SparseVec& v) {
  ChainElement out(degree);
  for (const auto& [key, c] : v) {
    const MonomialKey k = decode(key);
    out.add(index_of(k.slot), monomial_hull(k, c));
  }
  return out;
}

std::vector<ChainElement> socle_box(int degree, int T) {
  std::vector<ChainElement> out;
  auto put = [&](Slot slot, int a_lo, int a_hi, int b_lo, int b_hi) {
    for (int a = a_lo; a <= a_hi; ++a)
      for (int b = b_lo; b <= b_hi; ++b) {
        ChainElement c(degree);
        c.add(index_of(slot), monomial_hull({slot, 0, a, b}));
        if (!c.is_zero()) out.push_back(std::move(c));
      }
  };
  if (degree <= 1) put(Slot::Zero, -T, T, -T, T);
  if (degree == 1 || degree == 2) {
    put(Slot::Z, -T, 0, -T, T);
    put(Slot::W, -T, T, -T, 0);
  }
  if (degree >= 2) put(Slot::Max0, -T, 0, -T, 0);
  if (degree >= 3) put(Slot::Max1, -T, 0, -T, 0);
  return out;
}

std::vector<EZWElement> ezw_box(int n_max, int lo, int hi) {
  std::vector<EZWElement> out;
  for (int n = 0; n <= n_max; ++n)
    for (int s = lo; s <= hi; ++s)
      for (int t = lo; t <= hi; ++t)
        if (EZWElement::valid(n, s, t)) out.push_back(EZWElement::omega(n, s, t));
  return out;
}

TruncatedCohomology truncated_cohomology(const std::vector<SparseVec>& window, const std::vector<SparseVec>& outgoing,
                                         const std::vector<SparseVec>& incoming) {
  TruncatedCohomology out;
  for (const SparseVec& k : kernel_basis(outgoing)) out.kernel.push_back(combine(window, k));
  Echelon boundaries;
  for (const SparseVec& v : incoming) boundaries.insert(v);
  for (const SparseVec& k : out.kernel)
    if (boundaries.insert(k)) out.classes.push_back(k);
  return out;
}

TruncatedCohomology socle_cohomology(int degree, int T) {
  const std::vector<ChainElement> window = socle_box(degree, T);
  std::vector<SparseVec> incoming;
  if (degree > 0) incoming = delta_coords(degree - 1, socle_box(degree - 1, T + 1));
  return truncated_cohomology(coords_of(window), delta_coords(degree, window), incoming);
}

bool is_socle_coboundary(const ChainElement& e, int T) {
  const SparseVec target = monomial_coords(e);
  if (target.empty()) return true;
  if (e.degree() == 0) return false;
  Echelon image;
  for (const SparseVec& v : delta_coords(e.degree() - 1, socle_box(e.degree() - 1, T))) image.insert(v);
  return image.contains(target);
}

}  // namespace injres
