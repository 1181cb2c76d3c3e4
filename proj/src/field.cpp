#include "injres/field.hpp"

#include "injres/errors.hpp"

namespace injres {

namespace {

mpz_class residue(const mpq_class& q, std::uint32_t p) {
  mpz_class mod(p);
  mpz_class den = q.get_den() % mod;
  if (den == 0) throw DivisionByZero("denominator vanishes modulo " + std::to_string(p));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  mpz_class r = (q.get_num() % mod) * inv % mod;
  if (r < 0) r += mod;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldElement::FieldElement(mpq_class v, std::uint32_t p) : value_(std::move(v)), prime_(p) {
  value_.canonicalize();
  reduce();
}

FieldElement FieldElement::ratio(long num, long den) {
  if (den == 0) throw DivisionByZero("ratio with zero denominator");
  return FieldElement(mpq_class(num, den));
}

void FieldElement::reduce() {
  if (prime_ == 0) return;
  if (prime_ == 2) throw UnsupportedCharacteristic("characteristic 2");
  value_ = mpq_class(residue(value_, prime_));
}

FieldElement FieldElement::in_field(std::uint32_t p) const {
  if (p == prime_) return *this;
  if (prime_ != 0) throw FieldMismatch("cannot move F_" + std::to_string(prime_) + " value to another field");
  return FieldElement(value_, p);
}

std::uint32_t FieldElement::join(std::uint32_t p, std::uint32_t q) {
  if (p == q || q == 0) return p;
  if (p == 0) return q;
  throw FieldMismatch("F_" + std::to_string(p) + " vs F_" + std::to_string(q));
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  r.value_ = -r.value_;
  r.reduce();
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  std::uint32_t p = join(prime_, o.prime_);
  if (p != prime_) *this = in_field(p);
  if (p != o.prime_) {
    value_ += o.in_field(p).value_;
  } else {
    value_ += o.value_;
  }
  reduce();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  std::uint32_t p = join(prime_, o.prime_);
  if (p != prime_) *this = in_field(p);
  if (p != o.prime_) {
    value_ *= o.in_field(p).value_;
  } else {
    value_ *= o.value_;
  }
  reduce();
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (prime_ == 0) return FieldElement(1 / value_);
  mpz_class inv;
  mpz_class v = value_.get_num();
  mpz_class mod(prime_);
  mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
  return FieldElement(mpq_class(inv), prime_);
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  std::uint32_t p = join(prime_, o.prime_);
  return *this *= o.in_field(p).inverse();
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement result = FieldElement(1).in_field(prime_);
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.prime_ == b.prime_) return a.value_ == b.value_;
  std::uint32_t p = FieldElement::join(a.prime_, b.prime_);
  return a.in_field(p).value_ == b.in_field(p).value_;
}

std::string FieldElement::str() const { return value_.get_str(); }

Field Field::prime_field(std::uint32_t p) {
  if (p == 2 || p == 3) throw UnsupportedCharacteristic("characteristic " + std::to_string(p));
  if (!is_prime(p)) throw UnsupportedCharacteristic(std::to_string(p) + " is not prime");
  return Field{p};
}

std::string Field::name() const { return p == 0 ? "Q" : "F_" + std::to_string(p); }

}  // namespace injres
