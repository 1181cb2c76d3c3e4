#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace injres {

// An element of Q (prime() == 0) or of F_p. Values built from plain integers
// live in Q and are coerced into F_p the first time they meet an F_p value.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  FieldElement(mpq_class v, std::uint32_t p = 0);

  static FieldElement ratio(long num, long den);

  std::uint32_t prime() const { return prime_; }
  const mpq_class& value() const { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }

  // Reinterpret in F_p (p > 0) or leave as is when p == 0.
  FieldElement in_field(std::uint32_t p) const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  FieldElement inverse() const;
  FieldElement pow(long e) const;

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  std::string str() const;

 private:
  // Common prime of two operands; throws FieldMismatch for two distinct primes.
  static std::uint32_t join(std::uint32_t p, std::uint32_t q);
  void reduce();

  mpq_class value_{0};
  std::uint32_t prime_ = 0;
};

// Coefficient field selection: Q when p == 0, otherwise F_p with p an odd prime > 3.
struct Field {
  std::uint32_t p = 0;

  static Field rationals() { return Field{0}; }
  static Field prime_field(std::uint32_t p);

  FieldElement make(long v) const { return FieldElement(v).in_field(p); }
  FieldElement make(const mpq_class& v) const { return FieldElement(v).in_field(p); }
  FieldElement operator()(const FieldElement& v) const { return v.in_field(p); }
  std::string name() const;
};

bool is_prime(std::uint64_t n);

}  // namespace injres
