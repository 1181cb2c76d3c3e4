#pragma once

#include <map>

#include "injres/field.hpp"

namespace injres {

// Finitely supported Key -> FieldElement map with no stored zeros.
template <class Key>
class CoeffMap {
 public:
  using Map = std::map<Key, FieldElement>;

  CoeffMap() = default;

  const Map& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  size_t size() const { return coeffs_.size(); }
  FieldElement at(const Key& k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? FieldElement(0) : it->second;
  }

  void add(const Key& k, const FieldElement& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = coeffs_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  CoeffMap scale(const FieldElement& c) const {
    CoeffMap out;
    if (c.is_zero()) return out;
    for (const auto& [k, v] : coeffs_) out.coeffs_.emplace(k, v * c);
    return out;
  }

  CoeffMap operator-() const { return scale(FieldElement(-1)); }
  CoeffMap& operator+=(const CoeffMap& o) {
    for (const auto& [k, v] : o.coeffs_) add(k, v);
    return *this;
  }
  CoeffMap& operator-=(const CoeffMap& o) {
    for (const auto& [k, v] : o.coeffs_) add(k, -v);
    return *this;
  }
  friend CoeffMap operator+(CoeffMap a, const CoeffMap& b) { return a += b; }
  friend CoeffMap operator-(CoeffMap a, const CoeffMap& b) { return a -= b; }
  friend bool operator==(const CoeffMap& a, const CoeffMap& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    auto it = b.coeffs_.begin();
    for (const auto& [k, v] : a.coeffs_) {
      if (!(it->first == k) || it->second != v) return false;
      ++it;
    }
    return true;
  }

 private:
  Map coeffs_;
};

}  // namespace injres
