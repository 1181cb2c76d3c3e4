#include "injres/linalg.hpp"

#include "injres/errors.hpp"

namespace injres {

void axpy(SparseVec& y, const FieldElement& a, const SparseVec& x) {
  if (a.is_zero()) return;
  for (const auto& [k, v] : x) {
    auto [it, fresh] = y.emplace(k, a * v);
    if (!fresh) {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

SparseVec Echelon::reduce(SparseVec v) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const long key = it->first;
    axpy(v, -it->second, row->second.v);
    it = v.upper_bound(key);
  }
  return v;
}

bool Echelon::insert(const SparseVec& v) {
  Row r{v, {}};
  if (track_) r.combo.emplace(count_, FieldElement(1));
  ++count_;
  auto it = r.v.begin();
  while (it != r.v.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const long key = it->first;
    const FieldElement c = it->second;
    axpy(r.v, -c, row->second.v);
    if (track_) axpy(r.combo, -c, row->second.combo);
    it = r.v.upper_bound(key);
  }
  if (r.v.empty()) return false;
  const FieldElement inv = r.v.begin()->second.inverse();
  for (auto& [k, x] : r.v) x *= inv;
  for (auto& [k, x] : r.combo) x *= inv;
  const long pivot = r.v.begin()->first;
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::optional<SparseVec> Echelon::express(const SparseVec& v) const {
  if (!track_) throw InvariantViolation("express needs a tracking echelon");
  SparseVec rem = v, combo;
  auto it = rem.begin();
  while (it != rem.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) return std::nullopt;
    const long key = it->first;
    const FieldElement c = it->second;
    axpy(rem, -c, row->second.v);
    axpy(combo, c, row->second.combo);
    it = rem.upper_bound(key);
  }
  return combo;
}

std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& columns) {
  Echelon ech(true);
  std::vector<SparseVec> out;
  for (size_t i = 0; i < columns.size(); ++i) {
    // every column is inserted, so insertion index i is column i
    if (auto c = ech.express(columns[i])) {
      SparseVec k = *c;
      for (auto& [j, v] : k) v = -v;
      k.emplace(static_cast<long>(i), FieldElement(1));
      out.push_back(std::move(k));
    }
    ech.insert(columns[i]);
  }
  return out;
}

SparseVec combine(const std::vector<SparseVec>& vectors, const SparseVec& c) {
  SparseVec out;
  for (const auto& [i, v] : c) axpy(out, v, vectors.at(static_cast<size_t>(i)));
  return out;
}

}  // namespace injres
