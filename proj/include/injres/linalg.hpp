#pragma once

#include <map>
#include <optional>
#include <vector>

#include "injres/field.hpp"

namespace injres {

using SparseVec = std::map<long, FieldElement>;

// y += a x
void axpy(SparseVec& y, const FieldElement& a, const SparseVec& x);

// Incremental row echelon basis of a span. Each stored row has pivot coefficient 1 at its smallest column.
// With tracking on, every row remembers its combination of the inserted vectors (by insertion index).
class Echelon {
 public:
  explicit Echelon(bool track = false) : track_(track) {}

  // Adds v to the span; true when v was independent.
  bool insert(const SparseVec& v);
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  // c with v = sum_j c_j * inserted_j, when v lies in the span. Requires tracking.
  std::optional<SparseVec> express(const SparseVec& v) const;

  size_t rank() const { return rows_.size(); }
  long inserted() const { return count_; }

 private:
  struct Row {
    SparseVec v;
    SparseVec combo;
  };
  std::map<long, Row> rows_;
  bool track_;
  long count_ = 0;
};

// Basis of {c : sum_i c_i columns_i = 0}, each vector keyed by column index.
std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& columns);
// sum_i c_i vectors_i
SparseVec combine(const std::vector<SparseVec>& vectors, const SparseVec& c);

// Rank of sparse rows over any field-like scalar S (FieldElement, UniRat).
template <class S>
size_t sparse_rank(std::vector<std::map<long, S>> rows) {
  std::map<long, std::map<long, S>> pivots;
  size_t rank = 0;
  for (auto& row : rows) {
    while (!row.empty()) {
      auto p = pivots.find(row.begin()->first);
      if (p == pivots.end()) break;
      const S c = row.begin()->second;
      for (const auto& [k, v] : p->second) {
        auto [it, fresh] = row.emplace(k, -(c * v));
        if (!fresh) {
          it->second = it->second - c * v;
          if (it->second.is_zero()) row.erase(it);
        }
      }
    }
    if (row.empty()) continue;
    const S inv = S(FieldElement(1)) / row.begin()->second;
    for (auto& [k, v] : row) v = v * inv;
    const long key = row.begin()->first;
    pivots.emplace(key, std::move(row));
    ++rank;
  }
  return rank;
}

}  // namespace injres
