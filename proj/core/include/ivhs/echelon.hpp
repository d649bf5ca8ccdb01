#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ivhs/field.hpp"

namespace ivhs {

/// Incremental semi-echelon basis of a subspace of F^dim.
///
/// Each stored vector has a distinct leading index and a unit leading
/// coefficient.  Its tail is kept dense from the lead to its last nonzero
/// when at least a quarter of that range is filled, and as a sparse list
/// otherwise: random Jacobian columns fill in densely, while Fermat-type
/// columns are binomials whose entries lie far apart.
///
/// Not thread-safe: reductions share one scratch accumulator.
template <class Field>
class SemiEchelon {
 public:
  using Value = typename Field::Value;
  using Acc = typename Field::Acc;

  struct Entry {
    std::size_t index;
    Value value;
  };
  using SparseVector = std::vector<Entry>;

  SemiEchelon(Field field, std::size_t dim) : field_(std::move(field)), dim_(dim), pivot_at_(dim, -1), acc_(dim) {}

  const Field& field() const { return field_; }
  std::size_t dimension() const { return dim_; }
  std::size_t rank() const { return pivots_.size(); }
  bool is_pivot(std::size_t i) const { return pivot_at_[i] >= 0; }

  /// Adds v to the span.  Returns true when v was not already in it.
  bool insert(const SparseVector& v) {
    SparseVector unused;
    return sweep(v, /*stop_at_free=*/true, unused);
  }

  /// Canonical representative of v modulo the span: the unique vector in
  /// v + span supported on non-pivot indices.
  SparseVector normal_form(const SparseVector& v) const {
    SparseVector out;
    const_cast<SemiEchelon*>(this)->sweep(v, /*stop_at_free=*/false, out);
    return out;
  }

  bool contains(const SparseVector& v) const { return normal_form(v).empty(); }

 private:
  struct Pivot {
    std::size_t lead;
    std::vector<Value> tail;  // coefficients at lead+1, lead+2, ...
    std::vector<Entry> sparse;  // used instead of tail when it is mostly zero
    std::size_t end = 0;        // one past the last nonzero
  };

  bool sweep(const SparseVector& v, bool stop_at_free, SparseVector& out) {
    if (v.empty()) return false;
    std::size_t lo = dim_, hi = 0;
    for (const auto& e : v) {
      acc_[e.index] += Field::lift(e.value);
      lo = std::min(lo, e.index);
      hi = std::max(hi, e.index + 1);
    }
    int budget = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      Value x = field_.reduce(acc_[i]);
      if (Field::is_zero(x)) {
        Field::clear(acc_[i]);
        continue;
      }
      const std::int32_t pid = pivot_at_[i];
      if (pid >= 0) {
        const Pivot& p = pivots_[static_cast<std::size_t>(pid)];
        Field::clear(acc_[i]);
        if (p.end > i + 1) {
          const Value c = field_.neg(x);
          if (p.sparse.empty()) {
            Field::axpy(&acc_[i + 1], c, p.tail.data(), p.tail.size());
          } else {
            for (const auto& e : p.sparse) Field::axpy(&acc_[e.index], c, &e.value, 1);
          }
          hi = std::max(hi, p.end);
          if constexpr (Field::kLazyBudget > 0) {
            if (++budget >= Field::kLazyBudget) {
              for (std::size_t j = i + 1; j < hi; ++j) acc_[j] = Field::lift(field_.reduce(acc_[j]));
              budget = 0;
            }
          }
        }
        continue;
      }
      if (!stop_at_free) {
        out.push_back({i, std::move(x)});
        Field::clear(acc_[i]);
        continue;
      }
      // New pivot with lead i.
      const Value scale = field_.inv(x);
      Pivot p;
      p.lead = i;
      std::size_t last = i;
      std::vector<Value> tail;
      tail.reserve(hi - i - 1);
      for (std::size_t j = i + 1; j < hi; ++j) {
        Value y = field_.mul(field_.reduce(acc_[j]), scale);
        if (!Field::is_zero(y)) last = j;
        tail.push_back(std::move(y));
        Field::clear(acc_[j]);
      }
      tail.resize(last - i);
      p.end = last + 1;
      std::size_t nonzero = 0;
      for (const auto& y : tail) nonzero += !Field::is_zero(y);
      if (4 * nonzero < tail.size()) {
        for (std::size_t k = 0; k < tail.size(); ++k)
          if (!Field::is_zero(tail[k])) p.sparse.push_back({i + 1 + k, std::move(tail[k])});
      } else {
        p.tail = std::move(tail);
      }
      Field::clear(acc_[i]);
      pivot_at_[i] = static_cast<std::int32_t>(pivots_.size());
      pivots_.push_back(std::move(p));
      return true;
    }
    return false;
  }

  Field field_;
  std::size_t dim_;
  std::vector<std::int32_t> pivot_at_;
  std::vector<Pivot> pivots_;
  std::vector<Acc> acc_;
};

}  // namespace ivhs
