#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lasg/elem_set.hpp"

namespace lasg {

// A finite groupoid given by its Cayley table. table[i * order + j] is the
// product i.j with i the LEFT operand (row) and j the right operand (column).
// Immutable once constructed.
class Magma {
 public:
  static constexpr std::size_t max_order = ElemSet::max_order;

  // Throws std::invalid_argument if labels are empty, duplicated, or the
  // table has the wrong size or an out-of-range entry.
  Magma(std::vector<std::string> labels, std::vector<ElemId> table);

  // Labels "a", "b", ... (or "x0", "x1", ... past 26 elements).
  static Magma with_default_labels(std::size_t order,
                                   std::vector<ElemId> table);
  static std::vector<std::string> default_labels(std::size_t order);

  std::size_t order() const noexcept { return labels_.size(); }

  ElemId product(ElemId x, ElemId y) const noexcept {
    return table_[index_of(x) * order() + index_of(y)];
  }
  ElemId square(ElemId x) const noexcept { return product(x, x); }

  std::span<const ElemId> table() const noexcept { return table_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(ElemId e) const { return labels_.at(index_of(e)); }
  std::optional<ElemId> find_label(std::string_view label) const;

  ElemSet full_set() const noexcept { return ElemSet::full(order()); }
  ElemSet empty_set() const noexcept { return ElemSet(order()); }

  // aS = { a.s : s in S }.
  const ElemSet& row_image(ElemId a) const noexcept {
    return row_image_[index_of(a)];
  }
  // Sb = { s.b : s in S }.
  const ElemSet& column_image(ElemId b) const noexcept {
    return column_image_[index_of(b)];
  }

  friend bool operator==(const Magma& a, const Magma& b) noexcept {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<ElemId> table_;
  std::vector<ElemSet> row_image_;
  std::vector<ElemSet> column_image_;
};

// { a.b : a in lhs, b in rhs }; empty when either operand is empty.
ElemSet set_product(const Magma& m, const ElemSet& lhs, const ElemSet& rhs);

inline ElemSet full_set(const Magma& m) { return m.full_set(); }

inline ElemId product(const Magma& m, ElemId x, ElemId y) {
  return m.product(x, y);
}

}  // namespace lasg
