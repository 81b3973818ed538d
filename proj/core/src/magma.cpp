#include "lasg/magma.hpp"

#include <stdexcept>
#include <unordered_set>

namespace lasg {

Magma::Magma(std::vector<std::string> labels, std::vector<ElemId> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  const std::size_t n = labels_.size();
  if (n == 0) {
    throw std::invalid_argument("magma order must be at least 1");
  }
  if (n > max_order) {
    throw std::invalid_argument("magma order exceeds " +
                                std::to_string(max_order));
  }
  if (table_.size() != n * n) {
    throw std::invalid_argument("table must have order^2 entries");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) {
      throw std::invalid_argument("labels must be non-empty");
    }
    if (!seen.insert(l).second) {
      throw std::invalid_argument("duplicate label '" + l + "'");
    }
  }
  for (ElemId v : table_) {
    if (index_of(v) >= n) {
      throw std::invalid_argument("table entry out of range");
    }
  }

  row_image_.assign(n, ElemSet(n));
  column_image_.assign(n, ElemSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ElemId v = table_[i * n + j];
      row_image_[i].insert(v);
      column_image_[j].insert(v);
    }
  }
}

std::vector<std::string> Magma::default_labels(std::size_t order) {
  std::vector<std::string> labels;
  labels.reserve(order);
  for (std::size_t i = 0; i < order; ++i) {
    if (order <= 26) {
      labels.emplace_back(1, static_cast<char>('a' + i));
    } else {
      labels.push_back("x" + std::to_string(i));
    }
  }
  return labels;
}

Magma Magma::with_default_labels(std::size_t order, std::vector<ElemId> table) {
  return Magma(default_labels(order), std::move(table));
}

std::optional<ElemId> Magma::find_label(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) {
      return elem(i);
    }
  }
  return std::nullopt;
}

ElemSet set_product(const Magma& m, const ElemSet& lhs, const ElemSet& rhs) {
  ElemSet out = m.empty_set();
  if (lhs.empty() || rhs.empty()) {
    return out;
  }
  if (rhs.is_full()) {
    for (ElemId a : lhs) {
      out |= m.row_image(a);
    }
    return out;
  }
  if (lhs.is_full()) {
    for (ElemId b : rhs) {
      out |= m.column_image(b);
    }
    return out;
  }
  for (ElemId a : lhs) {
    for (ElemId b : rhs) {
      out.insert(m.product(a, b));
    }
  }
  return out;
}

}  // namespace lasg
