#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "lasg/magma.hpp"

namespace lasg {

enum class ModelFilter {
  HasLeftIdentity,
  IntraRegular,
  LeftInvertible,   // left identity present, every element left invertible
  RightInvertible,  // left identity present, every element right invertible
  NotIntraRegular,
};

// CLI spellings: has-left-identity, intra-regular, left-invertible,
// right-invertible, not-intra-regular.
std::string_view filter_name(ModelFilter f) noexcept;
std::optional<ModelFilter> parse_filter(std::string_view name) noexcept;

bool passes_filter(const Magma& m, ModelFilter f);

inline constexpr std::size_t max_enumeration_order = 5;
inline constexpr std::size_t max_canonical_order = 8;

struct SearchConfig {
  std::size_t order = 1;
  bool up_to_iso = false;
  std::vector<ModelFilter> filters;
  // Worker threads; the first table row is partitioned across them. Output
  // order does not depend on this value.
  unsigned workers = 1;
};

// Row-major flattening of the lexicographically least relabeled table.
struct CanonicalForm {
  std::size_t order = 0;
  std::vector<ElemId> cells;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    if (auto c = a.order <=> b.order; c != 0) return c;
    return a.cells <=> b.cells;
  }
};

// Throws OrderTooLarge above max_canonical_order.
CanonicalForm canonical_form(const Magma& m);
bool is_isomorphic(const Magma& a, const Magma& b);

// Applies perm (old index -> new index) to the table and labels positions:
// the result's product perm(i).perm(j) = perm(i.j). Labels are taken as the
// default labels of the result order.
Magma relabel(const Magma& m, const std::vector<std::size_t>& perm);

using ModelVisitor = std::function<void(const Magma&)>;

// Visits every LA-semigroup of cfg.order passing all filters, in ascending
// row-major table order (which is ascending canonical form when up_to_iso,
// since only canonical tables are emitted then). Returns the count. Throws
// OrderTooLarge for orders above max_enumeration_order,
// std::invalid_argument for order 0.
std::size_t enumerate_models(const SearchConfig& cfg,
                             const ModelVisitor& visit);

std::vector<Magma> collect_models(const SearchConfig& cfg);

// First model (in enumeration order) accepted by pred; stops the search
// there. cfg.workers is ignored.
std::optional<Magma> find_model(
    const SearchConfig& cfg, const std::function<bool(const Magma&)>& pred);

}  // namespace lasg
