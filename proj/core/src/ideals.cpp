#include "lasg/ideals.hpp"

#include <stdexcept>

#include "lasg/errors.hpp"

namespace lasg {

std::string_view kind_name(IdealKind k) noexcept {
  switch (k) {
    case IdealKind::Subsemigroup: return "sub";
    case IdealKind::Left: return "left";
    case IdealKind::Right: return "right";
    case IdealKind::TwoSided: return "two-sided";
    case IdealKind::Bi: return "bi";
    case IdealKind::GeneralizedBi: return "gbi";
    case IdealKind::Interior: return "interior";
    case IdealKind::Quasi: return "quasi";
    case IdealKind::OneTwo: return "12";
  }
  return "unknown";
}

std::optional<IdealKind> parse_kind(std::string_view name) noexcept {
  for (IdealKind k : all_ideal_kinds) {
    if (kind_name(k) == name) return k;
  }
  return std::nullopt;
}

namespace {

// The subset scan drives this directly so the emptiness check stays outside.
bool satisfies(const Magma& m, const ElemSet& a, IdealKind k) {
  const ElemSet s = m.full_set();
  auto prod = [&m](const ElemSet& x, const ElemSet& y) {
    return set_product(m, x, y);
  };
  switch (k) {
    case IdealKind::Subsemigroup:
      return prod(a, a).is_subset_of(a);
    case IdealKind::Left:
      return prod(s, a).is_subset_of(a);
    case IdealKind::Right:
      return prod(a, s).is_subset_of(a);
    case IdealKind::TwoSided:
      return prod(s, a).is_subset_of(a) && prod(a, s).is_subset_of(a);
    case IdealKind::GeneralizedBi:
      return prod(prod(a, s), a).is_subset_of(a);
    case IdealKind::Bi:
      return prod(a, a).is_subset_of(a) &&
             prod(prod(a, s), a).is_subset_of(a);
    case IdealKind::Interior:
      return prod(prod(s, a), s).is_subset_of(a);
    case IdealKind::Quasi:
      return (prod(s, a) & prod(a, s)).is_subset_of(a);
    case IdealKind::OneTwo: {
      const ElemSet aa = prod(a, a);
      return aa.is_subset_of(a) && prod(prod(a, s), aa).is_subset_of(a);
    }
  }
  return false;
}

void require_non_empty(const ElemSet& a) {
  if (a.empty()) throw EmptySubset();
}

void require_scan_order(const Magma& m) {
  if (m.order() > max_scan_order) {
    throw OrderTooLarge(m.order(), max_scan_order);
  }
}

}  // namespace

bool is_kind(const Magma& m, const ElemSet& a, IdealKind k) {
  require_non_empty(a);
  return satisfies(m, a, k);
}

bool is_semiprime(const Magma& m, const ElemSet& a) {
  require_non_empty(a);
  for (std::size_t i = 0; i < m.order(); ++i) {
    if (a.contains(m.square(elem(i))) && !a.contains(elem(i))) {
      return false;
    }
  }
  return true;
}

IdealClassification classify_subset(const Magma& m, const ElemSet& a) {
  require_non_empty(a);
  IdealClassification c;
  c.subset = a;
  for (IdealKind k : all_ideal_kinds) {
    c.flags[static_cast<std::size_t>(k)] = satisfies(m, a, k);
  }
  c.semiprime = is_semiprime(m, a);
  c.idempotent = set_product(m, a, a) == a;
  return c;
}

std::vector<ElemSet> enumerate_kind(const Magma& m, IdealKind k) {
  require_scan_order(m);
  const std::uint64_t limit = std::uint64_t{1} << m.order();
  std::vector<ElemSet> out;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    ElemSet a = ElemSet::from_mask(m.order(), mask);
    if (satisfies(m, a, k)) out.push_back(a);
  }
  return out;
}

ElemSet closure(const Magma& m, const ElemSet& x, IdealKind k) {
  require_non_empty(x);
  const bool left = k == IdealKind::Left || k == IdealKind::TwoSided;
  const bool right = k == IdealKind::Right || k == IdealKind::TwoSided;
  if (!left && !right) {
    throw std::invalid_argument("closure is defined for left, right and "
                                "two-sided ideals only");
  }
  const ElemSet s = m.full_set();
  ElemSet current = x;
  for (;;) {
    ElemSet next = current;
    if (left) next |= set_product(m, s, current);
    if (right) next |= set_product(m, current, s);
    if (next == current) return current;
    current = next;
  }
}

std::vector<ElemSet> minimal_ideals(const Magma& m, IdealKind k) {
  const auto all = enumerate_kind(m, k);
  std::vector<ElemSet> out;
  for (const auto& a : all) {
    bool minimal = true;
    for (const auto& b : all) {
      if (b != a && b.is_subset_of(a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

}  // namespace lasg
