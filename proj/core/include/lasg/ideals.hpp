#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "lasg/magma.hpp"

namespace lasg {

// Subset varieties. For a non-empty A in S:
//   Subsemigroup   AA ⊆ A
//   Left / Right   SA ⊆ A / AS ⊆ A
//   TwoSided       Left and Right
//   GeneralizedBi  (AS)A ⊆ A
//   Bi             Subsemigroup and GeneralizedBi
//   Interior       (SA)S ⊆ A
//   Quasi          SA ∩ AS ⊆ A
//   OneTwo         Subsemigroup and (AS)(AA) ⊆ A
enum class IdealKind {
  Subsemigroup,
  Left,
  Right,
  TwoSided,
  Bi,
  GeneralizedBi,
  Interior,
  Quasi,
  OneTwo,
};

inline constexpr std::array<IdealKind, 9> all_ideal_kinds = {
    IdealKind::Subsemigroup,  IdealKind::Left,     IdealKind::Right,
    IdealKind::TwoSided,      IdealKind::Bi,       IdealKind::GeneralizedBi,
    IdealKind::Interior,      IdealKind::Quasi,    IdealKind::OneTwo};

// Short names used on the command line: sub, left, right, two-sided, bi,
// gbi, interior, quasi, 12.
std::string_view kind_name(IdealKind k) noexcept;
std::optional<IdealKind> parse_kind(std::string_view name) noexcept;

// Largest order accepted by the 2^n subset scans.
inline constexpr std::size_t max_scan_order = 24;

// All predicates throw EmptySubset on an empty A.
bool is_kind(const Magma& m, const ElemSet& a, IdealKind k);
bool is_semiprime(const Magma& m, const ElemSet& a);

struct IdealClassification {
  ElemSet subset;
  std::array<bool, all_ideal_kinds.size()> flags{};
  bool semiprime = false;
  bool idempotent = false;

  bool operator[](IdealKind k) const noexcept {
    return flags[static_cast<std::size_t>(k)];
  }
};

IdealClassification classify_subset(const Magma& m, const ElemSet& a);

// Every non-empty subset satisfying k, ascending by bitmask. Throws
// OrderTooLarge above max_scan_order.
std::vector<ElemSet> enumerate_kind(const Magma& m, IdealKind k);

// Smallest Left / Right / TwoSided ideal containing x. Throws EmptySubset,
// std::invalid_argument for other kinds.
ElemSet closure(const Magma& m, const ElemSet& x, IdealKind k);

// Members of enumerate_kind(m, k) containing no other member.
std::vector<ElemSet> minimal_ideals(const Magma& m, IdealKind k);

}  // namespace lasg
