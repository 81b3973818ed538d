#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "lasg/magma.hpp"

namespace lasg {

enum class Law {
  LeftInvertive,  // (ab)c = (cb)a
  Medial,         // (ab)(cd) = (ac)(bd)
  Paramedial,     // (ab)(cd) = (dc)(ba)
  LeftCommute,    // a(bc) = b(ac)
  Associative,    // (ab)c = a(bc)
  Commutative,    // ab = ba
};

inline constexpr std::array<Law, 6> all_laws = {
    Law::LeftInvertive, Law::Medial,      Law::Paramedial,
    Law::LeftCommute,   Law::Associative, Law::Commutative};

std::string_view law_name(Law law) noexcept;
std::size_t law_arity(Law law) noexcept;

struct LawReport {
  Law law;
  bool holds;
  // Lexicographically least failing tuple (row-major index order); present
  // exactly when holds is false.
  std::optional<std::vector<ElemId>> counterexample;
};

LawReport check_law(const Magma& m, Law law);

bool is_la_semigroup(const Magma& m);

// The unique e with e.x = x for all x. If the magma is left invertive and two
// left identities exist, throws InternalInvariantViolation; otherwise the
// least one is returned.
std::optional<ElemId> find_left_identity(const Magma& m);

// Least e with x.e = x for all x.
std::optional<ElemId> find_right_identity(const Magma& m);

// a = (x a^2) y.
struct IntraWitness {
  ElemId element;
  ElemId x;
  ElemId y;

  friend bool operator==(const IntraWitness&, const IntraWitness&) = default;
};

// Lexicographically least (x, y) with (x (a a)) y = a.
std::optional<IntraWitness> intra_witness(const Magma& m, ElemId a);

struct IntraReport {
  bool intra_regular;
  std::vector<std::optional<IntraWitness>> witnesses;  // indexed by element
};

IntraReport is_intra_regular(const Magma& m);

enum class Side { Left, Right, Both };

// Elements a with x.a = e (Left), a.x = e (Right), or both, for some x, where
// e is the left identity. Throws NoLeftIdentity.
ElemSet invertible_elements(const Magma& m, Side side);

}  // namespace lasg
