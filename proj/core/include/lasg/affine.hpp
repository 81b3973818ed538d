#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lasg/laws.hpp"

namespace lasg {

using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or an integer literal (optional sign on p). Decimals are
// rejected. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// Operation on the rationals:
//   Additive        a * b = b - a - r
//   Multiplicative  a * b = b a^-1 r^-1   (nonzero points, r != 0)
enum class AffineVariant { Additive, Multiplicative };

struct AffineParams {
  Rational r;
  AffineVariant variant = AffineVariant::Additive;
};

// Throws std::domain_error on division by zero (multiplicative variant).
Rational affine_product(const AffineParams& p, const Rational& a,
                        const Rational& b);

struct AffineReport {
  // Left invertive law over every triple of sample points.
  LawReport left_invertive{Law::LeftInvertive, true, std::nullopt};
  // First failing (a, b, c) as values, in point-index lexicographic order.
  std::optional<std::array<Rational, 3>> left_invertive_failure;
  // Witnesses among the sample points; absent means "no witness among
  // samples", not that the operation has the property.
  std::optional<std::array<Rational, 3>> non_associative;
  std::optional<std::array<Rational, 2>> non_commutative;
  std::size_t triples_checked = 0;
};

// Exact check over all triples of `points`. Throws InsufficientPoints when
// fewer than 3 distinct points are given, std::domain_error when the
// multiplicative variant meets a zero.
AffineReport check_affine_construction(const AffineParams& p,
                                       const std::vector<Rational>& points);

}  // namespace lasg
