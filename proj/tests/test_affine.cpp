#include "doctest.h"
#include "lasg/affine.hpp"
#include "lasg/errors.hpp"

using namespace lasg;

namespace {

std::vector<Rational> points(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* x : xs) out.push_back(parse_rational(x));
  return out;
}

}  // namespace

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-2/3") == Rational(-2, 3));
  CHECK(parse_rational("+4/6") == Rational(2, 3));
  CHECK(to_string(parse_rational("4/6")) == "2/3");
  CHECK(to_string(parse_rational("-8/4")) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
}

TEST_CASE("affine product") {
  AffineParams p{Rational(1, 2), AffineVariant::Additive};
  CHECK(affine_product(p, 0, 1) == Rational(1, 2));
  CHECK(affine_product(p, 1, 0) == Rational(-3, 2));

  AffineParams q{Rational(2), AffineVariant::Multiplicative};
  CHECK(affine_product(q, 2, 3) == Rational(3, 4));
  CHECK_THROWS_AS(affine_product(q, 0, 3), std::domain_error);
}

TEST_CASE("commutativity witness for r = 1/2") {
  AffineReport r = check_affine_construction({Rational(1, 2)}, points({"0", "1", "2"}));
  CHECK(r.left_invertive.holds);
  CHECK(r.triples_checked == 27);
  REQUIRE(r.non_commutative);
  CHECK((*r.non_commutative)[0] == 0);
  CHECK((*r.non_commutative)[1] == 1);
}

TEST_CASE("associativity witness for r = 0") {
  AffineReport r = check_affine_construction({Rational(0)}, points({"0", "1", "2"}));
  CHECK(r.left_invertive.holds);
  REQUIRE(r.non_associative);
  const auto& w = *r.non_associative;
  AffineParams p{Rational(0)};
  CHECK(affine_product(p, affine_product(p, w[0], w[1]), w[2]) !=
        affine_product(p, w[0], affine_product(p, w[1], w[2])));
  CHECK(w[0] == 1);
  CHECK(w[1] == 0);
  CHECK(w[2] == 0);
}

TEST_CASE("left invertive law holds for several r") {
  auto pts = points({"-2", "-1", "0", "1/2", "1", "3", "7/5"});
  for (const char* r : {"0", "1", "-2/3", "5", "-11/7"}) {
    AffineReport rep = check_affine_construction({parse_rational(r)}, pts);
    CHECK(rep.left_invertive.holds);
    CHECK(rep.non_associative);
    CHECK(rep.non_commutative);
    CHECK(rep.triples_checked == pts.size() * pts.size() * pts.size());
  }
}

TEST_CASE("multiplicative variant") {
  AffineParams p{Rational(3, 2), AffineVariant::Multiplicative};
  AffineReport rep = check_affine_construction(p, points({"1", "-2", "1/3", "5"}));
  CHECK(rep.left_invertive.holds);
  CHECK(rep.non_commutative);
  CHECK_THROWS_AS(check_affine_construction(p, points({"0", "1", "2"})),
                  std::domain_error);
}

TEST_CASE("too few distinct points") {
  CHECK_THROWS_AS(check_affine_construction({Rational(1)}, points({"1", "1", "2"})),
                  InsufficientPoints);
  CHECK_THROWS_AS(check_affine_construction({Rational(1)}, points({"1", "2"})),
                  InsufficientPoints);
  CHECK_THROWS_AS(check_affine_construction({Rational(1)}, {}), InsufficientPoints);
}
