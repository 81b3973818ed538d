#include "doctest.h"
#include "fixtures.hpp"
#include "lasg/enumerate.hpp"
#include "lasg/errors.hpp"
#include "lasg/laws.hpp"
#include "oracles.hpp"

using namespace lasg;
using testing::id;
using testing::labels;

namespace {

Magma from_rows(std::vector<std::vector<int>> rows) {
  return oracle::magma_of(rows);
}

// Left zero band xy = x is associative but not left invertive for n >= 2.
Magma left_zero(std::size_t n) {
  oracle::Table t(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<int>(i);
  return from_rows(t);
}

}  // namespace

TEST_CASE("law names and arities") {
  CHECK(law_name(Law::LeftInvertive) == "left-invertive");
  CHECK(law_name(Law::LeftCommute) == "left-commute");
  CHECK(law_arity(Law::Commutative) == 2);
  CHECK(law_arity(Law::Medial) == 4);
  CHECK(law_arity(Law::Paramedial) == 4);
  CHECK(law_arity(Law::Associative) == 3);
}

TEST_CASE("check_law on the examples") {
  Magma exp = testing::example_exp();
  Magma tb = testing::example_tb();
  for (Law law : {Law::LeftInvertive, Law::Medial, Law::Paramedial, Law::LeftCommute}) {
    CHECK(check_law(exp, law).holds);
    CHECK(check_law(tb, law).holds);
    CHECK_FALSE(check_law(tb, law).counterexample);
  }
  LawReport assoc = check_law(tb, Law::Associative);
  CHECK_FALSE(assoc.holds);
  REQUIRE(assoc.counterexample);
  const auto& w = *assoc.counterexample;
  REQUIRE(w.size() == 3);
  CHECK(tb.product(tb.product(w[0], w[1]), w[2]) !=
        tb.product(w[0], tb.product(w[1], w[2])));
  CHECK_FALSE(check_law(tb, Law::Commutative).holds);
}

TEST_CASE("counterexample is the least failing tuple") {
  Magma lz = left_zero(2);
  LawReport r = check_law(lz, Law::LeftInvertive);
  CHECK_FALSE(r.holds);
  // (ab)c = a, (cb)a = c; first failure at a=0, b=0, c=1.
  CHECK(*r.counterexample == std::vector<ElemId>{elem(0), elem(0), elem(1)});
  CHECK(check_law(lz, Law::Associative).holds);
  CHECK_FALSE(is_la_semigroup(lz));
}

TEST_CASE("singleton magma satisfies every law") {
  Magma one = parse_cayley("1\nx\nx");
  for (Law law : all_laws) CHECK(check_law(one, law).holds);
  CHECK(is_la_semigroup(one));
  CHECK(find_left_identity(one) == elem(0));
  CHECK(find_right_identity(one) == elem(0));
  CHECK(is_intra_regular(one).intra_regular);
}

TEST_CASE("identities") {
  Magma exp = testing::example_exp();
  Magma tb = testing::example_tb();
  CHECK(find_left_identity(exp) == id(exp, "e"));
  CHECK_FALSE(find_right_identity(exp));
  CHECK(find_left_identity(tb) == id(tb, "b"));
  CHECK_FALSE(find_right_identity(tb));

  // Right zero band xy = y: every element is a left identity, and it is
  // not left invertive, so the least one is returned.
  Magma rz = from_rows({{0, 1}, {0, 1}});
  CHECK_FALSE(is_la_semigroup(rz));
  CHECK(find_left_identity(rz) == elem(0));
}

TEST_CASE("intra-regularity") {
  Magma tb = testing::example_tb();
  IntraReport r = is_intra_regular(tb);
  CHECK(r.intra_regular);
  REQUIRE(r.witnesses.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    REQUIRE(r.witnesses[i]);
    const IntraWitness& w = *r.witnesses[i];
    CHECK(w.element == elem(i));
    CHECK(tb.product(tb.product(w.x, tb.square(w.element)), w.y) == w.element);
  }

  Magma exp = testing::example_exp();
  IntraReport e = is_intra_regular(exp);
  CHECK_FALSE(e.intra_regular);
  CHECK_FALSE(e.witnesses[index_of(id(exp, "c"))]);
  CHECK_FALSE(e.witnesses[index_of(id(exp, "d"))]);
  CHECK(e.witnesses[index_of(id(exp, "a"))]);
  CHECK_FALSE(intra_witness(exp, id(exp, "d")));
}

TEST_CASE("intra witness is the least pair, matching the oracle") {
  for (const Magma& m : collect_models({3, false, {}, 1})) {
    const auto t = oracle::table_of(m);
    for (std::size_t a = 0; a < m.order(); ++a) {
      auto got = intra_witness(m, elem(a));
      auto want = oracle::intra_witness(t, static_cast<int>(a));
      REQUIRE(got.has_value() == want.has_value());
      if (got) {
        CHECK(static_cast<int>(index_of(got->x)) == want->first);
        CHECK(static_cast<int>(index_of(got->y)) == want->second);
      }
    }
    CHECK(is_intra_regular(m).intra_regular == oracle::intra_regular(t));
  }
}

TEST_CASE("invertible elements") {
  Magma tb = testing::example_tb();
  ElemSet left = invertible_elements(tb, Side::Left);
  ElemSet right = invertible_elements(tb, Side::Right);
  CHECK(left == labels(tb, "bcde"));
  CHECK(right == labels(tb, "bcde"));
  CHECK(invertible_elements(tb, Side::Both) == (left & right));

  Magma exp = testing::example_exp();
  ElemSet el = invertible_elements(exp, Side::Left);
  CHECK(el.contains(id(exp, "e")));
  CHECK_FALSE(el.contains(id(exp, "a")));

  Magma lz = left_zero(2);
  CHECK_THROWS_AS(invertible_elements(lz, Side::Left), NoLeftIdentity);
}

TEST_CASE("law implications hold on orders up to 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const Magma& m : collect_models({n, false, {}, 1})) {
      CHECK(check_law(m, Law::Medial).holds);
      if (find_left_identity(m)) {
        CHECK(check_law(m, Law::Paramedial).holds);
        CHECK(check_law(m, Law::LeftCommute).holds);
      }
      if (find_right_identity(m)) {
        CHECK(check_law(m, Law::Commutative).holds);
        CHECK(check_law(m, Law::Associative).holds);
      }
    }
  }
}
