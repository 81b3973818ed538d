// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fixtures.hpp"
#include "lasg/lasg.hpp"
#include "oracles.hpp"

using namespace lasg;
using testing::id;
using testing::labels;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

std::vector<Magma> corpus() {
  std::vector<Magma> out;
  for (std::size_t n = 1; n <= 3; ++n) {
    auto ms = collect_models({n, false, {}, 1});
    out.insert(out.end(), ms.begin(), ms.end());
  }
  auto four = collect_models({4, false, {ModelFilter::HasLeftIdentity}, 1});
  out.insert(out.end(), four.begin(), four.end());
  return out;
}

const std::vector<Magma>& shared_corpus() {
  static const std::vector<Magma> c = corpus();
  return c;
}

// a = (x a^2) y, evaluated directly.
bool witness_holds(const Magma& m, const char* a, const char* x, const char* y) {
  ElemId ea = id(m, a);
  return m.product(m.product(id(m, x), m.product(ea, ea)), id(m, y)) == ea;
}

Outcome criterion1() {
  Outcome o;
  Magma m = testing::example_tb();
  o.expect(is_la_semigroup(m), "not an LA-semigroup");
  o.expect(find_left_identity(m) == id(m, "b"), "left identity is not b");
  o.expect(is_intra_regular(m).intra_regular, "not intra-regular");
  o.expect(witness_holds(m, "a", "a", "a"), "a = (a a^2) a fails");
  o.expect(witness_holds(m, "b", "c", "e"), "b = (c b^2) e fails");
  o.expect(witness_holds(m, "c", "d", "e"), "c = (d c^2) e fails");
  o.expect(witness_holds(m, "d", "c", "c"), "d = (c d^2) c fails");
  o.expect(witness_holds(m, "e", "b", "e"), "e = (b e^2) e fails");
  return o;
}

Outcome criterion2() {
  Outcome o;
  Magma m = testing::example_exp();
  o.expect(find_left_identity(m) == id(m, "e"), "left identity is not e");
  o.expect(!find_right_identity(m), "unexpected right identity");
  const ElemId d = id(m, "d");
  std::size_t pairs = 0;
  for (std::size_t x = 0; x < m.order(); ++x)
    for (std::size_t y = 0; y < m.order(); ++y) {
      ++pairs;
      if (m.product(m.product(elem(x), m.square(d)), elem(y)) == d)
        o.fail("d has a witness");
    }
  o.expect(pairs == 36, "scan did not cover 36 pairs");
  o.expect(!intra_witness(m, d), "intra_witness found a witness for d");
  o.expect(!is_intra_regular(m).intra_regular, "reported intra-regular");
  return o;
}

Outcome criterion3() {
  Outcome o;
  Magma m = testing::example_exp();
  const ElemSet s = m.full_set();
  const ElemSet b = labels(m, "abf");
  IdealClassification cb = classify_subset(m, b);
  o.expect(cb[IdealKind::Bi], "{a,b,f} not bi");
  o.expect(cb[IdealKind::GeneralizedBi], "{a,b,f} not generalized bi");
  o.expect(cb[IdealKind::Interior], "{a,b,f} not interior");
  o.expect(set_product(m, set_product(m, b, s), b) == (b & s), "(BS)B != B∩S");
  o.expect(set_product(m, set_product(m, s, b), s) == (b & s), "(SB)S != B∩S");

  const ElemSet ab = labels(m, "ab");
  IdealClassification cab = classify_subset(m, ab);
  o.expect(cab[IdealKind::TwoSided], "{a,b} not two-sided");
  o.expect(cab.semiprime, "{a,b} not semiprime");
  o.expect((ab | ab) == set_product(m, ab, ab), "{a,b} ∪ {a,b} != {a,b}{a,b}");
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (const Magma& m : shared_corpus()) {
    if (!check_law(m, Law::Medial).holds) o.fail("medial fails");
    if (find_left_identity(m)) {
      if (!check_law(m, Law::Paramedial).holds) o.fail("paramedial fails");
      if (!check_law(m, Law::LeftCommute).holds) o.fail("left-commute fails");
    }
    if (find_right_identity(m)) {
      if (!check_law(m, Law::Commutative).holds) o.fail("commutative fails");
      if (!check_law(m, Law::Associative).holds) o.fail("associative fails");
    }
  }
  o.detail = o.ok ? std::to_string(shared_corpus().size()) + " models" : o.detail;
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (TheoremId t : all_theorems) {
    if (auto m = search_counterexample(shared_corpus(), t, SearchMode::Forward)) {
      o.fail(std::string(theorem_name(t)) + " violated:\n" + serialize_cayley(*m));
    }
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t checked = 0;
  for (const Magma& m : shared_corpus()) {
    if (!find_left_identity(m) || !is_intra_regular(m).intra_regular) continue;
    ++checked;
    auto two = enumerate_kind(m, IdealKind::TwoSided);
    if (enumerate_kind(m, IdealKind::Quasi) != two) o.fail("quasi != two-sided");
    if (enumerate_kind(m, IdealKind::OneTwo) != two) o.fail("(1,2) != two-sided");
    if (enumerate_kind(m, IdealKind::Left) != enumerate_kind(m, IdealKind::Right))
      o.fail("left != right");
  }
  o.expect(checked > 0, "no intra-regular model with left identity");
  if (o.ok) o.detail = std::to_string(checked) + " models";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::vector<Magma> pool{testing::example_exp(), testing::example_tb()};
  for (std::size_t n = 1; n <= 4; ++n) {
    auto ms = collect_models({n, true, {}, 1});
    pool.insert(pool.end(), ms.begin(), ms.end());
  }
  auto sa = search_counterexample(pool, TheoremId::T_SA_EQ_S, SearchMode::Converse);
  if (!sa) {
    o.fail("no intra-regular model with Sa != S");
  } else {
    o.expect(is_intra_regular(*sa).intra_regular, "found model not intra-regular");
    bool some_differs = false;
    for (std::size_t a = 0; a < sa->order(); ++a) {
      ElemSet single = ElemSet::singleton(sa->order(), elem(a));
      some_differs = some_differs || set_product(*sa, sa->full_set(), single) != sa->full_set();
    }
    o.expect(some_differs, "found model has Sa = S for all a");
  }

  auto bi = search_counterexample(pool, TheoremId::T_BI_TRACE, SearchMode::Converse);
  if (!bi) {
    o.fail("no non-intra-regular model with a bi-ideal trace");
  } else {
    o.expect(!is_intra_regular(*bi).intra_regular, "found model intra-regular");
    bool trace = false;
    const ElemSet s = bi->full_set();
    for (const ElemSet& b : enumerate_kind(*bi, IdealKind::Bi)) {
      trace = trace || set_product(*bi, set_product(*bi, b, s), b) == (b & s);
    }
    o.expect(trace, "found model has no bi-ideal B with (BS)B = B∩S");
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    auto naive = oracle::all_la_semigroups(n);
    auto raw = collect_models({static_cast<std::size_t>(n), false, {}, 1});
    if (raw.size() != naive.size()) {
      o.fail("raw count differs at order " + std::to_string(n));
      continue;
    }
    for (std::size_t i = 0; i < raw.size(); ++i)
      if (oracle::table_of(raw[i]) != naive[i]) o.fail("raw tables differ");

    std::set<std::vector<int>> want;
    for (const auto& t : naive) want.insert(oracle::canonical(t));
    std::set<std::vector<int>> got;
    for (const Magma& m : collect_models({static_cast<std::size_t>(n), true, {}, 1})) {
      std::vector<int> flat;
      for (ElemId c : canonical_form(m).cells) flat.push_back(static_cast<int>(index_of(c)));
      got.insert(flat);
    }
    if (got != want) o.fail("canonical sets differ at order " + std::to_string(n));
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::vector<Rational> points;
  for (const char* p : {"-2", "-1", "0", "1/2", "1", "3"}) points.push_back(parse_rational(p));
  for (const char* r : {"0", "1", "-2/3"}) {
    AffineParams params{parse_rational(r)};
    AffineReport rep = check_affine_construction(params, points);
    const std::string tag = std::string("r=") + r + ": ";
    o.expect(rep.triples_checked == 216, tag + "triple count");
    o.expect(rep.left_invertive.holds, tag + "left invertive law fails");
    o.expect(rep.non_commutative.has_value(), tag + "no non-commutativity witness");
    o.expect(rep.non_associative.has_value(), tag + "no non-associativity witness");
    if (rep.non_commutative) {
      const auto& [a, b] = *rep.non_commutative;
      o.expect(affine_product(params, a, b) != affine_product(params, b, a),
               tag + "commutativity witness invalid");
    }
    if (rep.non_associative) {
      const auto& [a, b, c] = *rep.non_associative;
      o.expect(affine_product(params, affine_product(params, a, b), c) !=
                   affine_product(params, a, affine_product(params, b, c)),
               tag + "associativity witness invalid");
    }
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  for (const char* name : {"exp.tbl", "tb.tbl"}) {
    std::string outputs[2];
    for (auto& text : outputs) {
      std::istringstream in;
      std::ostringstream out;
      std::ostringstream err;
      auto status = cli::run({"verify", testing::fixture_path(name), "--all", "--json"},
                             in, out, err);
      o.expect(status == cli::ExitStatus::Success, std::string(name) + ": non-zero exit");
      text = out.str();
    }
    o.expect(!outputs[0].empty(), std::string(name) + ": empty output");
    o.expect(outputs[0] == outputs[1], std::string(name) + ": outputs differ");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"intra-regular example and its witnesses", criterion1},
      {"non intra-regular example", criterion2},
      {"subset classification on the non intra-regular example", criterion3},
      {"law implications", criterion4},
      {"theorem soundness sweep", criterion5},
      {"equality of ideal families", criterion6},
      {"converse counterexamples", criterion7},
      {"enumerator oracle equivalence", criterion8},
      {"affine construction", criterion9},
      {"verify JSON determinism", criterion10},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
              << criteria[i].first << " (" << timing << ")";
    if (!o.detail.empty()) std::cout << " -- " << o.detail;
    std::cout << '\n';
    failures += o.ok ? 0 : 1;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
