#include "lasg/laws.hpp"

#include "lasg/errors.hpp"

namespace lasg {

std::string_view law_name(Law law) noexcept {
  switch (law) {
    case Law::LeftInvertive: return "left-invertive";
    case Law::Medial: return "medial";
    case Law::Paramedial: return "paramedial";
    case Law::LeftCommute: return "left-commute";
    case Law::Associative: return "associative";
    case Law::Commutative: return "commutative";
  }
  return "unknown";
}

std::size_t law_arity(Law law) noexcept {
  switch (law) {
    case Law::Medial:
    case Law::Paramedial: return 4;
    case Law::Commutative: return 2;
    default: return 3;
  }
}

namespace {

bool law_holds_at(const Magma& m, Law law, const std::vector<ElemId>& t) {
  auto p = [&m](ElemId x, ElemId y) { return m.product(x, y); };
  switch (law) {
    case Law::LeftInvertive:
      return p(p(t[0], t[1]), t[2]) == p(p(t[2], t[1]), t[0]);
    case Law::Medial:
      return p(p(t[0], t[1]), p(t[2], t[3])) ==
             p(p(t[0], t[2]), p(t[1], t[3]));
    case Law::Paramedial:
      return p(p(t[0], t[1]), p(t[2], t[3])) ==
             p(p(t[3], t[2]), p(t[1], t[0]));
    case Law::LeftCommute:
      return p(t[0], p(t[1], t[2])) == p(t[1], p(t[0], t[2]));
    case Law::Associative:
      return p(p(t[0], t[1]), t[2]) == p(t[0], p(t[1], t[2]));
    case Law::Commutative:
      return p(t[0], t[1]) == p(t[1], t[0]);
  }
  return false;
}

// Odometer over [0,n)^k in row-major (lexicographic) order.
bool next_tuple(std::vector<ElemId>& t, std::size_t n) {
  for (std::size_t i = t.size(); i-- > 0;) {
    std::size_t v = index_of(t[i]) + 1;
    if (v < n) {
      t[i] = elem(v);
      return true;
    }
    t[i] = elem(0);
  }
  return false;
}

bool left_invertive(const Magma& m) {
  const std::size_t n = m.order();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      ElemId ab = m.product(elem(a), elem(b));
      for (std::size_t c = 0; c < n; ++c) {
        if (m.product(ab, elem(c)) !=
            m.product(m.product(elem(c), elem(b)), elem(a))) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

LawReport check_law(const Magma& m, Law law) {
  std::vector<ElemId> tuple(law_arity(law), elem(0));
  do {
    if (!law_holds_at(m, law, tuple)) {
      return {law, false, tuple};
    }
  } while (next_tuple(tuple, m.order()));
  return {law, true, std::nullopt};
}

bool is_la_semigroup(const Magma& m) { return left_invertive(m); }

std::optional<ElemId> find_left_identity(const Magma& m) {
  const std::size_t n = m.order();
  std::optional<ElemId> found;
  for (std::size_t e = 0; e < n; ++e) {
    bool identity = true;
    for (std::size_t x = 0; x < n && identity; ++x) {
      identity = m.product(elem(e), elem(x)) == elem(x);
    }
    if (!identity) continue;
    if (!found) {
      found = elem(e);
    } else if (left_invertive(m)) {
      throw InternalInvariantViolation(
          "two left identities in a left invertive magma: " +
          m.label(*found) + ", " + m.label(elem(e)));
    } else {
      break;
    }
  }
  return found;
}

std::optional<ElemId> find_right_identity(const Magma& m) {
  const std::size_t n = m.order();
  for (std::size_t e = 0; e < n; ++e) {
    bool identity = true;
    for (std::size_t x = 0; x < n && identity; ++x) {
      identity = m.product(elem(x), elem(e)) == elem(x);
    }
    if (identity) return elem(e);
  }
  return std::nullopt;
}

std::optional<IntraWitness> intra_witness(const Magma& m, ElemId a) {
  const std::size_t n = m.order();
  const ElemId a2 = m.square(a);
  for (std::size_t x = 0; x < n; ++x) {
    const ElemId xa2 = m.product(elem(x), a2);
    for (std::size_t y = 0; y < n; ++y) {
      if (m.product(xa2, elem(y)) == a) {
        return IntraWitness{a, elem(x), elem(y)};
      }
    }
  }
  return std::nullopt;
}

IntraReport is_intra_regular(const Magma& m) {
  IntraReport report{true, {}};
  report.witnesses.reserve(m.order());
  for (std::size_t a = 0; a < m.order(); ++a) {
    auto w = intra_witness(m, elem(a));
    report.intra_regular = report.intra_regular && w.has_value();
    report.witnesses.push_back(w);
  }
  return report;
}

ElemSet invertible_elements(const Magma& m, Side side) {
  auto e = find_left_identity(m);
  if (!e) {
    throw NoLeftIdentity();
  }
  ElemSet left = m.empty_set();
  ElemSet right = m.empty_set();
  for (std::size_t a = 0; a < m.order(); ++a) {
    for (std::size_t x = 0; x < m.order(); ++x) {
      if (m.product(elem(x), elem(a)) == *e) left.insert(elem(a));
      if (m.product(elem(a), elem(x)) == *e) right.insert(elem(a));
    }
  }
  switch (side) {
    case Side::Left: return left;
    case Side::Right: return right;
    case Side::Both: return left & right;
  }
  return left;
}

}  // namespace lasg
