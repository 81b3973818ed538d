#include "lasg/theorems.hpp"

#include <functional>
#include <map>

#include "lasg/enumerate.hpp"
#include "lasg/errors.hpp"
#include "lasg/ideals.hpp"
#include "lasg/laws.hpp"

namespace lasg {

const std::array<TheoremId, theorem_count> all_theorems = {
    TheoremId::T_INVERTIBLE_INTRA,   TheoremId::T_SA_EQ_S,
    TheoremId::C_AS_IMPLIES_SA,      TheoremId::T_BI_TRACE,
    TheoremId::C_BI_TRACE,           TheoremId::T_INTERIOR_TRACE,
    TheoremId::C_INTERIOR_TRACE,     TheoremId::T_LR_UNION,
    TheoremId::T_EQUIV_RL,           TheoremId::T_LEFT_IDEAL_SQ,
    TheoremId::T_BI_EQUIV,           TheoremId::T_QUASI_EQUIV,
    TheoremId::T_INTERIOR_EQUIV,     TheoremId::T_ONETWO_EQUIV,
    TheoremId::T_ONETWO_TWOSIDED,    TheoremId::L_S_SQUARED,
    TheoremId::L_IDEAL_IDEMP,        TheoremId::L_LEFT_IFF_RIGHT,
    TheoremId::L_INTRA_IFF_IDEMP,    TheoremId::L_QUASI_IFF_TWOSIDED,
    TheoremId::T_MINIMAL_INTERSECTION,
};

std::string_view theorem_name(TheoremId t) noexcept {
  switch (t) {
    case TheoremId::T_INVERTIBLE_INTRA: return "T_INVERTIBLE_INTRA";
    case TheoremId::T_SA_EQ_S: return "T_SA_EQ_S";
    case TheoremId::C_AS_IMPLIES_SA: return "C_AS_IMPLIES_SA";
    case TheoremId::T_BI_TRACE: return "T_BI_TRACE";
    case TheoremId::C_BI_TRACE: return "C_BI_TRACE";
    case TheoremId::T_INTERIOR_TRACE: return "T_INTERIOR_TRACE";
    case TheoremId::C_INTERIOR_TRACE: return "C_INTERIOR_TRACE";
    case TheoremId::T_LR_UNION: return "T_LR_UNION";
    case TheoremId::T_EQUIV_RL: return "T_EQUIV_RL";
    case TheoremId::T_LEFT_IDEAL_SQ: return "T_LEFT_IDEAL_SQ";
    case TheoremId::T_BI_EQUIV: return "T_BI_EQUIV";
    case TheoremId::T_QUASI_EQUIV: return "T_QUASI_EQUIV";
    case TheoremId::T_INTERIOR_EQUIV: return "T_INTERIOR_EQUIV";
    case TheoremId::T_ONETWO_EQUIV: return "T_ONETWO_EQUIV";
    case TheoremId::T_ONETWO_TWOSIDED: return "T_ONETWO_TWOSIDED";
    case TheoremId::L_S_SQUARED: return "L_S_SQUARED";
    case TheoremId::L_IDEAL_IDEMP: return "L_IDEAL_IDEMP";
    case TheoremId::L_LEFT_IFF_RIGHT: return "L_LEFT_IFF_RIGHT";
    case TheoremId::L_INTRA_IFF_IDEMP: return "L_INTRA_IFF_IDEMP";
    case TheoremId::L_QUASI_IFF_TWOSIDED: return "L_QUASI_IFF_TWOSIDED";
    case TheoremId::T_MINIMAL_INTERSECTION: return "T_MINIMAL_INTERSECTION";
  }
  return "UNKNOWN";
}

std::optional<TheoremId> parse_theorem(std::string_view name) noexcept {
  for (TheoremId t : all_theorems) {
    if (theorem_name(t) == name) return t;
  }
  return std::nullopt;
}

namespace {

constexpr std::string_view forward_dir = "(i)=>(ii)";
constexpr std::string_view backward_dir = "(ii)=>(i)";

std::string format_set(const Magma& m, const ElemSet& a) {
  std::string out = "{";
  bool first = true;
  for (ElemId e : a) {
    if (!first) out += ',';
    out += m.label(e);
    first = false;
  }
  return out + "}";
}

// Facts about one magma shared by all theorem checks; computed on demand.
class Facts {
 public:
  explicit Facts(const Magma& m) : m_(m), s_(m.full_set()) {
    if (m.order() > max_scan_order) {
      throw OrderTooLarge(m.order(), max_scan_order);
    }
    la_ = is_la_semigroup(m);
    left_identity_ = find_left_identity(m);
  }

  const Magma& magma() const { return m_; }
  const ElemSet& s() const { return s_; }
  bool la() const { return la_; }
  bool has_left_identity() const { return left_identity_.has_value(); }

  const IntraReport& intra() {
    if (!intra_) intra_ = is_intra_regular(m_);
    return *intra_;
  }
  bool intra_regular() { return intra().intra_regular; }
  std::optional<ElemId> first_non_intra() {
    const auto& w = intra().witnesses;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!w[i]) return elem(i);
    }
    return std::nullopt;
  }

  const std::vector<ElemSet>& kind(IdealKind k) {
    auto it = kinds_.find(k);
    if (it == kinds_.end()) {
      it = kinds_.emplace(k, enumerate_kind(m_, k)).first;
    }
    return it->second;
  }

  const std::vector<ElemSet>& subsets() {
    if (subsets_.empty()) {
      const std::uint64_t limit = std::uint64_t{1} << m_.order();
      for (std::uint64_t mask = 1; mask < limit; ++mask) {
        subsets_.push_back(ElemSet::from_mask(m_.order(), mask));
      }
    }
    return subsets_;
  }

  bool all_invertible(Side side) {
    return has_left_identity() && invertible_elements(m_, side).is_full();
  }

  ElemSet prod(const ElemSet& a, const ElemSet& b) const {
    return set_product(m_, a, b);
  }

 private:
  const Magma& m_;
  ElemSet s_;
  bool la_ = false;
  std::optional<ElemId> left_identity_;
  std::optional<IntraReport> intra_;
  std::map<IdealKind, std::vector<ElemSet>> kinds_;
  std::vector<ElemSet> subsets_;
};

struct Evaluation {
  bool hypotheses_met = false;
  bool conclusion = true;  // only meaningful when hypotheses_met
  bool converse = false;
  WitnessData witness;
  std::string notes;
};

using SubsetPred = std::function<bool(const ElemSet&)>;

std::optional<ElemSet> first_failing(const std::vector<ElemSet>& sets,
                                     const SubsetPred& pred) {
  for (const auto& a : sets) {
    if (!pred(a)) return a;
  }
  return std::nullopt;
}

// (i) <=> (ii) evaluated separately per subset; reports the least subset on
// which either direction fails and which direction it was.
struct SubsetIff {
  bool holds = true;
  std::optional<ElemSet> failing;
  std::string_view direction;
};

SubsetIff check_subset_iff(const std::vector<ElemSet>& sets,
                           const SubsetPred& lhs, const SubsetPred& rhs) {
  for (const auto& a : sets) {
    bool l = lhs(a);
    bool r = rhs(a);
    if (l != r) {
      return {false, a, l ? forward_dir : backward_dir};
    }
  }
  return {};
}

// Gate: LA-semigroup with a left identity, plus intra-regularity; the
// conclusion is a statement about subsets. Converse: the conclusion holds
// on a non-intra-regular model with a left identity.
Evaluation gated_subset_theorem(Facts& f, bool conclusion,
                                WitnessData failure) {
  Evaluation ev;
  const bool base = f.la() && f.has_left_identity();
  const bool intra = base && f.intra_regular();
  ev.hypotheses_met = intra;
  ev.conclusion = conclusion;
  ev.converse = base && !intra && conclusion;
  if (!conclusion) ev.witness = std::move(failure);
  if (!base) {
    ev.notes = f.la() ? "no left identity" : "not an LA-semigroup";
  } else if (!intra) {
    ev.notes = "not intra-regular: " +
               f.magma().label(*f.first_non_intra()) + " has no witness";
  }
  return ev;
}

Evaluation gated_subset_iff(Facts& f, const SubsetPred& lhs,
                            const SubsetPred& rhs) {
  auto r = check_subset_iff(f.subsets(), lhs, rhs);
  WitnessData w;
  if (!r.holds) {
    w.subsets = {*r.failing};
    w.direction = std::string(r.direction);
  }
  return gated_subset_theorem(f, r.holds, std::move(w));
}

// Trace identities over a family of subsets: expected(B) == actual(B) for all
// B in the family, on intra-regular LA-semigroups with left identity. When the
// hypotheses fail, proper members satisfying the identity are recorded.
Evaluation trace_theorem(Facts& f, IdealKind family,
                         const std::function<ElemSet(const ElemSet&)>& lhs,
                         const std::function<ElemSet(const ElemSet&)>& rhs,
                         std::string_view identity) {
  Evaluation ev;
  const bool base = f.la() && f.has_left_identity();
  const bool intra = base && f.intra_regular();
  const auto& members = f.kind(family);
  auto failing = first_failing(
      members, [&](const ElemSet& b) { return lhs(b) == rhs(b); });
  ev.hypotheses_met = intra;
  ev.conclusion = !failing.has_value();
  if (failing) ev.witness.subsets = {*failing};

  if (base && !intra) {
    for (const auto& b : members) {
      if (!b.is_full() && lhs(b) == rhs(b)) ev.witness.satisfying.push_back(b);
    }
    ev.converse = !ev.witness.satisfying.empty();
    ev.notes = "not intra-regular: " + f.magma().label(*f.first_non_intra()) +
               " has no witness";
    if (ev.converse) {
      ev.notes += "; converse fails: " + std::string(identity) +
                  " holds for proper subset(s)";
      for (const auto& b : ev.witness.satisfying) {
        ev.notes += " " + format_set(f.magma(), b);
      }
    }
  } else if (!base) {
    ev.notes = f.la() ? "no left identity" : "not an LA-semigroup";
  }
  return ev;
}

// Theorem-level biconditional (i) S intra-regular <=> (ii) property, under a
// base gate. Converse: (ii) holds but (i) fails.
Evaluation intra_iff(Facts& f, bool base, bool property,
                     WitnessData property_failure, std::string base_note) {
  Evaluation ev;
  ev.hypotheses_met = base;
  if (!base) {
    ev.notes = std::move(base_note);
    return ev;
  }
  const bool intra = f.intra_regular();
  ev.conclusion = intra == property;
  ev.converse = property && !intra;
  if (intra && !property) {
    ev.witness = std::move(property_failure);
    ev.witness.direction = std::string(forward_dir);
  } else if (property && !intra) {
    ev.witness.element = f.first_non_intra();
    ev.witness.direction = std::string(backward_dir);
  }
  return ev;
}

std::string la_note(Facts& f, std::string_view otherwise) {
  if (!f.la()) return "not an LA-semigroup";
  return std::string(otherwise);
}

Evaluation evaluate(Facts& f, TheoremId t) {
  const Magma& m = f.magma();
  const ElemSet& s = f.s();
  auto prod = [&f](const ElemSet& a, const ElemSet& b) {
    return f.prod(a, b);
  };

  switch (t) {
    case TheoremId::T_INVERTIBLE_INTRA: {
      Evaluation ev;
      const bool base = f.la() && f.has_left_identity();
      const bool invertible = base && (f.all_invertible(Side::Left) ||
                                       f.all_invertible(Side::Right));
      ev.hypotheses_met = invertible;
      ev.conclusion = f.intra_regular();
      ev.converse = base && !invertible && f.intra_regular();
      if (!ev.conclusion) ev.witness.element = f.first_non_intra();
      if (!base) {
        ev.notes = la_note(f, "no left identity");
      } else if (!invertible) {
        ev.notes = "neither left nor right invertible";
      }
      return ev;
    }

    case TheoremId::T_SA_EQ_S:
    case TheoremId::C_AS_IMPLIES_SA: {
      std::optional<ElemId> sa_fails;
      std::optional<ElemId> as_fails;
      for (std::size_t i = 0; i < m.order(); ++i) {
        if (!sa_fails && m.column_image(elem(i)) != s) sa_fails = elem(i);
        if (!as_fails && m.row_image(elem(i)) != s) as_fails = elem(i);
      }
      const bool all_sa = !sa_fails;
      const bool all_as = !as_fails;
      Evaluation ev;
      if (t == TheoremId::T_SA_EQ_S) {
        const bool hyp = all_sa || all_as;
        ev.hypotheses_met = f.la() && hyp;
        ev.conclusion = f.intra_regular();
        ev.converse = f.la() && !hyp && f.intra_regular();
        if (!hyp) {
          ev.witness.element = sa_fails;
        } else if (!ev.conclusion) {
          ev.witness.element = f.first_non_intra();
        }
        if (!f.la()) {
          ev.notes = "not an LA-semigroup";
        } else if (!hyp) {
          ev.notes = "Sa != S for " + m.label(*sa_fails) + " and aS != S for " +
                     m.label(*as_fails);
        }
      } else {
        ev.hypotheses_met = f.la() && all_as;
        ev.conclusion = all_sa;
        ev.converse = f.la() && all_sa && !all_as;
        if (!all_sa) ev.witness.element = sa_fails;
        if (!f.la()) {
          ev.notes = "not an LA-semigroup";
        } else if (!all_as) {
          ev.notes = "aS != S for " + m.label(*as_fails);
        }
      }
      return ev;
    }

    case TheoremId::T_BI_TRACE:
      return trace_theorem(
          f, IdealKind::GeneralizedBi,
          [&](const ElemSet& b) { return prod(prod(b, s), b); },
          [&](const ElemSet& b) { return b & s; }, "(BS)B = B ∩ S");
    case TheoremId::C_BI_TRACE:
      return trace_theorem(
          f, IdealKind::GeneralizedBi,
          [&](const ElemSet& b) { return prod(prod(b, s), b); },
          [&](const ElemSet& b) { return b; }, "(BS)B = B");
    case TheoremId::T_INTERIOR_TRACE:
      return trace_theorem(
          f, IdealKind::Interior,
          [&](const ElemSet& b) { return prod(prod(s, b), s); },
          [&](const ElemSet& b) { return s & b; }, "(SB)S = S ∩ B");
    case TheoremId::C_INTERIOR_TRACE:
      return trace_theorem(
          f, IdealKind::Interior,
          [&](const ElemSet& b) { return prod(prod(s, b), s); },
          [&](const ElemSet& b) { return b; }, "(SB)S = B");

    case TheoremId::T_LR_UNION: {
      Evaluation ev;
      const bool base = f.la() && f.has_left_identity();
      ev.notes =
          "hypothesis quantified over all pairs (L left ideal, R semiprime "
          "right ideal)";
      if (!base) {
        ev.notes = la_note(f, "no left identity");
        return ev;
      }
      std::optional<std::pair<ElemSet, ElemSet>> failing_pair;
      for (const auto& l : f.kind(IdealKind::Left)) {
        for (const auto& r : f.kind(IdealKind::Right)) {
          if (!is_semiprime(m, r)) continue;
          if ((l | r) != prod(l, r)) {
            failing_pair = {l, r};
            break;
          }
        }
        if (failing_pair) break;
      }
      const bool hyp = !failing_pair;
      ev.hypotheses_met = hyp;
      ev.conclusion = f.intra_regular();
      ev.converse = !hyp && f.intra_regular();
      if (!ev.conclusion) {
        ev.witness.element = f.first_non_intra();
      } else if (failing_pair) {
        ev.witness.subsets = {failing_pair->first, failing_pair->second};
      }
      if (failing_pair) {
        ev.notes += "; L ∪ R != LR for L=" +
                    format_set(m, failing_pair->first) +
                    ", R=" + format_set(m, failing_pair->second);
      }
      if (!ev.conclusion) {
        std::string proper;
        for (const auto& a : f.kind(IdealKind::TwoSided)) {
          if (a.is_full()) continue;
          proper += " " + format_set(m, a);
          if (is_semiprime(m, a)) proper += "*";
        }
        if (!proper.empty()) {
          ev.notes += "; proper left-and-right ideals (* semiprime):" + proper;
        }
      }
      return ev;
    }

    case TheoremId::T_EQUIV_RL: {
      const bool base = f.la() && f.has_left_identity() &&
                        f.all_invertible(Side::Left);
      std::optional<std::pair<ElemSet, ElemSet>> failing_pair;
      if (base) {
        for (const auto& r : f.kind(IdealKind::Right)) {
          for (const auto& l : f.kind(IdealKind::Left)) {
            if ((r & l) != prod(r, l)) {
              failing_pair = {r, l};
              break;
            }
          }
          if (failing_pair) break;
        }
      }
      WitnessData w;
      if (failing_pair) w.subsets = {failing_pair->first, failing_pair->second};
      std::string note =
          !f.la() ? "not an LA-semigroup"
          : !f.has_left_identity() ? "no left identity"
                                   : "not left invertible";
      auto ev = intra_iff(f, base, !failing_pair, std::move(w), note);
      if (base) ev.notes = "R ranges over right ideals, L over left ideals";
      return ev;
    }

    case TheoremId::T_LEFT_IDEAL_SQ: {
      const bool base = f.la() && f.has_left_identity();
      std::optional<ElemSet> failing;
      if (base) {
        failing = first_failing(f.kind(IdealKind::Left), [&](const ElemSet& a) {
          ElemSet sa = prod(s, a);
          return prod(sa, sa) == a;
        });
      }
      WitnessData w;
      if (failing) w.subsets = {*failing};
      return intra_iff(f, base, !failing, std::move(w),
                       la_note(f, "no left identity"));
    }

    case TheoremId::L_INTRA_IFF_IDEMP: {
      std::optional<ElemSet> failing;
      if (f.la()) {
        failing = first_failing(f.kind(IdealKind::Left), [&](const ElemSet& a) {
          return prod(a, a) == a;
        });
      }
      WitnessData w;
      if (failing) w.subsets = {*failing};
      return intra_iff(f, f.la(), !failing, std::move(w),
                       "not an LA-semigroup");
    }

    case TheoremId::T_BI_EQUIV: {
      auto ii = [&](const ElemSet& a) {
        return prod(prod(a, s), a) == a && prod(a, a) == a;
      };
      auto bi = check_subset_iff(
          f.subsets(), [&](const ElemSet& a) { return is_kind(m, a, IdealKind::Bi); },
          ii);
      auto gbi = check_subset_iff(
          f.subsets(),
          [&](const ElemSet& a) {
            return is_kind(m, a, IdealKind::GeneralizedBi);
          },
          ii);
      WitnessData w;
      const SubsetIff& bad = !bi.holds ? bi : gbi;
      if (!bad.holds) {
        w.subsets = {*bad.failing};
        w.direction = std::string(bad.direction);
      }
      auto ev = gated_subset_theorem(f, bi.holds && gbi.holds, std::move(w));
      if (!bi.holds) {
        ev.notes += ev.notes.empty() ? "bi-ideal form fails" : "; bi-ideal form fails";
      } else if (!gbi.holds) {
        ev.notes += ev.notes.empty() ? "generalized bi-ideal form fails"
                                     : "; generalized bi-ideal form fails";
      }
      return ev;
    }

    case TheoremId::T_QUASI_EQUIV: {
      auto ev = gated_subset_iff(
          f, [&](const ElemSet& a) { return is_kind(m, a, IdealKind::Quasi); },
          [&](const ElemSet& a) { return (prod(s, a) & prod(a, s)) == a; });
      ev.notes += ev.notes.empty() ? "Q read as A" : "; Q read as A";
      return ev;
    }

    case TheoremId::T_INTERIOR_EQUIV:
      return gated_subset_iff(
          f,
          [&](const ElemSet& a) { return is_kind(m, a, IdealKind::Interior); },
          [&](const ElemSet& a) { return prod(prod(s, a), s) == a; });

    case TheoremId::T_ONETWO_EQUIV:
      return gated_subset_iff(
          f, [&](const ElemSet& a) { return is_kind(m, a, IdealKind::OneTwo); },
          [&](const ElemSet& a) {
            ElemSet aa = prod(a, a);
            return prod(prod(a, s), aa) == a && aa == a;
          });

    case TheoremId::T_ONETWO_TWOSIDED:
      return gated_subset_iff(
          f, [&](const ElemSet& a) { return is_kind(m, a, IdealKind::OneTwo); },
          [&](const ElemSet& a) {
            return is_kind(m, a, IdealKind::TwoSided);
          });

    case TheoremId::L_LEFT_IFF_RIGHT:
      return gated_subset_iff(
          f, [&](const ElemSet& a) { return is_kind(m, a, IdealKind::Left); },
          [&](const ElemSet& a) { return is_kind(m, a, IdealKind::Right); });

    case TheoremId::L_QUASI_IFF_TWOSIDED:
      return gated_subset_iff(
          f,
          [&](const ElemSet& a) { return is_kind(m, a, IdealKind::TwoSided); },
          [&](const ElemSet& a) { return is_kind(m, a, IdealKind::Quasi); });

    case TheoremId::L_IDEAL_IDEMP: {
      auto failing = first_failing(
          f.kind(IdealKind::TwoSided),
          [&](const ElemSet& a) { return prod(a, a) == a; });
      WitnessData w;
      if (failing) w.subsets = {*failing};
      return gated_subset_theorem(f, !failing, std::move(w));
    }

    case TheoremId::L_S_SQUARED: {
      Evaluation ev;
      const ElemSet ss = prod(s, s);
      ev.hypotheses_met = f.la() && f.intra_regular();
      ev.conclusion = ss == s;
      ev.converse = f.la() && !f.intra_regular() && ss == s;
      if (!ev.conclusion) ev.witness.element = *(s - ss).begin();
      if (!f.la()) {
        ev.notes = "not an LA-semigroup";
      } else if (!f.intra_regular()) {
        ev.notes = "not intra-regular: " + m.label(*f.first_non_intra()) +
                   " has no witness";
      }
      return ev;
    }

    case TheoremId::T_MINIMAL_INTERSECTION: {
      const auto& two_sided = f.kind(IdealKind::TwoSided);
      const auto minimal = minimal_ideals(m, IdealKind::TwoSided);
      auto is_minimal = [&](const ElemSet& q) {
        for (const auto& x : minimal) {
          if (x == q) return true;
        }
        return false;
      };
      auto is_two_sided = [&](const ElemSet& q) {
        for (const auto& x : two_sided) {
          if (x == q) return true;
        }
        return false;
      };
      WitnessData w;
      bool holds = true;
      // Every minimal Q is I ∩ J for minimal I, J.
      for (const auto& q : minimal) {
        bool found = false;
        for (const auto& i : minimal) {
          for (const auto& j : minimal) {
            found = found || (i & j) == q;
          }
        }
        if (!found) {
          holds = false;
          w.subsets = {q};
          w.direction = std::string(forward_dir);
          break;
        }
      }
      // Every two-sided I ∩ J with I, J minimal is minimal.
      for (std::size_t x = 0; holds && x < minimal.size(); ++x) {
        for (std::size_t y = 0; holds && y < minimal.size(); ++y) {
          ElemSet q = minimal[x] & minimal[y];
          if (q.empty() || !is_two_sided(q)) continue;
          if (!is_minimal(q)) {
            holds = false;
            w.subsets = {minimal[x], minimal[y]};
            w.direction = std::string(backward_dir);
          }
        }
      }
      auto ev = gated_subset_theorem(f, holds, std::move(w));
      ev.notes += ev.notes.empty() ? "minimality among all two-sided ideals"
                                   : "; minimality among all two-sided ideals";
      return ev;
    }
  }
  return {};
}

VerificationReport to_report(TheoremId t, Evaluation ev) {
  VerificationReport r;
  r.theorem = t;
  r.hypotheses_met = ev.hypotheses_met;
  if (ev.hypotheses_met) {
    r.conclusion_holds = ev.conclusion;
    if (ev.conclusion) {
      // Failure witnesses are meaningless once the conclusion holds.
      ev.witness.subsets.clear();
      ev.witness.element.reset();
      ev.witness.direction.reset();
    }
  }
  r.witness = std::move(ev.witness);
  r.notes = std::move(ev.notes);
  return r;
}

}  // namespace

VerificationReport verify(const Magma& m, TheoremId t) {
  Facts f(m);
  return to_report(t, evaluate(f, t));
}

std::vector<VerificationReport> run_all(const Magma& m) {
  Facts f(m);
  std::vector<VerificationReport> out;
  out.reserve(theorem_count);
  for (TheoremId t : all_theorems) {
    out.push_back(to_report(t, evaluate(f, t)));
  }
  return out;
}

bool is_counterexample(const Magma& m, TheoremId t, SearchMode mode) {
  Facts f(m);
  Evaluation ev = evaluate(f, t);
  if (mode == SearchMode::Forward) {
    return ev.hypotheses_met && !ev.conclusion;
  }
  return ev.converse;
}

std::optional<Magma> search_counterexample(std::span<const Magma> corpus,
                                           TheoremId t, SearchMode mode) {
  for (const auto& m : corpus) {
    if (is_counterexample(m, t, mode)) return m;
  }
  return std::nullopt;
}

std::optional<Magma> search_counterexample(std::size_t min_order,
                                           std::size_t max_order,
                                           TheoremId t, SearchMode mode) {
  if (max_order > max_enumeration_order) {
    throw OrderTooLarge(max_order, max_enumeration_order);
  }
  for (std::size_t n = std::max<std::size_t>(min_order, 1); n <= max_order;
       ++n) {
    SearchConfig cfg{n, true, {}, 1};
    auto found = find_model(
        cfg, [&](const Magma& m) { return is_counterexample(m, t, mode); });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace lasg
