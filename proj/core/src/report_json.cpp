#include "lasg/report_json.hpp"

namespace lasg {

Json set_to_json(const Magma& m, const ElemSet& a) {
  Json out = Json::array();
  for (ElemId e : a) out.push_back(m.label(e));
  return out;
}

Json to_json(const Magma& m, const VerificationReport& r) {
  Json j;
  j["theorem"] = std::string(theorem_name(r.theorem));
  j["hypotheses_met"] = r.hypotheses_met;
  j["conclusion_holds"] =
      r.conclusion_holds ? Json(*r.conclusion_holds) : Json(nullptr);
  if (r.witness.empty()) {
    j["witness"] = nullptr;
  } else {
    Json w = Json::object();
    if (r.witness.element) w["element"] = m.label(*r.witness.element);
    if (!r.witness.subsets.empty()) {
      Json subsets = Json::array();
      for (const auto& s : r.witness.subsets) {
        subsets.push_back(set_to_json(m, s));
      }
      w["subsets"] = std::move(subsets);
    }
    if (r.witness.direction) w["direction"] = *r.witness.direction;
    if (!r.witness.satisfying.empty()) {
      Json sat = Json::array();
      for (const auto& s : r.witness.satisfying) {
        sat.push_back(set_to_json(m, s));
      }
      w["satisfying"] = std::move(sat);
    }
    j["witness"] = std::move(w);
  }
  j["notes"] = r.notes;
  return j;
}

Json to_json(const Magma& m, const LawReport& r) {
  Json j;
  j["law"] = std::string(law_name(r.law));
  j["holds"] = r.holds;
  if (r.counterexample) {
    Json tuple = Json::array();
    for (ElemId e : *r.counterexample) tuple.push_back(m.label(e));
    j["counterexample"] = std::move(tuple);
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

Json to_json(const Magma& m, const IdealClassification& c) {
  Json j;
  j["subset"] = set_to_json(m, c.subset);
  Json flags;
  for (IdealKind k : all_ideal_kinds) {
    flags[std::string(kind_name(k))] = c[k];
  }
  j["kinds"] = std::move(flags);
  j["semiprime"] = c.semiprime;
  j["idempotent"] = c.idempotent;
  return j;
}

Json to_json(const Magma& m, const IntraReport& r) {
  Json j;
  j["intra_regular"] = r.intra_regular;
  Json ws = Json::array();
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    Json w;
    w["element"] = m.labels()[i];
    if (r.witnesses[i]) {
      w["x"] = m.label(r.witnesses[i]->x);
      w["y"] = m.label(r.witnesses[i]->y);
    } else {
      w["x"] = nullptr;
      w["y"] = nullptr;
    }
    ws.push_back(std::move(w));
  }
  j["witnesses"] = std::move(ws);
  return j;
}

namespace {

template <std::size_t N>
Json values(const std::optional<std::array<Rational, N>>& v) {
  if (!v) return nullptr;
  Json out = Json::array();
  for (const auto& q : *v) out.push_back(to_string(q));
  return out;
}

}  // namespace

Json to_json(const AffineReport& r) {
  Json j;
  j["left_invertive"] = r.left_invertive.holds;
  j["left_invertive_failure"] = values(r.left_invertive_failure);
  j["triples_checked"] = r.triples_checked;
  j["non_commutative"] = values(r.non_commutative);
  j["non_associative"] = values(r.non_associative);
  return j;
}

Json magma_to_json(const Magma& m) {
  Json j;
  j["order"] = m.order();
  j["labels"] = m.labels();
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.order(); ++k) {
      row.push_back(m.label(m.product(elem(i), elem(k))));
    }
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return j;
}

}  // namespace lasg
