#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lasg/magma.hpp"

namespace lasg {

// One entry per result about LA-semigroups (theorems, corollaries, lemmas).
// The enum order is the report order of run_all.
enum class TheoremId {
  T_INVERTIBLE_INTRA,   // left identity, left/right invertible => intra-reg.
  T_SA_EQ_S,            // Sa = S for all a, or aS = S for all a => intra-reg.
  C_AS_IMPLIES_SA,      // aS = S for all a => Sa = S for all a
  T_BI_TRACE,           // (BS)B = B ∩ S for (generalized) bi-ideals B
  C_BI_TRACE,           // (BS)B = B
  T_INTERIOR_TRACE,     // (SB)S = S ∩ B for interior ideals B
  C_INTERIOR_TRACE,     // (SB)S = B
  T_LR_UNION,           // L ∪ R = LR (R semiprime) => intra-regular
  T_EQUIV_RL,           // left invertible: intra-reg. <=> R ∩ L = RL
  T_LEFT_IDEAL_SQ,      // intra-reg. <=> A = (SA)^2 for left ideals A
  T_BI_EQUIV,           // A gen. bi-ideal <=> (AS)A = A and A^2 = A
  T_QUASI_EQUIV,        // A quasi <=> SA ∩ AS = A
  T_INTERIOR_EQUIV,     // A interior <=> (SA)S = A
  T_ONETWO_EQUIV,       // A (1,2)-ideal <=> (AS)A^2 = A and A^2 = A
  T_ONETWO_TWOSIDED,    // A (1,2)-ideal <=> A two-sided
  L_S_SQUARED,          // intra-regular => S = S^2
  L_IDEAL_IDEMP,        // two-sided ideals are idempotent
  L_LEFT_IFF_RIGHT,     // left ideal <=> right ideal
  L_INTRA_IFF_IDEMP,    // intra-reg. <=> every left ideal idempotent
  L_QUASI_IFF_TWOSIDED, // two-sided <=> quasi
  T_MINIMAL_INTERSECTION,  // minimal <=> intersection of two minimal ideals
};

inline constexpr std::size_t theorem_count = 21;
extern const std::array<TheoremId, theorem_count> all_theorems;

std::string_view theorem_name(TheoremId t) noexcept;
std::optional<TheoremId> parse_theorem(std::string_view name) noexcept;

// Structured evidence attached to a report. Which fields are filled depends
// on the theorem; everything empty serializes as null.
struct WitnessData {
  std::optional<ElemId> element;
  // Offending subset(s): A; or the pair (L, R); or (I, J).
  std::vector<ElemSet> subsets;
  // "(i)=>(ii)" or "(ii)=>(i)" for biconditionals.
  std::optional<std::string> direction;
  // Subsets on which the conclusion-side property holds although the
  // hypotheses do not (converse remarks).
  std::vector<ElemSet> satisfying;

  bool empty() const noexcept {
    return !element && subsets.empty() && !direction && satisfying.empty();
  }
};

struct VerificationReport {
  TheoremId theorem;
  bool hypotheses_met = false;
  std::optional<bool> conclusion_holds;  // present iff hypotheses_met
  WitnessData witness;
  std::string notes;
};

// Throws OrderTooLarge when the magma exceeds max_scan_order.
VerificationReport verify(const Magma& m, TheoremId t);
std::vector<VerificationReport> run_all(const Magma& m);

enum class SearchMode {
  // Hypotheses hold, conclusion fails. Expected never to succeed.
  Forward,
  // Conclusion-side property holds while the hypothesis-side property
  // fails (with the structural gates such as "has a left identity" kept).
  Converse,
};

// Whether m is a counterexample of the given mode for t.
bool is_counterexample(const Magma& m, TheoremId t, SearchMode mode);

// First counterexample in `corpus` order.
std::optional<Magma> search_counterexample(std::span<const Magma> corpus,
                                           TheoremId t, SearchMode mode);

// Searches the LA-semigroups of orders min_order..max_order, up to
// isomorphism, in enumeration order. Throws OrderTooLarge past the
// enumeration limit.
std::optional<Magma> search_counterexample(std::size_t min_order,
                                           std::size_t max_order,
                                           TheoremId t, SearchMode mode);

}  // namespace lasg
