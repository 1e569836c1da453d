// Bounded backward proof search, inverse-rule constructions and the
// hand-built derivations of the comparison axioms.
//
// Every rule of the calculus is invertible, so the search never
// backtracks over rule choice. A goal is saturated in this order:
//   1. closure by Ax, Bot or a generalized axiom
//   2. one-premiss decompositions (ImpR, AtL, AtR, NEqL, NEqR)
//   3. left closure rules (AtT, At5, S1, S2, S3, EqT, Eq5), each fired
//      only when it adds a new formula
//   4. right witness rules DiaR and CmpR over witnesses already present
//   5. ImpL
//   6. DiaL and CmpL, within the fresh-nominal budget
//   7. CmpR with compound paths, whose witnesses are first cut in
// Nom is never used. `max_depth` bounds the steps of kinds 2, 5, 6 and 7
// along a branch; the other kinds are bounded by the nominals present.

#ifndef HXPROOF_SEARCH_HPP_
#define HXPROOF_SEARCH_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hxproof/kernel.hpp"
#include "hxproof/model.hpp"

namespace hxp {

struct SearchConfig {
  int max_depth = 64;
  int max_fresh_nominals = 8;
  // Total rule applications before giving up.
  std::size_t max_steps = 200000;
  bool enable_countermodel = true;
  std::size_t countermodel_nodes = 3;
  // Rules the search may not use; Nom is always excluded.
  std::set<RuleId> disabled;
  // Close goals with the AxG macro when a compound formula occurs on
  // both sides.
  bool use_generalized_axiom = true;
};

struct SearchResult {
  enum class Status { Proved, Refuted, Unknown };
  Status status = Status::Unknown;
  Derivation proof;                      // Proved
  std::optional<HybridDataModel> model;  // Refuted
  std::string report;                    // Unknown: which bound was hit
  std::size_t steps = 0;
};

const char* to_string(SearchResult::Status s);

SearchResult prove(const Sequent& goal, const SearchConfig& cfg = {});

// Derivations of each premiss of `ri` applied to `d`'s end-sequent, in
// the order of apply_rule. Throws RuleError when `ri` does not apply.
std::vector<Derivation> invert(RuleId rule, const Derivation& d, const RuleInstance& ri);

// reflexivity, symmetry, transitivity, paste, nom2.
std::map<std::string, Derivation> prove_axiom_suite();

// The individual constructions behind the suite. `i` is the evaluation
// nominal, `c` the comparison, `a`/`b` atomic modalities.
Derivation reflexivity_derivation(const std::string& i = "i", const std::string& c = "c");
Derivation symmetry_derivation(const std::string& i = "i", const std::string& a = "a",
                               const std::string& b = "b", CmpKind kind = CmpKind::Eq,
                               const std::string& c = "c");
Derivation transitivity_derivation(const Path& alpha, const Path& beta, const std::string& i = "i",
                                   const std::string& c = "c");
// Paste: from a proof of ⊢ @i((@j<a>k ∧ <k:α ▲ β>) → χ) to one of
// ⊢ @i(<j: a α ▲ β> → χ). Without `hypothesis` its premiss stays Open.
// k and the comparison witnesses are renamed apart from χ, α and β.
Derivation paste_derivation(const std::string& a, const Node& chi, const Path& alpha, const Path& beta,
                            CmpKind kind = CmpKind::Eq, const std::string& c = "c",
                            const Derivation& hypothesis = nullptr);
// Premiss of paste_derivation for the same arguments.
Sequent paste_hypothesis(const std::string& a, const Node& chi, const Path& alpha, const Path& beta,
                         CmpKind kind = CmpKind::Eq, const std::string& c = "c");
// @ij, @i<a>k ⊢ @j<a>k through the Nom2 simulation.
Derivation nom2_derivation();

}  // namespace hxp

#endif  // HXPROOF_SEARCH_HPP_
