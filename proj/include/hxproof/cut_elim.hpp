// Cut elimination as a rewriting of derivation trees.
//
// reduce_once visits the cuts by decreasing complexity (deepest first on
// ties) and applies the first reduction after which the multiset of cut
// complexities of the whole derivation is smaller. The reductions tried
// on a cut, in order:
//   axiom      the cut formula is already on the far side, or a premiss
//              is a closed leaf that also closes the conclusion
//   weakening  a premiss is WL/WR; the weakening is dropped
//   permute    the cut moves above the last rule of the left, then the
//              right premiss (eigen-nominals renamed apart first); a cut
//              on a smaller formula may be passed
//   principal  ImpR/ImpL, AtR/AtL, NEqR/NEqL, DiaR/DiaL, CmpR/CmpL
//   right-right  the left premiss ends in DiaR on @i<a>j; S2 rebuilds it
//   search     the cut's conclusion is re-proved without Cut
// When no cut admits a decreasing reduction, the nearest ancestor of the
// greatest cut with a cut-free proof is re-proved; failing that, the
// first valid reduction is taken. Weakenings added by the reductions are
// pushed to the leaves, so they do not raise heights.
//
// Derived steps count as rules. A macro whose expansion contains a Cut
// is expanded first when the cuts of its expansion can be removed; the
// others stay as opaque steps.

#ifndef HXPROOF_CUT_ELIM_HPP_
#define HXPROOF_CUT_ELIM_HPP_

#include <compare>
#include <string>
#include <vector>

#include "hxproof/kernel.hpp"
#include "hxproof/search.hpp"

namespace hxp {

struct CutComplexity {
  std::size_t k = 0;  // size of the cut formula
  std::size_t h = 0;  // cut height
  friend auto operator<=>(const CutComplexity&, const CutComplexity&) = default;
};

CutComplexity cut_complexity(const Derivation& cut_node);

// Complexities of every Cut occurrence, largest first.
std::vector<CutComplexity> cut_measure(const Derivation& d);
// Multiset extension of the lexicographic order on complexities.
bool measure_less(const std::vector<CutComplexity>& a, const std::vector<CutComplexity>& b);

struct CutStep {
  std::string family;
  CutComplexity reduced;
  std::vector<CutComplexity> before, after;
};

struct CutElimOptions {
  bool expand_cut_macros = true;
  bool search_fallback = true;
  std::size_t max_steps = 100000;
  SearchConfig fallback;  // Cut is always disabled in it
};

class CutElimError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws CutElimError when `d` has no Cut or the selected cut resists
// every reduction.
Derivation reduce_once(const Derivation& d, CutStep* step = nullptr, const CutElimOptions& opt = {});

// Result has no Cut node and the end-sequent of `d`.
Derivation eliminate_cuts(const Derivation& d, const CutElimOptions& opt = {},
                          std::vector<CutStep>* trace = nullptr);

std::string to_string(const CutComplexity& c);

}  // namespace hxp

#endif  // HXPROOF_CUT_ELIM_HPP_
