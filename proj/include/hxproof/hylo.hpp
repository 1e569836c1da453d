// Basic hybrid logic H(@) inside the calculus: the fragment test, proof
// search without the comparison rules, and the rules of the reference
// hybrid-logic sequent calculus as derived rules.

#ifndef HXPROOF_HYLO_HPP_
#define HXPROOF_HYLO_HPP_

#include <string>

#include "hxproof/search.hpp"

namespace hxp {

// No comparisons and no path operators.
bool is_hylo(const Node& e);
bool is_hylo(const Sequent& s);

class FragmentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rules dropped from the calculus for H(@).
const std::set<RuleId>& comparison_rules();

// prove() with the comparison rules disabled. Throws FragmentError when
// the goal leaves the fragment.
SearchResult prove_hylo(const Sequent& goal, SearchConfig cfg = {});

// Fragment for one step of the reference calculus, over `goal`, whose
// open leaves are that step's premisses.
//   rule  principal / params    fragment
//   Ref   {i}                   AtT
//   AndL  [@i(φ∧ψ)]             AndL macro
//   AndR  [@i(φ∧ψ)]             AndR macro
//   Nom1  [@jφ] {i}             Nom1 macro
//   Nom2  {i, j, k, a}          Nom2 macro
//   BoxL  [@i[a]φ] {j}          BoxL macro
//   BoxR  [@i[a]φ] {j}          BoxR macro
// Throws FragmentError for other names, MacroError/RuleError on mismatch.
Derivation simulate_brauner(const std::string& rule, const Sequent& goal, const RuleInstance& ri);

}  // namespace hxp

#endif  // HXPROOF_HYLO_HPP_
