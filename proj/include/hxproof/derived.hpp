// Derived rules expanded into primitive derivation fragments.
//
// A fragment proves the macro's conclusion from its premisses, which
// appear as Open leaves in left-to-right order. Expansion is a pure
// function of (name, goal, instance); eigen-nominals are the smallest
// `_n<k>` unused by the goal and the instance.
//
//   name     principal / params           premisses
//   AxG      [φ]                          none; φ on both sides
//   AxS      [@ij, @iφ]                   none; @jφ on the right
//   TopL     {i}                          @i⊤, Γ ⊢ Δ
//   AndL     [@i(φ∧ψ)]                    @iφ, @iψ, Γ ⊢ Δ
//   AndR     [@i(φ∧ψ)]                    Γ ⊢ Δ, @iφ  and  Γ ⊢ Δ, @iψ
//   IffR     [@i(φ↔ψ)]                    @iφ, Γ ⊢ Δ, @iψ  and  @iψ, Γ ⊢ Δ, @iφ
//   CmpB     [<i:▲j:>]                    <j:▲i:>, Γ ⊢ Δ
//   InvAndL  [@iφ, @iψ]                   @i(φ∧ψ), Γ ⊢ Δ
//   InvImpR  [@iφ, @iψ]                   Γ ⊢ Δ, @i(φ→ψ)
//   InvAtL   [@iφ] {j}                    @j@iφ, Γ ⊢ Δ
//   InvDiaL  [@i<a>j, @jφ]                @i<a>φ, Γ ⊢ Δ
//   InvCmpL  [@i<α▲β>] {j, k}             @i<α▲β>, Γ ⊢ Δ
//   Nom1     [@jφ] {i}                    Γ ⊢ Δ, @ij  and  Γ ⊢ Δ, @iφ
//   Nom2     {i, j, k, a}                 Γ ⊢ Δ, @ij;  Γ ⊢ Δ, @i<a>k;  @j<a>k, Γ ⊢ Δ
//   BoxL     [@i[a]φ] {j}                 Γ ⊢ Δ, @i<a>j  and  @jφ, Γ ⊢ Δ
//   BoxR     [@i[a]φ] {j}                 @i<a>j, Γ ⊢ Δ, @jφ
//
// Conclusions hold the principals listed; Γ and Δ are the rest of the
// goal. Premisses drop the principal the rule decomposes.

#ifndef HXPROOF_DERIVED_HPP_
#define HXPROOF_DERIVED_HPP_

#include <string>
#include <vector>

#include "hxproof/kernel.hpp"

namespace hxp {

class MacroError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Derivation expand_macro(const std::string& name, const Sequent& goal, const RuleInstance& ri);
const std::vector<std::string>& macro_names();

// Macro node over `goal` whose children are produced from the premisses.
template <typename F>
Derivation by_macro(const Sequent& goal, const RuleInstance& ri, F&& kids) {
  return by(goal, ri, std::forward<F>(kids));
}

// Closed proof of φ, Γ ⊢ Δ, φ (as a single Derived node).
Derivation axg(const Sequent& goal, const Node& phi);

// Decomposition of @i<α>φ by the generalized diamond rules. On the left
// the single open leaf holds the fully decomposed witnesses; on the right
// atomic steps use every @x<a>y already in the antecedent and tests split
// the goal in two.
// The principal is @i dia_path(α, φ).
Derivation general_dia(const Sequent& goal, const std::string& i, const Path& alpha,
                       const Node& phi, Side side);

// Replaces every Derived node by its primitive expansion.
Derivation expand_macros(const Derivation& d);

// Smallest `_n<k>` not in `avoid`, plus `count - 1` more after it.
std::vector<std::string> eigen_nominals(const std::set<std::string>& avoid, std::size_t count);

}  // namespace hxp

#endif  // HXPROOF_DERIVED_HPP_
