// Rules of the sequent calculus as checked inference steps, derivation
// trees and the derivation checker.

#ifndef HXPROOF_KERNEL_HPP_
#define HXPROOF_KERNEL_HPP_

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hxproof/sequent.hpp"
#include "hxproof/syntax.hpp"

namespace hxp {

enum class RuleId {
  Ax, Bot, ImpL, ImpR, AtT, At5, Nom, S1, S2, S3, AtL, AtR, DiaL, DiaR,
  CmpL, CmpR, EqT, Eq5, NEqL, NEqR, Cut, WL, WR,
  Derived,  // macro step, validated by expansion
  Open,     // unproved premiss inside a fragment
};

const char* rule_name(RuleId r);
std::optional<RuleId> rule_from_name(const std::string& name);
bool is_structural(RuleId r);  // Cut, WL, WR
// Rules whose backward reading removes the principal from the goal.
bool consumes_principal(RuleId r);
// Side of principal(0) for the consuming rules.
Side principal_side(RuleId r);
// Rules that mention data comparisons.
bool is_comparison_rule(RuleId r);

// Principal formulas and metavariables per rule:
//   Ax [φ]            Bot [@i⊥]           ImpL/ImpR [@i(φ→ψ)]
//   AtT {i}           At5 [@ij, @ik]      Nom {i, j}
//   S1 [@ij, @iφ]     S2 [@jk, @i<a>j]    S3 [@ij, <i:=ck:>]
//   AtL/AtR [@j@iφ]   DiaL [@i<a>φ] {j}   DiaR [@i<a>j, @i<a>φ]
//   CmpL [@i<α▲β>] {j, k}                 CmpR [@i<α▲β>] {j, k}
//   EqT {i, c}        Eq5 [<i:=cj:>, <i:=ck:>]
//   NEqL/NEqR [<i:≠cj:>]                  Cut [φ]     WL/WR [φ, ...]
//   Derived: `macro` names the expansion; principal/params are its own.
struct RuleInstance {
  RuleId rule = RuleId::Open;
  std::vector<Node> principal;
  std::map<std::string, std::string> params;
  std::string macro;

  std::string param(const std::string& key) const;  // throws RuleError if absent
};

class RuleError : public std::runtime_error {
 public:
  enum Kind { PrincipalMissing, SideCondition, Shape, Schema };
  RuleError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
  Kind kind;
};

struct DerivationNode;
using Derivation = std::shared_ptr<const DerivationNode>;

struct DerivationNode {
  Sequent conclusion;
  RuleInstance inst;
  std::vector<Derivation> children;
};

Derivation make_node(Sequent conclusion, RuleInstance inst, std::vector<Derivation> children = {});
Derivation open_leaf(Sequent s);

// Premisses of `goal` under `inst`, read backwards. For Cut the premisses
// share the goal's context; for WL/WR the principals are dropped.
// Throws RuleError when a principal is missing or a side condition fails.
std::vector<Sequent> apply_rule(const Sequent& goal, const RuleInstance& inst);

struct Violation {
  std::vector<std::size_t> path;  // child indices from the root
  std::string cause;
};

struct CheckOptions {
  bool allow_open = false;
};

// Empty result means the derivation is correct.
std::vector<Violation> check_derivation(const Derivation& d, CheckOptions opt = {});
bool is_valid_derivation(const Derivation& d, CheckOptions opt = {});
// Verifies only the root step against its children's conclusions.
std::optional<std::string> check_step(const Derivation& d);

// Forward composition. `cut` removes φ from the left succedent and from
// the right antecedent contributions.
Derivation cut(const Derivation& left, const Derivation& right, const Node& phi);
Derivation weaken(const Derivation& d, Side side, const Node& phi);
Derivation weaken(const Derivation& d, Side side, const std::vector<Node>& phis);
// Adds WL/WR steps so that the end-sequent becomes `target`; requires
// d's end-sequent to be included in `target`.
Derivation weaken_to(const Derivation& d, const Sequent& target);

// Convenience constructors for instances.
RuleInstance inst(RuleId r, std::vector<Node> principal = {},
                  std::map<std::string, std::string> params = {});
RuleInstance macro_inst(const std::string& name, std::vector<Node> principal = {},
                        std::map<std::string, std::string> params = {});

// Backward step: the node for `goal` with children built by `kids`
// from the premisses returned by apply_rule.
template <typename F>
Derivation by(const Sequent& goal, const RuleInstance& ri, F&& kids) {
  std::vector<Sequent> prem = apply_rule(goal, ri);
  std::vector<Derivation> ch;
  ch.reserve(prem.size());
  for (std::size_t k = 0; k < prem.size(); ++k) ch.push_back(kids(k, prem[k]));
  return make_node(goal, ri, std::move(ch));
}
// One-premiss backward step.
template <typename F>
Derivation by1(const Sequent& goal, const RuleInstance& ri, F&& kid) {
  return by(goal, ri, [&](std::size_t, const Sequent& p) { return kid(p); });
}
// As `by`, but every premiss of a consuming rule keeps the principal.
// The checker accepts this form; it lets constructions stay monotone.
template <typename F>
Derivation by_kept(const Sequent& goal, const RuleInstance& ri, F&& kids) {
  std::vector<Sequent> prem = apply_rule(goal, ri);
  std::vector<Derivation> ch;
  ch.reserve(prem.size());
  for (std::size_t k = 0; k < prem.size(); ++k) {
    if (consumes_principal(ri.rule)) prem[k] = prem[k].with(principal_side(ri.rule), ri.principal.at(0));
    ch.push_back(kids(k, prem[k]));
  }
  return make_node(goal, ri, std::move(ch));
}
template <typename F>
Derivation by_kept1(const Sequent& goal, const RuleInstance& ri, F&& kid) {
  return by_kept(goal, ri, [&](std::size_t, const Sequent& p) { return kid(p); });
}
Derivation leaf(const Sequent& goal, const RuleInstance& ri);

std::size_t height(const Derivation& d);
std::size_t cut_height(const Derivation& cut_node);
std::size_t count_nodes(const Derivation& d);
std::size_t count_rule(const Derivation& d, RuleId r);
bool contains_rule(const Derivation& d, RuleId r);
std::vector<Derivation> open_leaves(const Derivation& d);
// Replaces the open leaves, left to right, by `fill`.
Derivation plug(const Derivation& frag, const std::vector<Derivation>& fill);

Derivation rename_nominal(const Derivation& d, const std::string& from, const std::string& to);
std::set<std::string> nominals_of(const Derivation& d);
std::set<std::string> nominals_of(const Sequent& s);

}  // namespace hxp

#endif  // HXPROOF_KERNEL_HPP_
