#include "hxproof/hylo.hpp"

#include "hxproof/derived.hpp"

namespace hxp {

bool is_hylo(const Node& e) {
  switch (e->tag) {
    case NodeTag::Prop:
    case NodeTag::Nominal:
    case NodeTag::Bottom: return true;
    case NodeTag::Implies: return is_hylo(e->lhs) && is_hylo(e->rhs);
    case NodeTag::At:
    case NodeTag::Diamond: return is_hylo(e->lhs);
    case NodeTag::Compare: return false;
  }
  return false;
}

bool is_hylo(const Sequent& s) {
  for (const auto& e : s.ante())
    if (!is_hylo(e)) return false;
  for (const auto& e : s.succ())
    if (!is_hylo(e)) return false;
  return true;
}

const std::set<RuleId>& comparison_rules() {
  static const std::set<RuleId> rules{RuleId::CmpL, RuleId::CmpR, RuleId::EqT, RuleId::Eq5,
                                      RuleId::NEqL, RuleId::NEqR, RuleId::S3};
  return rules;
}

SearchResult prove_hylo(const Sequent& goal, SearchConfig cfg) {
  if (!is_hylo(goal)) throw FragmentError("goal is outside H(@)");
  for (RuleId r : comparison_rules()) cfg.disabled.insert(r);
  return prove(goal, cfg);
}

Derivation simulate_brauner(const std::string& rule, const Sequent& goal, const RuleInstance& ri) {
  if (rule == "Ref") {
    RuleInstance at_t = inst(RuleId::AtT, {}, {{"i", ri.param("i")}});
    return by1(goal, at_t, [](const Sequent& p) { return open_leaf(p); });
  }
  static const std::set<std::string> macros{"AndL", "AndR", "Nom1", "Nom2", "BoxL", "BoxR"};
  if (!macros.count(rule)) throw FragmentError("no simulation for rule " + rule);
  return expand_macro(rule, goal, ri);
}

}  // namespace hxp
