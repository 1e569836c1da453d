#include "hxproof/kernel.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <unordered_map>

#include "hxproof/derived.hpp"
#include "hxproof/printer.hpp"

namespace hxp {
namespace {

constexpr std::array<const char*, 25> kRuleNames = {
    "Ax",   "Bot",  "ImpL", "ImpR", "AtT", "At5", "Nom", "S1",  "S2",
    "S3",   "AtL",  "AtR",  "DiaL", "DiaR", "CmpL", "CmpR", "EqT", "Eq5",
    "NEqL", "NEqR", "Cut",  "WL",   "WR",  "Derived", "Open"};

[[noreturn]] void fail(RuleError::Kind k, const std::string& msg) { throw RuleError(k, msg); }

std::string show(const Node& e) { return print_node(e); }

const Node& principal(const RuleInstance& ri, std::size_t k) { return ri.principal.at(k); }

void arity(const RuleInstance& ri, std::size_t n) {
  if (ri.principal.size() != n)
    fail(RuleError::Schema, std::string(rule_name(ri.rule)) + " expects " + std::to_string(n) +
                                " principal formula(s), got " + std::to_string(ri.principal.size()));
}

void need(const Sequent& goal, Side s, const Node& e) {
  if (!goal.has(s, e))
    fail(RuleError::PrincipalMissing, show(e) + " not in the " +
                                          (s == Side::Left ? "antecedent" : "succedent"));
}

// @i body, with body of the given tag when `tag` is set.
const NodeExpr& at_form(const Node& e, std::optional<NodeTag> tag = std::nullopt) {
  if (e->tag != NodeTag::At || (tag && e->lhs->tag != *tag))
    fail(RuleError::Shape, "unexpected principal shape " + show(e));
  return *e;
}

const NodeExpr& ncmp_form(const Node& e, std::optional<CmpKind> kind = std::nullopt) {
  if (!is_nominal_compare(e) || (kind && e->kind != *kind))
    fail(RuleError::Shape, "unexpected principal shape " + show(e));
  return *e;
}

void fresh_for(const Sequent& goal, const std::string& j) {
  if (goal.nominals().count(j)) fail(RuleError::SideCondition, "nominal " + j + " occurs in the conclusion");
}

template <typename T, typename F>
T memo_fold(const Derivation& d, std::unordered_map<const DerivationNode*, T>& memo, F&& f) {
  auto it = memo.find(d.get());
  if (it != memo.end()) return it->second;
  T v = f(d);
  memo.emplace(d.get(), v);
  return v;
}

}  // namespace

const char* rule_name(RuleId r) { return kRuleNames[static_cast<std::size_t>(r)]; }

std::optional<RuleId> rule_from_name(const std::string& name) {
  for (std::size_t k = 0; k < kRuleNames.size(); ++k)
    if (name == kRuleNames[k]) return static_cast<RuleId>(k);
  return std::nullopt;
}

bool is_structural(RuleId r) { return r == RuleId::Cut || r == RuleId::WL || r == RuleId::WR; }

bool consumes_principal(RuleId r) {
  switch (r) {
    case RuleId::ImpL:
    case RuleId::ImpR:
    case RuleId::AtL:
    case RuleId::AtR:
    case RuleId::DiaL:
    case RuleId::CmpL:
    case RuleId::NEqL:
    case RuleId::NEqR: return true;
    default: return false;
  }
}

Side principal_side(RuleId r) {
  switch (r) {
    case RuleId::ImpR:
    case RuleId::AtR:
    case RuleId::NEqR: return Side::Right;
    default: return Side::Left;
  }
}

bool is_comparison_rule(RuleId r) {
  switch (r) {
    case RuleId::S3:
    case RuleId::CmpL:
    case RuleId::CmpR:
    case RuleId::EqT:
    case RuleId::Eq5:
    case RuleId::NEqL:
    case RuleId::NEqR: return true;
    default: return false;
  }
}

std::string RuleInstance::param(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end())
    fail(RuleError::Schema, std::string(rule_name(rule)) + " instance lacks parameter '" + key + "'");
  return it->second;
}

Derivation make_node(Sequent conclusion, RuleInstance ri, std::vector<Derivation> children) {
  return std::make_shared<const DerivationNode>(
      DerivationNode{std::move(conclusion), std::move(ri), std::move(children)});
}

Derivation open_leaf(Sequent s) { return make_node(std::move(s), RuleInstance{}); }

std::vector<Sequent> apply_rule(const Sequent& goal, const RuleInstance& ri) {
  using L = std::vector<Sequent>;
  const Side left = Side::Left, right = Side::Right;
  switch (ri.rule) {
    case RuleId::Ax: {
      arity(ri, 1);
      const Node& e = principal(ri, 0);
      if (!is_axiom_shape(e)) fail(RuleError::SideCondition, "Ax principal must be @ip, @ij or <i:=cj:>");
      need(goal, left, e);
      need(goal, right, e);
      return {};
    }
    case RuleId::Bot: {
      arity(ri, 1);
      at_form(principal(ri, 0), NodeTag::Bottom);
      need(goal, left, principal(ri, 0));
      return {};
    }
    case RuleId::ImpL:
    case RuleId::ImpR: {
      arity(ri, 1);
      const Node& e = principal(ri, 0);
      const auto& f = at_form(e, NodeTag::Implies);
      Side s = ri.rule == RuleId::ImpL ? left : right;
      need(goal, s, e);
      Sequent rest = goal.without(s, e);
      Node a = at(f.symbol, f.lhs->lhs), b = at(f.symbol, f.lhs->rhs);
      if (ri.rule == RuleId::ImpL) return L{rest.with(right, a), rest.with(left, b)};
      return L{rest.with(left, a).with(right, b)};
    }
    case RuleId::AtT: {
      arity(ri, 0);
      std::string i = ri.param("i");
      return L{goal.with(left, at(i, nominal(i)))};
    }
    case RuleId::At5: {
      arity(ri, 2);
      const auto& ij = at_form(principal(ri, 0), NodeTag::Nominal);
      const auto& ik = at_form(principal(ri, 1), NodeTag::Nominal);
      if (ij.symbol != ik.symbol) fail(RuleError::Shape, "At5 principals must share their index");
      need(goal, left, principal(ri, 0));
      need(goal, left, principal(ri, 1));
      return L{goal.with(left, at(ij.lhs->symbol, nominal(ik.lhs->symbol)))};
    }
    case RuleId::Nom: {
      arity(ri, 0);
      std::string i = ri.param("i"), j = ri.param("j");
      fresh_for(goal, j);
      return L{goal.with(left, at(i, nominal(j)))};
    }
    case RuleId::S1: {
      arity(ri, 2);
      const auto& ij = at_form(principal(ri, 0), NodeTag::Nominal);
      const auto& ip = at_form(principal(ri, 1));
      if (ij.symbol != ip.symbol) fail(RuleError::Shape, "S1 principals must share their index");
      if (!is_s1_body(ip.lhs)) fail(RuleError::SideCondition, "S1 body must be p, ⊥ or <a>k");
      need(goal, left, principal(ri, 0));
      need(goal, left, principal(ri, 1));
      return L{goal.with(left, at(ij.lhs->symbol, ip.lhs))};
    }
    case RuleId::S2: {
      arity(ri, 2);
      const auto& jk = at_form(principal(ri, 0), NodeTag::Nominal);
      const auto& iaj = at_form(principal(ri, 1), NodeTag::Diamond);
      if (iaj.lhs->lhs->tag != NodeTag::Nominal || iaj.lhs->lhs->symbol != jk.symbol)
        fail(RuleError::Shape, "S2 needs @j k and @i <a> j");
      need(goal, left, principal(ri, 0));
      need(goal, left, principal(ri, 1));
      return L{goal.with(left, at(iaj.symbol, diamond(iaj.lhs->symbol, nominal(jk.lhs->symbol))))};
    }
    case RuleId::S3: {
      arity(ri, 2);
      const auto& ij = at_form(principal(ri, 0), NodeTag::Nominal);
      const auto& ik = ncmp_form(principal(ri, 1), CmpKind::Eq);
      if (ik.left->symbol != ij.symbol) fail(RuleError::Shape, "S3 principals must share i");
      need(goal, left, principal(ri, 0));
      need(goal, left, principal(ri, 1));
      return L{goal.with(left, nominal_compare(ij.lhs->symbol, CmpKind::Eq, ik.symbol, ik.right->symbol))};
    }
    case RuleId::AtL:
    case RuleId::AtR: {
      arity(ri, 1);
      const auto& f = at_form(principal(ri, 0), NodeTag::At);
      Side s = ri.rule == RuleId::AtL ? left : right;
      need(goal, s, principal(ri, 0));
      return L{goal.without(s, principal(ri, 0)).with(s, f.lhs)};
    }
    case RuleId::DiaL: {
      arity(ri, 1);
      const auto& f = at_form(principal(ri, 0), NodeTag::Diamond);
      std::string j = ri.param("j");
      need(goal, left, principal(ri, 0));
      fresh_for(goal, j);
      return L{goal.without(left, principal(ri, 0))
                   .with(left, at(f.symbol, diamond(f.lhs->symbol, nominal(j))))
                   .with(left, at(j, f.lhs->lhs))};
    }
    case RuleId::DiaR: {
      arity(ri, 2);
      const auto& iaj = at_form(principal(ri, 0), NodeTag::Diamond);
      const auto& iap = at_form(principal(ri, 1), NodeTag::Diamond);
      if (iaj.lhs->lhs->tag != NodeTag::Nominal || iaj.symbol != iap.symbol ||
          iaj.lhs->symbol != iap.lhs->symbol)
        fail(RuleError::Shape, "DiaR needs @i <a> j and @i <a> φ");
      need(goal, left, principal(ri, 0));
      need(goal, right, principal(ri, 1));
      return L{goal.with(right, at(iaj.lhs->lhs->symbol, iap.lhs->lhs))};
    }
    case RuleId::CmpL:
    case RuleId::CmpR: {
      arity(ri, 1);
      const auto& f = at_form(principal(ri, 0), NodeTag::Compare);
      const auto& c = *f.lhs;
      std::string j = ri.param("j"), k = ri.param("k");
      Node aj = at(f.symbol, dia_path(c.left, nominal(j)));
      Node bk = at(f.symbol, dia_path(c.right, nominal(k)));
      Node jk = nominal_compare(j, c.kind, c.symbol, k);
      if (ri.rule == RuleId::CmpL) {
        need(goal, left, principal(ri, 0));
        if (j == k) fail(RuleError::SideCondition, "CmpL eigen-nominals must differ");
        fresh_for(goal, j);
        fresh_for(goal, k);
        return L{goal.without(left, principal(ri, 0)).with(left, aj).with(left, bk).with(left, jk)};
      }
      need(goal, right, principal(ri, 0));
      need(goal, left, aj);
      need(goal, left, bk);
      return L{goal.with(right, jk)};
    }
    case RuleId::EqT: {
      arity(ri, 0);
      std::string i = ri.param("i");
      return L{goal.with(left, nominal_compare(i, CmpKind::Eq, ri.param("c"), i))};
    }
    case RuleId::Eq5: {
      arity(ri, 2);
      const auto& ij = ncmp_form(principal(ri, 0), CmpKind::Eq);
      const auto& ik = ncmp_form(principal(ri, 1), CmpKind::Eq);
      if (ij.left->symbol != ik.left->symbol || ij.symbol != ik.symbol)
        fail(RuleError::Shape, "Eq5 principals must share i and c");
      need(goal, left, principal(ri, 0));
      need(goal, left, principal(ri, 1));
      return L{goal.with(left, nominal_compare(ij.right->symbol, CmpKind::Eq, ij.symbol, ik.right->symbol))};
    }
    case RuleId::NEqL:
    case RuleId::NEqR: {
      arity(ri, 1);
      const auto& f = ncmp_form(principal(ri, 0), CmpKind::Neq);
      Node eq = nominal_compare(f.left->symbol, CmpKind::Eq, f.symbol, f.right->symbol);
      Side s = ri.rule == RuleId::NEqL ? left : right;
      Side t = s == left ? right : left;
      need(goal, s, principal(ri, 0));
      return L{goal.without(s, principal(ri, 0)).with(t, eq)};
    }
    case RuleId::Cut: {
      arity(ri, 1);
      require_restricted(principal(ri, 0));
      return L{goal.with(right, principal(ri, 0)), goal.with(left, principal(ri, 0))};
    }
    case RuleId::WL:
    case RuleId::WR: {
      if (ri.principal.empty()) fail(RuleError::Schema, "weakening needs a formula");
      Side s = ri.rule == RuleId::WL ? left : right;
      Sequent out = goal;
      for (const auto& e : ri.principal) {
        need(goal, s, e);
        out = out.without(s, e);
      }
      return L{out};
    }
    case RuleId::Derived: {
      Derivation frag = expand_macro(ri.macro, goal, ri);
      L out;
      for (const auto& leaf : open_leaves(frag)) out.push_back(leaf->conclusion);
      return out;
    }
    case RuleId::Open: fail(RuleError::Schema, "open premiss has no rule");
  }
  fail(RuleError::Schema, "unknown rule");
}

std::optional<std::string> check_step(const Derivation& d) {
  const Sequent& s = d->conclusion;
  const RuleInstance& ri = d->inst;
  const auto& ch = d->children;
  auto count = [&](std::size_t n) -> std::optional<std::string> {
    if (ch.size() != n)
      return std::string(rule_name(ri.rule)) + " expects " + std::to_string(n) + " premiss(es), got " +
             std::to_string(ch.size());
    return std::nullopt;
  };
  try {
    switch (ri.rule) {
      case RuleId::Open: return count(0);
      case RuleId::Cut: {
        if (auto e = count(2)) return e;
        arity(ri, 1);
        const Node& phi = principal(ri, 0);
        require_restricted(phi);
        const Sequent& l = ch[0]->conclusion;
        const Sequent& r = ch[1]->conclusion;
        if (!l.has(Side::Right, phi)) return "cut formula missing from left premiss succedent";
        if (!r.has(Side::Left, phi)) return "cut formula missing from right premiss antecedent";
        Cedent a1 = l.ante().united(r.ante().without(phi)), a2 = l.ante().united(r.ante());
        Cedent s1 = l.succ().without(phi).united(r.succ()), s2 = l.succ().united(r.succ());
        if (!(s.ante() == a1 || s.ante() == a2)) return "cut conclusion antecedent is not Γ,Γ′";
        if (!(s.succ() == s1 || s.succ() == s2)) return "cut conclusion succedent is not Δ,Δ′";
        return std::nullopt;
      }
      case RuleId::WL:
      case RuleId::WR: {
        if (auto e = count(1)) return e;
        Side side = ri.rule == RuleId::WL ? Side::Left : Side::Right;
        const Sequent& p = ch[0]->conclusion;
        Cedent grown = p.side(side);
        for (const auto& e : ri.principal) grown = grown.with(e);
        Side other = side == Side::Left ? Side::Right : Side::Left;
        if (ri.principal.empty()) return "weakening without formula";
        if (!(grown == s.side(side)) || !(p.side(other) == s.side(other)))
          return "weakening conclusion does not match premiss";
        return std::nullopt;
      }
      case RuleId::Derived: {
        Derivation frag = expand_macro(ri.macro, s, ri);
        if (frag->conclusion != s) return "macro " + ri.macro + " expands to a different conclusion";
        auto bad = check_derivation(frag, CheckOptions{true});
        if (!bad.empty()) return "macro " + ri.macro + " expansion invalid: " + bad.front().cause;
        auto leaves = open_leaves(frag);
        if (auto e = count(leaves.size())) return e;
        for (std::size_t k = 0; k < leaves.size(); ++k)
          if (leaves[k]->conclusion != ch[k]->conclusion)
            return "macro " + ri.macro + " premiss " + std::to_string(k) + " mismatch";
        return std::nullopt;
      }
      default: {
        auto prem = apply_rule(s, ri);
        if (auto e = count(prem.size())) return e;
        for (std::size_t k = 0; k < prem.size(); ++k) {
          const Sequent& got = ch[k]->conclusion;
          if (got == prem[k]) continue;
          if (consumes_principal(ri.rule) &&
              got == prem[k].with(principal_side(ri.rule), principal(ri, 0)))
            continue;
          return std::string(rule_name(ri.rule)) + " premiss " + std::to_string(k) +
                 " does not match: expected " + print_sequent(prem[k]) + ", got " + print_sequent(got);
        }
        return std::nullopt;
      }
    }
  } catch (const RuleError& e) {
    return std::string(rule_name(ri.rule)) + ": " + e.what();
  } catch (const ShapeError& e) {
    return std::string(rule_name(ri.rule)) + ": " + e.what();
  } catch (const std::out_of_range&) {
    return std::string(rule_name(ri.rule)) + ": malformed instance";
  } catch (const std::runtime_error& e) {
    return std::string(rule_name(ri.rule)) + ": " + e.what();
  }
}

std::vector<Violation> check_derivation(const Derivation& d, CheckOptions opt) {
  std::vector<Violation> out;
  std::unordered_map<const DerivationNode*, bool> seen;
  std::vector<std::size_t> path;
  std::function<void(const Derivation&)> go = [&](const Derivation& n) {
    if (!n) {
      out.push_back({path, "null derivation"});
      return;
    }
    if (seen.count(n.get())) return;
    seen.emplace(n.get(), true);
    if (n->inst.rule == RuleId::Open && !opt.allow_open)
      out.push_back({path, "open premiss " + print_sequent(n->conclusion)});
    else if (auto e = check_step(n))
      out.push_back({path, *e});
    for (std::size_t k = 0; k < n->children.size(); ++k) {
      path.push_back(k);
      go(n->children[k]);
      path.pop_back();
    }
  };
  go(d);
  return out;
}

bool is_valid_derivation(const Derivation& d, CheckOptions opt) {
  return check_derivation(d, opt).empty();
}

RuleInstance inst(RuleId r, std::vector<Node> principal, std::map<std::string, std::string> params) {
  return RuleInstance{r, std::move(principal), std::move(params), {}};
}

RuleInstance macro_inst(const std::string& name, std::vector<Node> principal,
                        std::map<std::string, std::string> params) {
  return RuleInstance{RuleId::Derived, std::move(principal), std::move(params), name};
}

Derivation leaf(const Sequent& goal, const RuleInstance& ri) {
  apply_rule(goal, ri);
  return make_node(goal, ri);
}

Derivation cut(const Derivation& left, const Derivation& right, const Node& phi) {
  const Sequent& l = left->conclusion;
  const Sequent& r = right->conclusion;
  if (!l.has(Side::Right, phi) || !r.has(Side::Left, phi))
    fail(RuleError::PrincipalMissing, "cut formula " + show(phi) + " not on the facing sides");
  Sequent s(l.ante().united(r.ante().without(phi)), l.succ().without(phi).united(r.succ()));
  return make_node(std::move(s), inst(RuleId::Cut, {phi}), {left, right});
}

Derivation weaken(const Derivation& d, Side side, const Node& phi) {
  return weaken(d, side, std::vector<Node>{phi});
}

Derivation weaken(const Derivation& d, Side side, const std::vector<Node>& phis) {
  if (phis.empty()) return d;
  Sequent s = d->conclusion;
  for (const auto& e : phis) s = s.with(side, e);
  return make_node(std::move(s), inst(side == Side::Left ? RuleId::WL : RuleId::WR, phis), {d});
}

Derivation weaken_to(const Derivation& d, const Sequent& target) {
  const Sequent& s = d->conclusion;
  if (!s.subsumed_by(target))
    fail(RuleError::Schema, "cannot weaken " + print_sequent(s) + " to " + print_sequent(target));
  std::vector<Node> l, r;
  for (const auto& e : target.ante())
    if (!s.ante().contains(e)) l.push_back(e);
  for (const auto& e : target.succ())
    if (!s.succ().contains(e)) r.push_back(e);
  return weaken(weaken(d, Side::Left, l), Side::Right, r);
}

std::size_t height(const Derivation& d) {
  std::unordered_map<const DerivationNode*, std::size_t> memo;
  std::function<std::size_t(const Derivation&)> go = [&](const Derivation& n) {
    return memo_fold<std::size_t>(n, memo, [&](const Derivation& x) {
      std::size_t h = 0;
      for (const auto& c : x->children) h = std::max(h, go(c));
      return h + 1;
    });
  };
  return go(d);
}

std::size_t cut_height(const Derivation& c) {
  if (c->inst.rule != RuleId::Cut || c->children.size() != 2)
    fail(RuleError::Schema, "cut_height on a non-Cut node");
  return height(c->children[0]) + height(c->children[1]);
}

std::size_t count_nodes(const Derivation& d) {
  std::size_t n = 1;
  for (const auto& c : d->children) n += count_nodes(c);
  return n;
}

std::size_t count_rule(const Derivation& d, RuleId r) {
  std::size_t n = d->inst.rule == r ? 1 : 0;
  for (const auto& c : d->children) n += count_rule(c, r);
  return n;
}

bool contains_rule(const Derivation& d, RuleId r) {
  std::unordered_map<const DerivationNode*, bool> memo;
  std::function<bool(const Derivation&)> go = [&](const Derivation& n) {
    return memo_fold<bool>(n, memo, [&](const Derivation& x) {
      if (x->inst.rule == r) return true;
      for (const auto& c : x->children)
        if (go(c)) return true;
      return false;
    });
  };
  return go(d);
}

std::vector<Derivation> open_leaves(const Derivation& d) {
  std::vector<Derivation> out;
  std::function<void(const Derivation&)> go = [&](const Derivation& n) {
    if (n->inst.rule == RuleId::Open) out.push_back(n);
    for (const auto& c : n->children) go(c);
  };
  go(d);
  return out;
}

Derivation plug(const Derivation& frag, const std::vector<Derivation>& fill) {
  std::size_t next = 0;
  std::function<Derivation(const Derivation&)> go = [&](const Derivation& n) -> Derivation {
    if (n->inst.rule == RuleId::Open) {
      if (next >= fill.size()) fail(RuleError::Schema, "too few derivations to plug");
      const Derivation& f = fill[next++];
      if (f->conclusion != n->conclusion)
        fail(RuleError::Schema, "plugged derivation proves " + print_sequent(f->conclusion) +
                                    " instead of " + print_sequent(n->conclusion));
      return f;
    }
    if (n->children.empty()) return n;
    std::vector<Derivation> ch;
    bool same = true;
    for (const auto& c : n->children) {
      ch.push_back(go(c));
      same = same && ch.back() == c;
    }
    return same ? n : make_node(n->conclusion, n->inst, std::move(ch));
  };
  Derivation out = go(frag);
  if (next != fill.size()) fail(RuleError::Schema, "too many derivations to plug");
  return out;
}

namespace {

Sequent rename_sequent(const Sequent& s, const std::string& from, const std::string& to) {
  std::vector<Node> a, b;
  for (const auto& e : s.ante()) a.push_back(rename_nominal(e, from, to));
  for (const auto& e : s.succ()) b.push_back(rename_nominal(e, from, to));
  return Sequent(std::move(a), std::move(b));
}

}  // namespace

Derivation rename_nominal(const Derivation& d, const std::string& from, const std::string& to) {
  std::unordered_map<const DerivationNode*, Derivation> memo;
  std::function<Derivation(const Derivation&)> go = [&](const Derivation& n) {
    return memo_fold<Derivation>(n, memo, [&](const Derivation& x) {
      RuleInstance ri = x->inst;
      for (auto& e : ri.principal) e = rename_nominal(e, from, to);
      for (auto& [key, v] : ri.params)
        if (v == from) v = to;
      std::vector<Derivation> ch;
      for (const auto& c : x->children) ch.push_back(go(c));
      return make_node(rename_sequent(x->conclusion, from, to), std::move(ri), std::move(ch));
    });
  };
  return go(d);
}

std::set<std::string> nominals_of(const Sequent& s) { return s.nominals(); }

std::set<std::string> nominals_of(const Derivation& d) {
  std::set<std::string> out;
  std::unordered_map<const DerivationNode*, bool> seen;
  std::function<void(const Derivation&)> go = [&](const Derivation& n) {
    if (!seen.emplace(n.get(), true).second) return;
    for (const auto& e : n->conclusion.ante()) collect_nominals(e, out);
    for (const auto& e : n->conclusion.succ()) collect_nominals(e, out);
    for (const auto& e : n->inst.principal) collect_nominals(e, out);
    for (const auto& [k, v] : n->inst.params)
      if (k != "c" && k != "a") out.insert(v);
    for (const auto& c : n->children) go(c);
  };
  go(d);
  return out;
}

}  // namespace hxp
