// Shared test fixtures: random rule instances with provable conclusions,
// the cut-bearing derivation corpus and the hand-written Nom2 tree.

#ifndef HXPROOF_TESTS_FIXTURES_HPP_
#define HXPROOF_TESTS_FIXTURES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "hxproof/cut_elim.hpp"
#include "hxproof/derived.hpp"
#include "hxproof/kernel.hpp"
#include "hxproof/search.hpp"
#include "oracle.hpp"

namespace fixtures {

using namespace hxp;

inline SearchConfig quiet_search(int depth = 12) {
  SearchConfig cfg;
  cfg.max_depth = depth;
  cfg.enable_countermodel = false;
  cfg.max_steps = 20000;
  return cfg;
}

inline const std::vector<RuleId>& logical_rules() {
  static const std::vector<RuleId> rules = {
      RuleId::Ax,   RuleId::Bot,  RuleId::ImpL, RuleId::ImpR, RuleId::AtT, RuleId::At5, RuleId::Nom,
      RuleId::S1,   RuleId::S2,   RuleId::S3,   RuleId::AtL,  RuleId::AtR, RuleId::DiaL, RuleId::DiaR,
      RuleId::CmpL, RuleId::CmpR, RuleId::EqT,  RuleId::Eq5,  RuleId::NEqL, RuleId::NEqR};
  return rules;
}

struct Instance {
  Sequent goal;
  RuleInstance ri;
  Derivation proof;
};

inline Node atn(const std::string& i, const std::string& j) { return at(i, nominal(j)); }
inline Node iaj(const std::string& i, const std::string& a, const Node& body) {
  return at(i, diamond(a, body));
}

// Conclusion holding the rule's principals plus one random formula per
// side; `shared` adds a formula to both sides.
inline std::optional<Instance> try_instance(RuleId r, oracle::Gen& g, bool shared) {
  std::string i = "i", j = "j", k = "k";
  Node phi = g.node(1), psi = g.node(1);
  std::vector<Node> l, rt;
  RuleInstance ri;
  auto eq = [&](const std::string& x, const std::string& y) {
    return nominal_compare(x, CmpKind::Eq, "c", y);
  };
  auto neq = [&](const std::string& x, const std::string& y) {
    return nominal_compare(x, CmpKind::Neq, "c", y);
  };
  switch (r) {
    case RuleId::Ax: {
      Node e = g.pick(3) == 0 ? atn(i, j) : g.pick(2) ? at(i, prop("p")) : eq(i, j);
      l = {e}; rt = {e}; ri = inst(r, {e});
      break;
    }
    case RuleId::Bot:
      l = {at(i, bottom())}; ri = inst(r, {at(i, bottom())});
      break;
    case RuleId::ImpL: {
      Node e = at(i, implies(phi, psi));
      l = {e, at(i, phi)}; rt = {at(i, psi)}; ri = inst(r, {e});
      break;
    }
    case RuleId::ImpR: {
      Node e = at(i, implies(phi, implies(psi, phi)));
      rt = {e}; ri = inst(r, {e});
      break;
    }
    case RuleId::AtT:
      rt = {atn(i, i)}; ri = inst(r, {}, {{"i", i}});
      break;
    case RuleId::At5:
      l = {atn(i, j), atn(i, k)}; rt = {atn(j, k)}; ri = inst(r, {atn(i, j), atn(i, k)});
      break;
    case RuleId::Nom:
      rt = {atn(i, i)}; ri = inst(r, {}, {{"i", i}, {"j", "_f"}});
      break;
    case RuleId::S1: {
      Node body = g.pick(2) ? prop("p") : diamond("a", nominal(k));
      l = {atn(i, j), at(i, body)}; rt = {at(j, body)}; ri = inst(r, {atn(i, j), at(i, body)});
      break;
    }
    case RuleId::S2:
      l = {atn(j, k), iaj(i, "a", nominal(j))}; rt = {iaj(i, "a", nominal(k))};
      ri = inst(r, {atn(j, k), iaj(i, "a", nominal(j))});
      break;
    case RuleId::S3:
      l = {atn(i, j), eq(i, k)}; rt = {eq(j, k)}; ri = inst(r, {atn(i, j), eq(i, k)});
      break;
    case RuleId::AtL:
      l = {at(j, at(i, phi))}; rt = {at(i, phi)}; ri = inst(r, {at(j, at(i, phi))});
      break;
    case RuleId::AtR:
      l = {at(i, phi)}; rt = {at(j, at(i, phi))}; ri = inst(r, {at(j, at(i, phi))});
      break;
    case RuleId::DiaL: {
      Node e = iaj(i, "a", phi);
      l = {e}; rt = {iaj(i, "a", disj(phi, psi))}; ri = inst(r, {e}, {{"j", "_w"}});
      break;
    }
    case RuleId::DiaR:
      l = {iaj(i, "a", nominal(j)), at(j, phi)}; rt = {iaj(i, "a", phi)};
      ri = inst(r, {iaj(i, "a", nominal(j)), iaj(i, "a", phi)});
      break;
    case RuleId::CmpL: {
      CmpKind kd = g.pick(2) ? CmpKind::Eq : CmpKind::Neq;
      Path a = g.path(1), b = g.path(1);
      Node e = at(i, compare(a, kd, "c", b));
      l = {e}; rt = {at(i, compare(b, kd, "c", a))}; ri = inst(r, {e}, {{"j", "_w1"}, {"k", "_w2"}});
      break;
    }
    case RuleId::CmpR: {
      CmpKind kd = g.pick(2) ? CmpKind::Eq : CmpKind::Neq;
      Path a = g.path(1), b = g.path(1);
      Node e = at(i, compare(a, kd, "c", b));
      l = {at(i, dia_path(a, nominal(j))), at(i, dia_path(b, nominal(k))), nominal_compare(j, kd, "c", k)};
      rt = {e}; ri = inst(r, {e}, {{"j", j}, {"k", k}});
      break;
    }
    case RuleId::EqT:
      rt = {eq(i, i)}; ri = inst(r, {}, {{"i", i}, {"c", "c"}});
      break;
    case RuleId::Eq5:
      l = {eq(i, j), eq(i, k)}; rt = {eq(j, k)}; ri = inst(r, {eq(i, j), eq(i, k)});
      break;
    case RuleId::NEqL:
      l = {neq(i, j), eq(i, j)}; ri = inst(r, {neq(i, j)});
      break;
    case RuleId::NEqR:
      rt = {neq(i, j), eq(i, j)}; ri = inst(r, {neq(i, j)});
      break;
    default:
      return std::nullopt;
  }
  if (g.pick(2)) l.push_back(g.restricted(1));
  if (g.pick(2)) rt.push_back(g.restricted(1));
  if (shared) {
    Node x = g.restricted(1);
    l.push_back(x);
    rt.push_back(x);
  }
  Sequent goal(l, rt);
  try {
    apply_rule(goal, ri);
  } catch (const RuleError&) {
    return std::nullopt;
  }
  SearchResult res = prove(goal, quiet_search());
  if (res.status != SearchResult::Status::Proved) return std::nullopt;
  return Instance{goal, ri, res.proof};
}

inline std::optional<Instance> instance(RuleId r, oracle::Gen& g, int attempt_budget = 30) {
  for (int t = 0; t < attempt_budget; ++t) {
    bool shared = t >= attempt_budget / 2 || g.pick(4) == 0;
    if (auto x = try_instance(r, g, shared)) return x;
  }
  return std::nullopt;
}

// Empty string when every inverse derivation checks and ends in the
// corresponding premiss.
inline std::string check_inverse(const Instance& x) {
  try {
    std::vector<Sequent> prem = apply_rule(x.goal, x.ri);
    std::vector<Derivation> inv = invert(x.ri.rule, x.proof, x.ri);
    if (inv.size() != prem.size()) return "wrong premiss count";
    for (std::size_t k = 0; k < inv.size(); ++k) {
      if (inv[k]->conclusion != prem[k]) return "premiss " + std::to_string(k) + " differs";
      auto v = check_derivation(inv[k]);
      if (!v.empty()) return "premiss " + std::to_string(k) + ": " + v.front().cause;
    }
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

struct CorpusItem {
  std::string label;
  Derivation d;
};

inline std::optional<Derivation> proved(const Sequent& s) {
  SearchResult r = prove(s, quiet_search(16));
  if (r.status != SearchResult::Status::Proved) return std::nullopt;
  return r.proof;
}

// Cut of two searched proofs on φ over the context Γ ⊢ Δ.
inline std::optional<Derivation> cut_of(const std::vector<Node>& gamma, const std::vector<Node>& delta,
                                        const Node& phi) {
  Sequent base(gamma, delta);
  auto l = proved(base.with(Side::Right, phi));
  auto r = proved(base.with(Side::Left, phi));
  if (!l || !r) return std::nullopt;
  return cut(*l, *r, phi);
}

inline std::optional<Derivation> composed_cut(oracle::Gen& g, int shape) {
  Node a = g.node(1), b = g.node(1), c = g.node(1);
  const std::string i = "i";
  switch (shape) {
    case 0:
      return cut_of({at(i, conj(a, b))}, {at(i, disj(a, c))}, at(i, a));
    case 1:
      return cut_of({iaj(i, "a", conj(a, b))}, {iaj(i, "a", disj(a, c))}, iaj(i, "a", a));
    case 2: {
      Path x = test(a);
      Node src = at(i, compare(concat(atom("a"), x), CmpKind::Eq, "c", atom("b")));
      Node mid = at(i, compare(atom("a"), CmpKind::Eq, "c", atom("b")));
      Node dst = at(i, compare(atom("b"), CmpKind::Eq, "c", atom("a")));
      return cut_of({src}, {dst}, mid);
    }
    default: {
      // The right premiss is itself a cut.
      std::vector<Node> gamma{at(i, conj(a, b))}, delta{at(i, disj(conj(a, b), c))};
      Node phi = at(i, a), psi = at(i, b);
      Sequent base(gamma, delta);
      auto l = proved(base.with(Side::Right, phi));
      auto inner = cut_of({gamma[0], phi}, delta, psi);
      if (!l || !inner) return std::nullopt;
      return cut(*l, *inner, phi);
    }
  }
}

// Inverse constructions for AtL, DiaL and CmpL, Paste instances and
// random compositions of cuts.
inline std::vector<CorpusItem> cut_corpus(std::uint64_t seed, int per_kind = 10) {
  std::vector<CorpusItem> out;
  oracle::Gen g(seed);
  for (RuleId r : {RuleId::AtL, RuleId::DiaL, RuleId::CmpL}) {
    int made = 0;
    for (int t = 0; made < per_kind && t < per_kind * 20; ++t) {
      auto x = try_instance(r, g, false);
      if (!x) continue;
      auto inv = invert(r, x->proof, x->ri);
      if (!contains_rule(inv[0], RuleId::Cut)) continue;
      out.push_back({std::string("invert-") + rule_name(r), inv[0]});
      ++made;
    }
  }
  for (int t = 0, made = 0; made < per_kind && t < per_kind * 20; ++t) {
    CmpKind kd = g.pick(2) ? CmpKind::Eq : CmpKind::Neq;
    Path alpha = g.pick(2) ? atom("b") : concat(atom("b"), test(prop("p")));
    Path beta = g.pick(2) ? atom("a") : jump("m");
    Node chi = compare(concat(jump("j"), concat(atom("a"), alpha)), kd, "c", beta);
    auto hyp = proved(paste_hypothesis("a", chi, alpha, beta, kd, "c"));
    if (!hyp) continue;
    out.push_back({"paste", paste_derivation("a", chi, alpha, beta, kd, "c", *hyp)});
    ++made;
  }
  for (int shape = 0; shape < 4; ++shape) {
    int made = 0;
    for (int t = 0; made < per_kind && t < per_kind * 20; ++t) {
      auto d = composed_cut(g, shape);
      if (!d) continue;
      out.push_back({"compose-" + std::to_string(shape), *d});
      ++made;
    }
  }
  return out;
}

// Empty string when eliminate_cuts meets every requirement on `d`.
inline std::string check_elimination(const Derivation& d, std::size_t* steps = nullptr) {
  try {
    std::vector<CutStep> trace;
    Derivation out = eliminate_cuts(d, {}, &trace);
    if (steps) *steps = trace.size();
    if (count_rule(out, RuleId::Cut) != 0) return "cut left";
    if (out->conclusion != d->conclusion) return "end-sequent changed";
    auto v = check_derivation(out);
    if (!v.empty()) return "check: " + v.front().cause;
    std::vector<CutComplexity> prev = cut_measure(d);
    for (const auto& s : trace) {
      if (!measure_less(s.after, s.before)) return "measure not decreasing at " + s.family;
      if (s.before != prev && !trace.empty() && &s != &trace.front()) return "trace not chained";
      prev = s.after;
    }
    if (!prev.empty()) return "trace ends with cuts";
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

// Nom2 as printed in the reference calculus, built node by node.
inline Derivation nom2_reference(const Sequent& g, const std::string& i, const std::string& j,
                                 const std::string& k, const std::string& a) {
  const Side L = Side::Left, R = Side::Right;
  Node ij = atn(i, j), iak = iaj(i, a, nominal(k)), jak = iaj(j, a, nominal(k));
  Derivation top = make_node(g.with(L, jak), inst(RuleId::Open));
  Derivation wl2 = make_node(g.with(L, jak).with(L, ij).with(L, iak), inst(RuleId::WL, {ij, iak}), {top});
  Derivation s1 = make_node(g.with(L, ij).with(L, iak), inst(RuleId::S1, {ij, iak}), {wl2});
  Derivation prem2 = make_node(g.with(R, iak), inst(RuleId::Open));
  Derivation wl1 = make_node(g.with(R, iak).with(L, ij), inst(RuleId::WL, {ij}), {prem2});
  Derivation inner = make_node(g.with(L, ij), inst(RuleId::Cut, {iak}), {wl1, s1});
  Derivation prem1 = make_node(g.with(R, ij), inst(RuleId::Open));
  return make_node(g, inst(RuleId::Cut, {ij}), {prem1, inner});
}

inline bool same_tree(const Derivation& x, const Derivation& y) {
  if (x->conclusion != y->conclusion || x->inst.rule != y->inst.rule) return false;
  if (x->inst.principal.size() != y->inst.principal.size()) return false;
  for (std::size_t n = 0; n < x->inst.principal.size(); ++n)
    if (!equal(x->inst.principal[n], y->inst.principal[n])) return false;
  if (x->children.size() != y->children.size()) return false;
  for (std::size_t n = 0; n < x->children.size(); ++n)
    if (!same_tree(x->children[n], y->children[n])) return false;
  return true;
}

}  // namespace fixtures

#endif  // HXPROOF_TESTS_FIXTURES_HPP_
