#include "hxproof/search.hpp"

#include "hxproof/derived.hpp"
#include "hxproof/printer.hpp"
#include "hxproof/symbols.hpp"

namespace hxp {
namespace {

constexpr Side L = Side::Left;
constexpr Side Rt = Side::Right;

std::vector<Path> flatten(const Path& a) {
  std::vector<Path> out;
  Path p = a;
  while (p->tag == PathTag::Concat) {
    out.push_back(p->head);
    p = p->tail;
  }
  out.push_back(p);
  return out;
}

// Atomic facts of an antecedent, indexed for the saturation loop.
struct Facts {
  std::vector<std::pair<std::string, std::string>> alias;  // @i j
  std::vector<std::pair<std::string, Node>> s1;            // @i φ, φ an S1 body
  struct Edge {
    std::string from, mod, to;
  };
  std::vector<Edge> edges;  // @i <a> j
  struct Eq {
    std::string left, cmp, right;
  };
  std::vector<Eq> eqs;  // <i: =c j:>

  explicit Facts(const Sequent& s) {
    for (const auto& e : s.ante()) {
      if (is_nominal_compare(e)) {
        if (e->kind == CmpKind::Eq) eqs.push_back({e->left->symbol, e->symbol, e->right->symbol});
        continue;
      }
      const Node& b = e->lhs;
      if (b->tag == NodeTag::Nominal) alias.emplace_back(e->symbol, b->symbol);
      if (is_s1_body(b)) s1.emplace_back(e->symbol, b);
      if (b->tag == NodeTag::Diamond && b->lhs->tag == NodeTag::Nominal)
        edges.push_back({e->symbol, b->symbol, b->lhs->symbol});
    }
  }
};

class Prover {
 public:
  explicit Prover(const SearchConfig& cfg) : cfg_(cfg) {}

  std::optional<Derivation> run(const Sequent& goal) { return go(goal, 0, 0, false); }
  std::size_t steps() const { return steps_; }
  const std::string& bound() const { return bound_; }

 private:
  bool allowed(RuleId r) const { return r != RuleId::Nom && !cfg_.disabled.count(r); }

  void hit(const std::string& what) {
    if (bound_.empty()) bound_ = what;
  }

  // Applies a one-premiss rule and continues on its premiss.
  std::optional<Derivation> then(const Sequent& s, const RuleInstance& ri, int depth, int fresh,
                                 bool witness, bool kept = false) {
    auto prem = apply_rule(s, ri);
    if (kept) prem[0] = prem[0].with(principal_side(ri.rule), ri.principal.at(0));
    auto sub = go(prem.at(0), depth, fresh, witness);
    if (!sub) return std::nullopt;
    return make_node(s, ri, {*sub});
  }

  // A left formula that may be a literal CmpR witness stays in the
  // premiss of its decomposition while a comparison is to be proved.
  bool keep(const Sequent& s, const Node& e) const {
    if (!is_at(e)) return false;
    NodeTag t = e->lhs->tag;
    if (t != NodeTag::At && t != NodeTag::Diamond && t != NodeTag::Implies) return false;
    for (const auto& r : s.succ())
      if (is_at(r) && r->lhs->tag == NodeTag::Compare) return true;
    return false;
  }

  std::optional<Derivation> then_kept(const Sequent& s, const RuleInstance& ri, int depth, int fresh,
                                      bool witness) {
    auto it = kept_.insert(ri.principal.at(0));
    auto r = then(s, ri, depth, fresh, witness, true);
    kept_.erase(it);
    return r;
  }

  std::optional<Derivation> go(const Sequent& s, int depth, int fresh, bool witness) {
    if (++steps_ > cfg_.max_steps) {
      hit("step budget");
      return std::nullopt;
    }
    if (auto d = close(s)) return d;

    if (auto ri = decomposition(s)) {
      if (depth >= cfg_.max_depth) {
        hit("depth bound");
        return std::nullopt;
      }
      if (ri->rule == RuleId::AtL && keep(s, ri->principal[0])) return then_kept(s, *ri, depth + 1, fresh, witness);
      return then(s, *ri, depth + 1, fresh, witness);
    }
    if (auto ri = closure(s)) return then(s, *ri, depth, fresh, witness);
    if (auto w = witness_step(s)) {
      auto it = fired_.insert(w->second);
      auto r = then(s, w->first, depth, fresh, witness);
      fired_.erase(it);
      return r;
    }

    if (allowed(RuleId::ImpL))
      for (const auto& e : s.ante())
        if (is_at(e) && e->lhs->tag == NodeTag::Implies && !kept_.count(e)) {
          if (depth >= cfg_.max_depth) {
            hit("depth bound");
            return std::nullopt;
          }
          RuleInstance ri = inst(RuleId::ImpL, {e});
          auto prem = apply_rule(s, ri);
          bool k = keep(s, e);
          auto it = k ? kept_.insert(e) : kept_.end();
          if (k)
            for (auto& p : prem) p = p.with(L, e);
          auto a = go(prem[0], depth + 1, fresh, witness);
          auto b = a ? go(prem[1], depth + 1, fresh, witness) : std::nullopt;
          if (k) kept_.erase(it);
          if (!a || !b) return std::nullopt;
          return make_node(s, ri, {*a, *b});
        }

    if (auto r = fresh_step(s, depth, fresh, witness)) return *r;
    if (!witness)
      if (auto r = compound_compare(s, depth, fresh)) return *r;
    return std::nullopt;
  }

  std::optional<Derivation> close(const Sequent& s) {
    for (const auto& e : s.ante()) {
      if (is_at(e) && e->lhs->tag == NodeTag::Bottom && allowed(RuleId::Bot)) return leaf(s, inst(RuleId::Bot, {e}));
      if (!s.succ().contains(e)) continue;
      if (is_axiom_shape(e)) {
        if (!is_nominal_compare(e) || allowed(RuleId::EqT)) return leaf(s, inst(RuleId::Ax, {e}));
      } else if (cfg_.use_generalized_axiom) {
        return axg(s, e);
      }
    }
    return std::nullopt;
  }

  std::optional<RuleInstance> decomposition(const Sequent& s) const {
    for (const auto& e : s.succ()) {
      if (is_nominal_compare(e)) {
        if (e->kind == CmpKind::Neq && allowed(RuleId::NEqR)) return inst(RuleId::NEqR, {e});
        continue;
      }
      if (e->lhs->tag == NodeTag::Implies && allowed(RuleId::ImpR)) return inst(RuleId::ImpR, {e});
      if (e->lhs->tag == NodeTag::At && allowed(RuleId::AtR)) return inst(RuleId::AtR, {e});
    }
    for (const auto& e : s.ante()) {
      if (is_nominal_compare(e)) {
        if (e->kind == CmpKind::Neq && allowed(RuleId::NEqL)) return inst(RuleId::NEqL, {e});
        continue;
      }
      if (e->lhs->tag == NodeTag::At && allowed(RuleId::AtL) && !kept_.count(e)) return inst(RuleId::AtL, {e});
    }
    return std::nullopt;
  }

  // First closure rule that adds a new antecedent formula.
  std::optional<RuleInstance> closure(const Sequent& s) const {
    const Cedent& a = s.ante();
    Facts f(s);
    std::set<std::string> noms = s.nominals();
    if (allowed(RuleId::AtT))
      for (const auto& i : noms)
        if (!a.contains(at(i, nominal(i)))) return inst(RuleId::AtT, {}, {{"i", i}});
    if (allowed(RuleId::At5))
      for (const auto& [i, j] : f.alias)
        for (const auto& [i2, k] : f.alias)
          if (i == i2 && !a.contains(at(j, nominal(k))))
            return inst(RuleId::At5, {at(i, nominal(j)), at(i, nominal(k))});
    if (allowed(RuleId::S1))
      for (const auto& [i, j] : f.alias)
        for (const auto& [i2, b] : f.s1)
          if (i == i2 && i != j && !a.contains(at(j, b)))
            return inst(RuleId::S1, {at(i, nominal(j)), at(i, b)});
    if (allowed(RuleId::S2))
      for (const auto& [j, k] : f.alias)
        for (const auto& e : f.edges)
          if (e.to == j && j != k && !a.contains(at(e.from, diamond(e.mod, nominal(k)))))
            return inst(RuleId::S2, {at(j, nominal(k)), at(e.from, diamond(e.mod, nominal(j)))});
    if (allowed(RuleId::S3))
      for (const auto& [i, j] : f.alias)
        for (const auto& q : f.eqs)
          if (q.left == i && i != j && !a.contains(nominal_compare(j, CmpKind::Eq, q.cmp, q.right)))
            return inst(RuleId::S3, {at(i, nominal(j)), nominal_compare(i, CmpKind::Eq, q.cmp, q.right)});
    if (allowed(RuleId::EqT)) {
      auto cmps = s.signature().comparisons;
      for (const auto& c : cmps)
        for (const auto& i : noms)
          if (!a.contains(nominal_compare(i, CmpKind::Eq, c, i))) return inst(RuleId::EqT, {}, {{"i", i}, {"c", c}});
    }
    if (allowed(RuleId::Eq5))
      for (const auto& p : f.eqs)
        for (const auto& q : f.eqs)
          if (p.left == q.left && p.cmp == q.cmp &&
              !a.contains(nominal_compare(p.right, CmpKind::Eq, p.cmp, q.right)))
            return inst(RuleId::Eq5, {nominal_compare(p.left, CmpKind::Eq, p.cmp, p.right),
                                      nominal_compare(q.left, CmpKind::Eq, q.cmp, q.right)});
    return std::nullopt;
  }

  // DiaR and CmpR whose witnesses are already in the antecedent, with the
  // formula they add. A formula added once on a branch is not added again
  // after a decomposition consumed it.
  std::optional<std::pair<RuleInstance, Node>> witness_step(const Sequent& s) const {
    auto fresh_right = [&](const Node& e) { return !s.succ().contains(e) && !fired_.count(e); };
    Facts f(s);
    std::set<std::string> noms;
    for (const auto& e : s.succ()) {
      if (!is_at(e)) continue;
      const Node& b = e->lhs;
      if (b->tag == NodeTag::Diamond && allowed(RuleId::DiaR)) {
        for (const auto& w : f.edges)
          if (w.from == e->symbol && w.mod == b->symbol && fresh_right(at(w.to, b->lhs)))
            return std::pair{inst(RuleId::DiaR, {at(w.from, diamond(w.mod, nominal(w.to))), e}), at(w.to, b->lhs)};
      } else if (b->tag == NodeTag::Compare && allowed(RuleId::CmpR)) {
        if (noms.empty()) noms = s.nominals();
        for (const auto& j : noms) {
          if (!s.ante().contains(at(e->symbol, dia_path(b->left, nominal(j))))) continue;
          for (const auto& k : noms)
            if (s.ante().contains(at(e->symbol, dia_path(b->right, nominal(k)))) &&
                fresh_right(nominal_compare(j, b->kind, b->symbol, k)))
              return std::pair{inst(RuleId::CmpR, {e}, {{"j", j}, {"k", k}}),
                               nominal_compare(j, b->kind, b->symbol, k)};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::optional<Derivation>> fresh_step(const Sequent& s, int depth, int fresh, bool witness) {
    for (const auto& e : s.ante()) {
      if (!is_at(e) || kept_.count(e)) continue;
      const Node& b = e->lhs;
      int need = 0;
      if (b->tag == NodeTag::Diamond && b->lhs->tag != NodeTag::Nominal && allowed(RuleId::DiaL))
        need = 1;
      else if (b->tag == NodeTag::Compare && allowed(RuleId::CmpL))
        need = 2;
      if (need == 0) continue;
      if (fresh + need > cfg_.max_fresh_nominals) {
        hit("fresh-nominal budget");
        return std::optional<Derivation>{};
      }
      if (depth >= cfg_.max_depth) {
        hit("depth bound");
        return std::optional<Derivation>{};
      }
      auto eig = eigen_nominals(s.nominals(), static_cast<std::size_t>(need));
      RuleInstance ri = need == 1 ? inst(RuleId::DiaL, {e}, {{"j", eig[0]}})
                                  : inst(RuleId::CmpL, {e}, {{"j", eig[0]}, {"k", eig[1]}});
      if (need == 1 && keep(s, e)) return then_kept(s, ri, depth + 1, fresh + need, witness);
      return then(s, ri, depth + 1, fresh + need, witness);
    }
    return std::nullopt;
  }

  // Nominals x for which @i <α> x is plausibly derivable from `f`.
  std::set<std::string> reach(const Facts& f, const std::string& i, const Path& alpha) const {
    std::set<std::string> cur{i};
    for (const auto& step : flatten(alpha)) {
      std::set<std::string> next;
      for (const auto& x : cur) switch (step->tag) {
          case PathTag::Atom:
            for (const auto& e : f.edges)
              if (e.from == x && e.mod == step->symbol) next.insert(e.to);
            break;
          case PathTag::Jump: next.insert(step->symbol); break;
          case PathTag::Test: next.insert(x); break;
          case PathTag::Concat: break;
        }
      cur = std::move(next);
    }
    return cur;
  }

  // CmpR whose witnesses @i<α>j, @i<β>k are proved separately and cut in.
  std::optional<std::optional<Derivation>> compound_compare(const Sequent& s, int depth, int fresh) {
    if (!allowed(RuleId::CmpR) || !allowed(RuleId::Cut)) return std::nullopt;
    Facts f(s);
    for (const auto& e : s.succ()) {
      if (!is_at(e) || e->lhs->tag != NodeTag::Compare) continue;
      const auto& c = *e->lhs;
      const std::string& i = e->symbol;
      for (const auto& j : reach(f, i, c.left))
        for (const auto& k : reach(f, i, c.right)) {
          Node added = nominal_compare(j, c.kind, c.symbol, k);
          if (s.succ().contains(added) || fired_.count(added)) continue;
          Node fa = at(i, dia_path(c.left, nominal(j)));
          Node fb = at(i, dia_path(c.right, nominal(k)));
          std::string key = print_key(fa, fb, s);
          if (failed_.count(key)) continue;
          if (depth >= cfg_.max_depth) {
            hit("depth bound");
            return std::optional<Derivation>{};
          }
          std::optional<Derivation> pa, pb;
          if (!s.ante().contains(fa)) {
            pa = go(s.with(Rt, fa), depth + 1, fresh, true);
            if (!pa) {
              failed_.insert(key);
              continue;
            }
          }
          Sequent sa = s.with(L, fa);
          if (!sa.ante().contains(fb)) {
            pb = go(s.with(Rt, fb), depth + 1, fresh, true);
            if (!pb) {
              failed_.insert(key);
              continue;
            }
          }
          Sequent sab = sa.with(L, fb);
          auto it = fired_.insert(added);
          auto rest = then(sab, inst(RuleId::CmpR, {e}, {{"j", j}, {"k", k}}), depth + 1, fresh, false);
          fired_.erase(it);
          if (!rest) return std::optional<Derivation>{};
          Derivation d = *rest;
          if (pb) d = cut(*pb, d, fb);
          if (pa) d = cut(*pa, d, fa);
          return std::optional<Derivation>{d};
        }
    }
    return std::nullopt;
  }

  static std::string print_key(const Node& a, const Node& b, const Sequent& s) {
    return print_node(a) + "|" + print_node(b) + "|" + print_sequent(s);
  }

  const SearchConfig& cfg_;
  std::size_t steps_ = 0;
  std::string bound_;
  std::set<std::string> failed_;
  std::multiset<Node, NodeLess> fired_;
  std::multiset<Node, NodeLess> kept_;  // decomposed but kept on this branch
};

Derivation left_inverse(RuleId rule, const RuleInstance& ri, const Sequent& goal, std::size_t k) {
  const Node& x = ri.principal.at(0);
  switch (rule) {
    case RuleId::ImpL:
      return by_kept1(goal, inst(RuleId::ImpR, {x}), [&](const Sequent& q) {
        const Node& b = x->lhs;
        return axg(q, at(x->symbol, k == 0 ? b->lhs : b->rhs));
      });
    case RuleId::AtL:
      return by_kept1(goal, inst(RuleId::AtR, {x}), [&](const Sequent& q) { return axg(q, x->lhs); });
    case RuleId::DiaL: {
      Node iaj = at(x->symbol, diamond(x->lhs->symbol, nominal(ri.param("j"))));
      return by1(goal, inst(RuleId::DiaR, {iaj, x}),
                 [&](const Sequent& q) { return axg(q, at(ri.param("j"), x->lhs->lhs)); });
    }
    case RuleId::CmpL: {
      const auto& c = *x->lhs;
      return by1(goal, inst(RuleId::CmpR, {x}, ri.params), [&](const Sequent& q) {
        return axg(q, nominal_compare(ri.param("j"), c.kind, c.symbol, ri.param("k")));
      });
    }
    case RuleId::NEqL:
      return by_kept1(goal, inst(RuleId::NEqR, {x}), [&](const Sequent& q) {
        return leaf(q, inst(RuleId::Ax, {nominal_compare(x->left->symbol, CmpKind::Eq, x->symbol, x->right->symbol)}));
      });
    default: break;
  }
  throw RuleError(RuleError::Schema, std::string("no left inverse for ") + rule_name(rule));
}

Derivation right_inverse(RuleId rule, const RuleInstance& ri, const Sequent& goal) {
  const Node& x = ri.principal.at(0);
  switch (rule) {
    case RuleId::ImpR:
      return by_kept(goal, inst(RuleId::ImpL, {x}), [&](std::size_t k, const Sequent& q) {
        const Node& b = x->lhs;
        return axg(q, at(x->symbol, k == 0 ? b->lhs : b->rhs));
      });
    case RuleId::AtR:
      return by_kept1(goal, inst(RuleId::AtL, {x}), [&](const Sequent& q) { return axg(q, x->lhs); });
    case RuleId::NEqR:
      return by_kept1(goal, inst(RuleId::NEqL, {x}), [&](const Sequent& q) {
        return leaf(q, inst(RuleId::Ax, {nominal_compare(x->left->symbol, CmpKind::Eq, x->symbol, x->right->symbol)}));
      });
    default: break;
  }
  throw RuleError(RuleError::Schema, std::string("no right inverse for ") + rule_name(rule));
}

}  // namespace

const char* to_string(SearchResult::Status s) {
  switch (s) {
    case SearchResult::Status::Proved: return "Proved";
    case SearchResult::Status::Refuted: return "Refuted";
    case SearchResult::Status::Unknown: return "Unknown";
  }
  return "?";
}

SearchResult prove(const Sequent& goal, const SearchConfig& cfg) {
  if (cfg.max_depth <= 0 || cfg.max_fresh_nominals < 0 || cfg.max_steps == 0)
    throw std::invalid_argument("search bounds must be positive");
  SearchResult out;
  Prover p(cfg);
  auto d = p.run(goal);
  out.steps = p.steps();
  if (d) {
    out.status = SearchResult::Status::Proved;
    out.proof = *d;
    return out;
  }
  if (cfg.enable_countermodel && cfg.countermodel_nodes > 0)
    if (auto m = find_countermodel(goal, cfg.countermodel_nodes)) {
      out.status = SearchResult::Status::Refuted;
      out.model = std::move(m);
      return out;
    }
  out.report = p.bound().empty() ? "saturated without closing; no countermodel within bound"
                                 : p.bound() + " reached";
  return out;
}

std::vector<Derivation> invert(RuleId rule, const Derivation& d, const RuleInstance& ri) {
  if (ri.rule != rule) throw RuleError(RuleError::Schema, "instance is for a different rule");
  if (is_structural(rule) || rule == RuleId::Derived || rule == RuleId::Open)
    throw RuleError(RuleError::Schema, std::string("no inverse for ") + rule_name(rule));
  const Sequent& c = d->conclusion;
  std::vector<Derivation> out;
  auto prem = apply_rule(c, ri);
  for (std::size_t k = 0; k < prem.size(); ++k) {
    const Sequent& p = prem[k];
    if (c.subsumed_by(p)) {
      out.push_back(weaken_to(d, p));
      continue;
    }
    const Node& x = ri.principal.at(0);
    if (principal_side(rule) == L) {
      Derivation left = left_inverse(rule, ri, p.with(Rt, x), k);
      out.push_back(cut(left, weaken_to(d, p.with(L, x)), x));
    } else {
      Derivation right = right_inverse(rule, ri, p.with(L, x));
      out.push_back(cut(weaken_to(d, p.with(Rt, x)), right, x));
    }
  }
  return out;
}

}  // namespace hxp
