#include "hxproof/cut_elim.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "hxproof/derived.hpp"
#include "hxproof/printer.hpp"
#include "hxproof/symbols.hpp"

namespace hxp {
namespace {

using R = RuleId;
constexpr Side Lf = Side::Left;

using Opt = std::optional<Derivation>;

struct Selected {
  std::vector<std::size_t> path;
  Derivation node;
};

class CutFree {
 public:
  explicit CutFree(const Derivation& d) {
    std::function<bool(const Derivation&)> go = [&](const Derivation& n) {
      auto it = memo_.find(n.get());
      if (it != memo_.end()) return it->second;
      bool v = n->inst.rule != R::Cut;
      for (const auto& c : n->children) v = go(c) && v;
      memo_[n.get()] = v;
      return v;
    };
    go(d);
  }
  bool operator()(const Derivation& n) const { return memo_.at(n.get()); }

 private:
  std::unordered_map<const DerivationNode*, bool> memo_;
};

// Every cut, greatest complexity first; on ties the deepest, then the
// leftmost.
std::vector<Selected> cut_candidates(const Derivation& d) {
  CutFree free(d);
  std::vector<std::pair<CutComplexity, Selected>> all;
  std::vector<std::size_t> path;
  std::function<void(const Derivation&)> go = [&](const Derivation& n) {
    if (free(n)) return;
    if (n->inst.rule == R::Cut) all.push_back({cut_complexity(n), Selected{path, n}});
    for (std::size_t k = 0; k < n->children.size(); ++k) {
      path.push_back(k);
      go(n->children[k]);
      path.pop_back();
    }
  };
  go(d);
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second.path.size() > b.second.path.size();
  });
  std::vector<Selected> out;
  for (auto& [c, s] : all) out.push_back(std::move(s));
  return out;
}


Derivation replace_at(const Derivation& d, const std::vector<std::size_t>& path, std::size_t at,
                      const Derivation& with) {
  if (at == path.size()) return with;
  std::vector<Derivation> ch = d->children;
  ch[path[at]] = replace_at(ch[path[at]], path, at + 1, with);
  return make_node(d->conclusion, d->inst, std::move(ch));
}

// Adds `add` to every sequent of `d`, so the height does not grow.
// Steps that no longer check, such as an eigen-nominal clash, fall back
// to an explicit weakening.
Derivation absorb(const Derivation& d, const Sequent& add) {
  Sequent target(d->conclusion.ante().united(add.ante()), d->conclusion.succ().united(add.succ()));
  if (target == d->conclusion) return d;
  RuleId r = d->inst.rule;
  if (r == R::WL || r == R::WR) {
    const Cedent& extra = add.side(r == R::WL ? Lf : Side::Right);
    RuleInstance ri = d->inst;
    ri.principal.clear();
    for (const auto& e : d->inst.principal)
      if (!extra.contains(e)) ri.principal.push_back(e);
    Derivation child = absorb(d->children.at(0), add);
    if (ri.principal.empty()) return child;
    Derivation node = make_node(target, ri, {child});
    if (!check_step(node)) return node;
    return weaken_to(d, target);
  }
  std::vector<Derivation> kids;
  for (const auto& c : d->children) kids.push_back(absorb(c, add));
  Derivation node = make_node(target, d->inst, std::move(kids));
  if (r != R::Open && !check_step(node)) return node;
  return weaken_to(d, target);
}

Opt fit(const Derivation& d, const Sequent& target) {
  if (!d->conclusion.subsumed_by(target)) return std::nullopt;
  std::vector<Node> l, rt;
  for (const auto& e : target.ante())
    if (!d->conclusion.ante().contains(e)) l.push_back(e);
  for (const auto& e : target.succ())
    if (!d->conclusion.succ().contains(e)) rt.push_back(e);
  return absorb(d, Sequent(l, rt));
}

bool same(const Node& a, const Node& b) { return equal(a, b); }

bool principal_is(const Derivation& d, RuleId r, std::size_t idx, const Node& phi) {
  return d->inst.rule == r && d->inst.principal.size() > idx && same(d->inst.principal[idx], phi);
}

class Reducer {
 public:
  Reducer(const CutElimOptions& opt, std::set<std::string> used) : opt_(opt), used_(std::move(used)) {}

  // Replacement for the cut node `x`, with the same conclusion: the first
  // that `prefer` accepts, else the first valid one (reported through
  // `fallback`, with an empty result).
  using Prefer = std::function<bool(const Derivation&)>;
  Opt reduce(const Derivation& x, std::string& family, const Prefer& prefer,
             std::pair<std::string, Derivation>* fallback) {
    const Derivation& l = x->children[0];
    const Derivation& r = x->children[1];
    const Node& phi = x->inst.principal.at(0);
    const Sequent& concl = x->conclusion;
    using Try = std::function<Opt()>;
    const std::vector<std::pair<const char*, Try>> tries = {
        {"axiom", [&] { return axiom(l, r, phi, concl); }},
        {"weakening", [&] { return weakening(l, r, phi, concl); }},
        {"permute-left", [&] { return permute(l, r, phi, concl, true); }},
        {"permute-right", [&] { return permute(l, r, phi, concl, false); }},
        {"principal", [&] { return principal(l, r, phi, concl); }},
        {"right-right", [&] { return right_right(l, r, phi, concl); }},
        {"search", [&] { return search(concl); }},
    };
    for (const auto& [name, f] : tries) {
      Opt out;
      try {
        out = f();
      } catch (const std::runtime_error&) {
        out.reset();
      }
      if (out && (*out)->conclusion == concl && check_derivation(*out).empty()) {
        if (prefer(*out)) {
          family = name;
          return out;
        }
        if (fallback && !fallback->second) *fallback = {name, *out};
      }
    }
    return std::nullopt;
  }

  static std::string stuck(const Derivation& x) {
    return "no reduction applies to the cut on " + print_node(x->inst.principal.at(0)) + " concluding " +
           print_sequent(x->conclusion);
  }

  // A proof of `concl` found without Cut.
  Opt search(const Sequent& concl) const {
    if (!opt_.search_fallback) return std::nullopt;
    SearchConfig cfg = opt_.fallback;
    cfg.disabled.insert(R::Cut);
    cfg.enable_countermodel = false;
    SearchResult res = prove(concl, cfg);
    if (res.status != SearchResult::Status::Proved) return std::nullopt;
    return res.proof;
  }

 private:
  std::string fresh() {
    std::string n = fresh_nominal(used_, hint_);
    used_.insert(n);
    return n;
  }

  // Renames every nominal introduced above the end-sequent apart.
  Derivation freshen(Derivation d) {
    std::set<std::string> own = d->conclusion.nominals();
    for (const auto& n : nominals_of(d)) {
      used_.insert(n);
      if (!own.count(n)) d = rename_nominal(d, n, fresh());
    }
    return d;
  }

  Opt axiom(const Derivation& l, const Derivation& r, const Node& phi, const Sequent& concl) {
    if (l->conclusion.has(Lf, phi)) return fit(r, concl);
    if (r->conclusion.has(Side::Right, phi)) return fit(l, concl);
    for (const auto& p : {l, r}) {
      if (!p->children.empty() || p->inst.rule == R::Open) continue;
      Derivation d = make_node(concl, p->inst);
      if (!check_step(d)) return d;
    }
    return std::nullopt;
  }

  Opt weakening(const Derivation& l, const Derivation& r, const Node& phi, const Sequent& concl) {
    auto is_w = [](const Derivation& d) { return d->inst.rule == R::WL || d->inst.rule == R::WR; };
    if (is_w(l)) {
      const Derivation& c = l->children.at(0);
      return c->conclusion.has(Side::Right, phi) ? fit(cut(c, r, phi), concl) : fit(c, concl);
    }
    if (is_w(r)) {
      const Derivation& c = r->children.at(0);
      return c->conclusion.has(Lf, phi) ? fit(cut(l, c, phi), concl) : fit(c, concl);
    }
    return std::nullopt;
  }

  // Moves the cut above the last rule of one premiss.
  Opt permute(const Derivation& l0, const Derivation& r0, const Node& phi, const Sequent& concl, bool into_left) {
    const Derivation& p0 = into_left ? l0 : r0;
    RuleId rule = p0->inst.rule;
    if (p0->children.empty() || rule == R::Open) return std::nullopt;
    // A cut is only passed when its formula is smaller.
    if (rule == R::Cut && size(p0->inst.principal.at(0)) >= size(phi)) return std::nullopt;
    Derivation l = into_left ? freshen(l0) : l0;
    Derivation r = into_left ? r0 : freshen(r0);
    const Derivation& p = into_left ? l : r;
    Sequent here(l->conclusion.ante().united(r->conclusion.ante().without(phi)),
                 l->conclusion.succ().without(phi).united(r->conclusion.succ()));
    std::vector<Sequent> prem = apply_rule(here, p->inst);
    if (prem.size() != p->children.size()) return std::nullopt;
    std::vector<Derivation> kids;
    for (std::size_t t = 0; t < prem.size(); ++t) {
      const Derivation& c = p->children[t];
      Derivation moved = into_left ? (c->conclusion.has(Side::Right, phi) ? cut(c, r, phi) : c)
                                   : (c->conclusion.has(Lf, phi) ? cut(l, c, phi) : c);
      Opt k = fit(moved, prem[t]);
      if (!k && rule != R::Derived && consumes_principal(rule))
        k = fit(moved, prem[t].with(principal_side(rule), p->inst.principal.at(0)));
      if (!k) return std::nullopt;
      kids.push_back(*k);
    }
    Derivation node = make_node(here, p->inst, std::move(kids));
    if (check_step(node)) return std::nullopt;
    return fit(node, concl);
  }

  Opt principal(const Derivation& l, const Derivation& r, const Node& phi, const Sequent& concl) {
    // Premiss of a consuming rule that kept the cut formula: cut it first.
    auto strip_l = [&](const Derivation& c) { return c->conclusion.has(Side::Right, phi) ? cut(c, r, phi) : c; };
    auto strip_r = [&](const Derivation& c) { return c->conclusion.has(Lf, phi) ? cut(l, c, phi) : c; };
    if (principal_is(l, R::ImpR, 0, phi) && principal_is(r, R::ImpL, 0, phi)) {
      const std::string& i = phi->symbol;
      Node ia = at(i, phi->lhs->lhs), ib = at(i, phi->lhs->rhs);
      Derivation l1 = strip_l(l->children.at(0));
      Derivation r1 = r->children.at(0), r2 = r->children.at(1);
      if (!r1->conclusion.has(Side::Right, ia)) std::swap(r1, r2);
      Derivation inner = cut(l1, strip_r(r2), ib);
      return fit(cut(strip_r(r1), inner, ia), concl);
    }
    if (principal_is(l, R::AtR, 0, phi) && principal_is(r, R::AtL, 0, phi))
      return fit(cut(strip_l(l->children.at(0)), strip_r(r->children.at(0)), phi->lhs), concl);
    if (principal_is(l, R::NEqR, 0, phi) && principal_is(r, R::NEqL, 0, phi)) {
      Node eq = nominal_compare(phi->left->symbol, CmpKind::Eq, phi->symbol, phi->right->symbol);
      return fit(cut(strip_r(r->children.at(0)), strip_l(l->children.at(0)), eq), concl);
    }
    if (principal_is(l, R::DiaR, 1, phi) && principal_is(r, R::DiaL, 0, phi)) {
      const std::string j = l->inst.principal[0]->lhs->lhs->symbol;
      Node jpsi = at(j, phi->lhs->lhs);
      Derivation cut1 = cut(l->children.at(0), r, phi);
      Derivation r1 = rename_nominal(freshen(r->children.at(0)), r->inst.param("j"), j);
      return fit(cut(cut1, strip_r(r1), jpsi), concl);
    }
    if (principal_is(l, R::CmpR, 0, phi) && principal_is(r, R::CmpL, 0, phi)) {
      const std::string j = l->inst.param("j"), k = l->inst.param("k");
      const Node& c = phi->lhs;
      Node jk = nominal_compare(j, c->kind, c->symbol, k);
      Derivation cut1 = cut(l->children.at(0), r, phi);
      std::string t1 = fresh(), t2 = fresh();
      Derivation r1 = freshen(r->children.at(0));
      r1 = rename_nominal(rename_nominal(r1, r->inst.param("j"), t1), r->inst.param("k"), t2);
      r1 = rename_nominal(rename_nominal(r1, t1, j), t2, k);
      return fit(cut(cut1, strip_r(r1), jk), concl);
    }
    return std::nullopt;
  }

  // The left premiss adds @i<a>j by DiaR from @i<a>j' and @j'j; S2
  // recovers it on the right from the same two facts.
  Opt right_right(const Derivation& l, const Derivation& r, const Node& phi, const Sequent& concl) {
    if (!principal_is(l, R::DiaR, 1, phi) || phi->lhs->lhs->tag != NodeTag::Nominal) return std::nullopt;
    const Node& w = l->inst.principal[0];
    Node jj = at(w->lhs->lhs->symbol, phi->lhs->lhs);
    Derivation cut1 = cut(l->children.at(0), r, phi);
    Sequent here(l->conclusion.ante().united(r->conclusion.ante().without(phi)),
                 l->conclusion.succ().without(phi).united(r->conclusion.succ()));
    Sequent t = here.with(Lf, jj);
    Opt above = fit(r, t.with(Lf, phi));
    if (!above) return std::nullopt;
    Derivation s2 = make_node(t, inst(R::S2, {jj, w}), {*above});
    if (check_step(s2)) return std::nullopt;
    return fit(cut(cut1, s2, jj), concl);
  }

  const CutElimOptions& opt_;
  std::set<std::string> used_;
  std::size_t hint_ = 0;
};

// Candidates examined per step before settling for a reduction that
// only decreases the measure locally.
constexpr std::size_t kCandidates = 8;

Derivation reduce_step(const Derivation& d, CutStep* step, const CutElimOptions& opt) {
  std::vector<Selected> cands = cut_candidates(d);
  if (cands.empty()) throw CutElimError("derivation has no cut");
  Reducer red(opt, nominals_of(d));
  const std::vector<CutComplexity> before = cut_measure(d);
  const Selected* chosen = nullptr;
  std::string family;
  Derivation out;
  std::pair<std::string, Derivation> local;
  const Selected* local_sel = nullptr;
  for (std::size_t c = 0; c < cands.size() && c < kCandidates && !out; ++c) {
    const Selected& sel = cands[c];
    auto prefer = [&](const Derivation& r) {
      return measure_less(cut_measure(replace_at(d, sel.path, 0, r)), before);
    };
    std::pair<std::string, Derivation> fb;
    if (auto r = red.reduce(sel.node, family, prefer, &fb)) {
      out = replace_at(d, sel.path, 0, *r);
      chosen = &sel;
    } else if (fb.second && !local_sel) {
      local = fb;
      local_sel = &sel;
    }
  }
  // No cut-free proof at a cut itself: re-prove the nearest ancestor
  // whose end-sequent has one.
  auto escalate = [&](const Selected& sel, bool preferred_only) -> Derivation {
    std::vector<Derivation> chain{d};
    for (std::size_t k = 0; k + 1 < sel.path.size(); ++k) chain.push_back(chain.back()->children[sel.path[k]]);
    for (std::size_t k = chain.size(); k-- > 0;) {
      if (auto p = red.search(chain[k]->conclusion)) {
        std::vector<std::size_t> prefix(sel.path.begin(), sel.path.begin() + static_cast<long>(k));
        Derivation r = replace_at(d, prefix, 0, *p);
        if (!preferred_only || measure_less(cut_measure(r), before)) return r;
      }
    }
    return nullptr;
  };
  if (!out && (out = escalate(cands.front(), true))) {
    family = "search-ancestor";
    chosen = &cands.front();
  }
  if (!out && local_sel) {
    out = replace_at(d, local_sel->path, 0, local.second);
    family = local.first;
    chosen = local_sel;
  }
  if (!out && (out = escalate(cands.front(), false))) {
    family = "search-ancestor";
    chosen = &cands.front();
  }
  if (!out) throw CutElimError(Reducer::stuck(cands.front().node));
  if (step) {
    step->family = family;
    step->reduced = cut_complexity(chosen->node);
    step->before = before;
    step->after = cut_measure(out);
  }
  return out;
}

Derivation eliminate_loop(Derivation d, const CutElimOptions& opt, std::vector<CutStep>* trace) {
  for (std::size_t n = 0; contains_rule(d, R::Cut); ++n) {
    if (n >= opt.max_steps) throw CutElimError("cut elimination exceeded its step budget");
    CutStep step;
    d = reduce_step(d, trace ? &step : nullptr, opt);
    if (trace) trace->push_back(std::move(step));
  }
  return d;
}

// Decides, bottom-up, which cut-bearing macros to expand: those whose
// expansion, with the already processed premisses, admits elimination.
class MacroPlanner {
 public:
  explicit MacroPlanner(const CutElimOptions& opt) : opt_(opt) {}

  struct Plan {
    Derivation planned;    // macros expanded, cuts kept
    Derivation cut_free;   // null when elimination got stuck
  };

  Plan run(const Derivation& d) {
    auto it = memo_.find(d.get());
    if (it != memo_.end()) return it->second;
    std::vector<Derivation> dc, ec;
    bool same_kids = true, all_free = true;
    for (const auto& c : d->children) {
      Plan p = run(c);
      same_kids = same_kids && p.planned == c;
      dc.push_back(p.planned);
      all_free = all_free && p.cut_free;
      ec.push_back(p.cut_free);
    }
    Plan out;
    if (d->inst.rule == R::Derived && d->inst.macro != "AxG" && opt_.expand_cut_macros) {
      Derivation frag = expand_macro(d->inst.macro, d->conclusion, d->inst);
      if (contains_rule(expand_macros(frag), R::Cut)) {
        for (std::size_t k = 0; k < dc.size(); ++k) memo_.emplace(dc[k].get(), Plan{dc[k], ec[k]});
        Plan p = run(plug(frag, dc));
        if (p.cut_free) return memo_[d.get()] = p;
      }
    }
    out.planned = same_kids ? d : make_node(d->conclusion, d->inst, dc);
    if (all_free) {
      Derivation n = make_node(d->conclusion, d->inst, ec);
      if (d->inst.rule == R::Cut) {
        try {
          out.cut_free = eliminate_loop(n, opt_, nullptr);
        } catch (const std::runtime_error&) {
          out.cut_free = nullptr;
        }
      } else {
        out.cut_free = n;
      }
    }
    return memo_[d.get()] = out;
  }

 private:
  const CutElimOptions& opt_;
  std::unordered_map<const DerivationNode*, Plan> memo_;
};

}  // namespace

CutComplexity cut_complexity(const Derivation& c) {
  if (c->inst.rule != R::Cut || c->children.size() != 2 || c->inst.principal.size() != 1)
    throw CutElimError("cut_complexity on a non-Cut node");
  return {size(c->inst.principal[0]), cut_height(c)};
}

std::vector<CutComplexity> cut_measure(const Derivation& d) {
  CutFree free(d);
  std::vector<CutComplexity> out;
  std::function<void(const Derivation&)> go = [&](const Derivation& n) {
    if (free(n)) return;
    if (n->inst.rule == R::Cut) out.push_back(cut_complexity(n));
    for (const auto& c : n->children) go(c);
  };
  go(d);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

bool measure_less(const std::vector<CutComplexity>& a, const std::vector<CutComplexity>& b) {
  // Sorted descending, the multiset order is lexicographic comparison.
  std::vector<CutComplexity> x = a, y = b;
  std::sort(x.begin(), x.end(), std::greater<>());
  std::sort(y.begin(), y.end(), std::greater<>());
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

Derivation reduce_once(const Derivation& d, CutStep* step, const CutElimOptions& opt) {
  return reduce_step(d, step, opt);
}

Derivation eliminate_cuts(const Derivation& d, const CutElimOptions& opt, std::vector<CutStep>* trace) {
  MacroPlanner planner(opt);
  return eliminate_loop(planner.run(d).planned, opt, trace);
}

std::string to_string(const CutComplexity& c) {
  return "(" + std::to_string(c.k) + ", " + std::to_string(c.h) + ")";
}

}  // namespace hxp
