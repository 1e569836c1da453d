#include "hxproof/derived.hpp"

#include <deque>
#include <functional>

#include "hxproof/printer.hpp"
#include "hxproof/symbols.hpp"

namespace hxp {
namespace {

using R = RuleId;
constexpr Side L = Side::Left;
constexpr Side Rt = Side::Right;

[[noreturn]] void bad(const std::string& name, const std::string& why) {
  throw MacroError(name + ": " + why);
}

Node atn(const std::string& i, const std::string& j) { return at(i, nominal(j)); }

std::string fresh_for(const Sequent& g) { return fresh_nominal(g.nominals()); }

// φ∧ψ is stored as ¬(φ→¬ψ).
bool split_conj(const Node& e, Node& a, Node& b) {
  if (e->tag != NodeTag::Implies || e->rhs->tag != NodeTag::Bottom) return false;
  const Node& f = e->lhs;
  if (f->tag != NodeTag::Implies) return false;
  const Node& nb = f->rhs;
  if (nb->tag != NodeTag::Implies || nb->rhs->tag != NodeTag::Bottom) return false;
  a = f->lhs;
  b = nb->lhs;
  return true;
}

const NodeExpr& at_of(const std::string& name, const Node& e) {
  if (e->tag != NodeTag::At) bad(name, "expected @i φ, got " + print_node(e));
  return *e;
}

void need(const std::string& name, const Sequent& g, Side s, const Node& e) {
  if (!g.has(s, e)) bad(name, print_node(e) + " missing from the conclusion");
}

void arity(const std::string& name, const RuleInstance& ri, std::size_t n) {
  if (ri.principal.size() != n) bad(name, "expects " + std::to_string(n) + " principal formula(s)");
}

Derivation closed_by(const Sequent& g, const Sequent& prem) { return weaken_to(open_leaf(prem), g); }

// φ, Γ ⊢ Δ, φ by structural recursion on φ.
Derivation axg_tree(const Sequent& g, const Node& e) {
  if (is_nominal_compare(e)) {
    if (e->kind == CmpKind::Eq) return leaf(g, inst(R::Ax, {e}));
    return by1(g, inst(R::NEqR, {e}), [&](const Sequent& p) {
      return by1(p, inst(R::NEqL, {e}), [&](const Sequent& q) {
        return leaf(q, inst(R::Ax, {nominal_compare(e->left->symbol, CmpKind::Eq, e->symbol,
                                                    e->right->symbol)}));
      });
    });
  }
  const auto& f = at_of("AxG", e);
  const std::string& i = f.symbol;
  const Node& body = f.lhs;
  switch (body->tag) {
    case NodeTag::Prop:
    case NodeTag::Nominal: return leaf(g, inst(R::Ax, {e}));
    case NodeTag::Bottom: return leaf(g, inst(R::Bot, {e}));
    case NodeTag::Implies:
      return by1(g, inst(R::ImpR, {e}), [&](const Sequent& p) {
        return by(p, inst(R::ImpL, {e}), [&](std::size_t k, const Sequent& q) {
          return axg_tree(q, at(i, k == 0 ? body->lhs : body->rhs));
        });
      });
    case NodeTag::At:
      return by1(g, inst(R::AtR, {e}), [&](const Sequent& p) {
        return by1(p, inst(R::AtL, {e}), [&](const Sequent& q) { return axg_tree(q, body); });
      });
    case NodeTag::Diamond: {
      std::string j = fresh_for(g);
      return by1(g, inst(R::DiaL, {e}, {{"j", j}}), [&](const Sequent& p) {
        Node iaj = at(i, diamond(body->symbol, nominal(j)));
        return by1(p, inst(R::DiaR, {iaj, e}),
                   [&](const Sequent& q) { return axg_tree(q, at(j, body->lhs)); });
      });
    }
    case NodeTag::Compare: {
      auto jk = eigen_nominals(g.nominals(), 2);
      std::map<std::string, std::string> ps{{"j", jk[0]}, {"k", jk[1]}};
      return by1(g, inst(R::CmpL, {e}, ps), [&](const Sequent& p) {
        return by1(p, inst(R::CmpR, {e}, ps), [&](const Sequent& q) {
          return axg_tree(q, nominal_compare(jk[0], body->kind, body->symbol, jk[1]));
        });
      });
    }
  }
  bad("AxG", "unreachable");
}

// @ij, @iφ, Γ ⊢ Δ, @jφ.
Derivation axs_tree(const Sequent& g, const std::string& i, const std::string& j, const Node& phi) {
  Node ij = atn(i, j), ip = at(i, phi), jp = at(j, phi);
  if (i == j) return axg_tree(g, ip);
  switch (phi->tag) {
    case NodeTag::Prop:
      return by1(g, inst(R::S1, {ij, ip}), [&](const Sequent& p) { return leaf(p, inst(R::Ax, {jp})); });
    case NodeTag::Bottom: return leaf(g, inst(R::Bot, {ip}));
    case NodeTag::Nominal:
      return by1(g, inst(R::At5, {ij, ip}), [&](const Sequent& p) { return leaf(p, inst(R::Ax, {jp})); });
    case NodeTag::Implies:
      return by1(g, inst(R::ImpR, {jp}), [&](const Sequent& p) {
        return by(p, inst(R::ImpL, {ip}), [&](std::size_t k, const Sequent& q) {
          if (k == 1) return axs_tree(q, i, j, phi->rhs);
          // @ja ⊢ @ia needs the converse alias @ji.
          return by1(q, inst(R::AtT, {}, {{"i", i}}), [&](const Sequent& q1) {
            return by1(q1, inst(R::At5, {ij, atn(i, i)}),
                       [&](const Sequent& q2) { return axs_tree(q2, j, i, phi->lhs); });
          });
        });
      });
    case NodeTag::At:
      return by1(g, inst(R::AtL, {ip}), [&](const Sequent& p) {
        return by1(p, inst(R::AtR, {jp}), [&](const Sequent& q) { return axg_tree(q, phi); });
      });
    case NodeTag::Diamond: {
      std::string m = fresh_for(g);
      const std::string& a = phi->symbol;
      return by1(g, inst(R::DiaL, {ip}, {{"j", m}}), [&](const Sequent& p) {
        Node iam = at(i, diamond(a, nominal(m)));
        return by1(p, inst(R::S1, {ij, iam}), [&](const Sequent& q) {
          return by1(q, inst(R::DiaR, {at(j, diamond(a, nominal(m))), jp}),
                     [&](const Sequent& r) { return axg_tree(r, at(m, phi->lhs)); });
        });
      });
    }
    case NodeTag::Compare: {
      // The witnesses at j are only reachable through Cut.
      auto mn = eigen_nominals(g.nominals(), 2);
      std::map<std::string, std::string> ps{{"j", mn[0]}, {"k", mn[1]}};
      return by1(g, inst(R::CmpL, {ip}, ps), [&](const Sequent& p) {
        Node am = dia_path(phi->left, nominal(mn[0]));
        Node bn = dia_path(phi->right, nominal(mn[1]));
        Node x = at(j, am), y = at(j, bn);
        Derivation lx = axs_tree(p.with(Rt, x), i, j, am);
        Sequent px = p.with(L, x);
        Derivation ly = axs_tree(px.with(Rt, y), i, j, bn);
        Derivation rest = by1(px.with(L, y), inst(R::CmpR, {jp}, ps), [&](const Sequent& q) {
          return axg_tree(q, nominal_compare(mn[0], phi->kind, phi->symbol, mn[1]));
        });
        return cut(lx, cut(ly, rest, y), x);
      });
    }
  }
  bad("AxS", "unreachable");
}

Derivation top_l(const Sequent& g, const std::string& i) {
  Node t = at(i, top());
  Derivation left = by1(g.with(Rt, t), inst(R::ImpR, {t}),
                        [&](const Sequent& p) { return leaf(p, inst(R::Bot, {at(i, bottom())})); });
  return cut(left, open_leaf(g.with(L, t)), t);
}

Derivation and_l(const Sequent& g, const Node& x) {
  const auto& f = at_of("AndL", x);
  Node a, b;
  if (!split_conj(f.lhs, a, b)) bad("AndL", "principal is not a conjunction");
  const std::string& i = f.symbol;
  need("AndL", g, L, x);
  Sequent prem = g.without(L, x).with(L, at(i, a)).with(L, at(i, b));
  return by(g, inst(R::ImpL, {x}), [&](std::size_t k, const Sequent& p) {
    if (k == 1) return leaf(p, inst(R::Bot, {at(i, bottom())}));
    return by_kept1(p, inst(R::ImpR, {at(i, f.lhs->lhs)}), [&](const Sequent& q) {
      return by_kept1(q, inst(R::ImpR, {at(i, neg(b))}),
                      [&](const Sequent& r) { return closed_by(r, prem); });
    });
  });
}

Derivation and_r(const Sequent& g, const Node& x) {
  const auto& f = at_of("AndR", x);
  Node a, b;
  if (!split_conj(f.lhs, a, b)) bad("AndR", "principal is not a conjunction");
  const std::string& i = f.symbol;
  need("AndR", g, Rt, x);
  Sequent base = g.without(Rt, x);
  Sequent p1 = base.with(Rt, at(i, a)), p2 = base.with(Rt, at(i, b));
  return by_kept1(g, inst(R::ImpR, {x}), [&](const Sequent& p) {
    return by_kept(p, inst(R::ImpL, {at(i, f.lhs->lhs)}), [&](std::size_t k, const Sequent& q) {
      if (k == 0) return closed_by(q, p1);
      return by_kept(q, inst(R::ImpL, {at(i, neg(b))}), [&](std::size_t m, const Sequent& r) {
        if (m == 0) return closed_by(r, p2);
        return leaf(r, inst(R::Bot, {at(i, bottom())}));
      });
    });
  });
}

Derivation iff_r(const Sequent& g, const Node& x) {
  const auto& f = at_of("IffR", x);
  Node pq, qp;
  if (!split_conj(f.lhs, pq, qp) || pq->tag != NodeTag::Implies || !equal(qp, implies(pq->rhs, pq->lhs)))
    bad("IffR", "principal is not a biconditional");
  const std::string& i = f.symbol;
  need("IffR", g, Rt, x);
  Sequent base = g.without(Rt, x);
  return by(g, macro_inst("AndR", {x}), [&](std::size_t k, const Sequent& p) {
    Node a = k == 0 ? pq->lhs : pq->rhs, b = k == 0 ? pq->rhs : pq->lhs;
    Sequent prem = base.with(L, at(i, a)).with(Rt, at(i, b));
    return by_kept1(p, inst(R::ImpR, {at(i, implies(a, b))}),
                    [&](const Sequent& q) { return closed_by(q, prem); });
  });
}

Derivation cmp_b(const Sequent& g, const Node& x) {
  if (!is_nominal_compare(x)) bad("CmpB", "principal must be <i: ▲ j:>");
  need("CmpB", g, L, x);
  const std::string &i = x->left->symbol, &j = x->right->symbol, &c = x->symbol;
  Node y = nominal_compare(j, x->kind, c, i);
  Sequent prem = g.without(L, x).with(L, y);
  // <i:=j:> ⊢ <j:=i:> from reflexivity and Euclideanness.
  auto flip_eq = [&](const Sequent& s, const std::string& u, const std::string& v, auto&& k) {
    return by1(s, inst(R::EqT, {}, {{"i", u}, {"c", c}}), [&](const Sequent& p) {
      return by1(p, inst(R::Eq5, {nominal_compare(u, CmpKind::Eq, c, v), nominal_compare(u, CmpKind::Eq, c, u)}),
                 k);
    });
  };
  if (x->kind == CmpKind::Eq)
    return flip_eq(g, i, j, [&](const Sequent& q) { return closed_by(q, prem); });
  Node xe = nominal_compare(i, CmpKind::Eq, c, j);
  Derivation left = by_kept1(g.with(Rt, y), inst(R::NEqR, {y}), [&](const Sequent& p) {
    return flip_eq(p, j, i, [&](const Sequent& q) {
      return by_kept1(q, inst(R::NEqL, {x}), [&](const Sequent& r) { return leaf(r, inst(R::Ax, {xe})); });
    });
  });
  return cut(left, open_leaf(prem), y);
}

// Cut on `x`: the left branch proves g, x on the right; the right branch
// is the open premiss.
template <typename F>
Derivation cut_in(const Sequent& g, const Node& x, const Sequent& prem, F&& left_proof) {
  Derivation left = left_proof(g.with(Rt, x));
  return cut(left, open_leaf(prem), x);
}

Derivation inv_and_l(const Sequent& g, const RuleInstance& ri) {
  arity("InvAndL", ri, 2);
  const auto& a = at_of("InvAndL", ri.principal[0]);
  const auto& b = at_of("InvAndL", ri.principal[1]);
  if (a.symbol != b.symbol) bad("InvAndL", "principals must share their index");
  need("InvAndL", g, L, ri.principal[0]);
  need("InvAndL", g, L, ri.principal[1]);
  Node x = at(a.symbol, conj(a.lhs, b.lhs));
  Sequent prem = g.without(L, ri.principal[0]).without(L, ri.principal[1]).with(L, x);
  return cut_in(g, x, prem, [&](const Sequent& s) {
    return by(s, macro_inst("AndR", {x}),
              [&](std::size_t k, const Sequent& p) { return axg(p, ri.principal[k]); });
  });
}

Derivation inv_imp_r(const Sequent& g, const RuleInstance& ri) {
  arity("InvImpR", ri, 2);
  const auto& a = at_of("InvImpR", ri.principal[0]);
  const auto& b = at_of("InvImpR", ri.principal[1]);
  if (a.symbol != b.symbol) bad("InvImpR", "principals must share their index");
  need("InvImpR", g, L, ri.principal[0]);
  need("InvImpR", g, Rt, ri.principal[1]);
  Node x = at(a.symbol, implies(a.lhs, b.lhs));
  Sequent prem = g.without(L, ri.principal[0]).without(Rt, ri.principal[1]).with(Rt, x);
  Derivation right = by_kept(g.with(L, x), inst(R::ImpL, {x}), [&](std::size_t k, const Sequent& p) {
    return axg(p, ri.principal[k]);
  });
  return cut(open_leaf(prem), right, x);
}

Derivation inv_at_l(const Sequent& g, const RuleInstance& ri) {
  arity("InvAtL", ri, 1);
  const Node& ip = ri.principal[0];
  at_of("InvAtL", ip);
  need("InvAtL", g, L, ip);
  Node x = at(ri.param("j"), ip);
  Sequent prem = g.without(L, ip).with(L, x);
  return cut_in(g, x, prem, [&](const Sequent& s) {
    return by_kept1(s, inst(R::AtR, {x}), [&](const Sequent& p) { return axg(p, ip); });
  });
}

Derivation inv_dia_l(const Sequent& g, const RuleInstance& ri) {
  arity("InvDiaL", ri, 2);
  const auto& iaj = at_of("InvDiaL", ri.principal[0]);
  const auto& jp = at_of("InvDiaL", ri.principal[1]);
  if (iaj.lhs->tag != NodeTag::Diamond || iaj.lhs->lhs->tag != NodeTag::Nominal ||
      iaj.lhs->lhs->symbol != jp.symbol)
    bad("InvDiaL", "expects @i<a>j and @jφ");
  need("InvDiaL", g, L, ri.principal[0]);
  need("InvDiaL", g, L, ri.principal[1]);
  Node x = at(iaj.symbol, diamond(iaj.lhs->symbol, jp.lhs));
  Sequent prem = g.without(L, ri.principal[0]).without(L, ri.principal[1]).with(L, x);
  return cut_in(g, x, prem, [&](const Sequent& s) {
    return by1(s, inst(R::DiaR, {ri.principal[0], x}),
               [&](const Sequent& p) { return axg(p, ri.principal[1]); });
  });
}

Derivation inv_cmp_l(const Sequent& g, const RuleInstance& ri) {
  arity("InvCmpL", ri, 1);
  const Node& x = ri.principal[0];
  const auto& f = at_of("InvCmpL", x);
  if (f.lhs->tag != NodeTag::Compare) bad("InvCmpL", "principal must be @i<α▲β>");
  const auto& c = *f.lhs;
  std::string j = ri.param("j"), k = ri.param("k");
  Node aj = at(f.symbol, dia_path(c.left, nominal(j)));
  Node bk = at(f.symbol, dia_path(c.right, nominal(k)));
  Node jk = nominal_compare(j, c.kind, c.symbol, k);
  for (const auto& e : {aj, bk, jk}) need("InvCmpL", g, L, e);
  Sequent prem = g.without(L, aj).without(L, bk).without(L, jk).with(L, x);
  return cut_in(g, x, prem, [&](const Sequent& s) {
    return by1(s, inst(R::CmpR, {x}, {{"j", j}, {"k", k}}), [&](const Sequent& p) { return axg(p, jk); });
  });
}

Derivation nom1(const Sequent& g, const RuleInstance& ri) {
  arity("Nom1", ri, 1);
  const auto& f = at_of("Nom1", ri.principal[0]);
  need("Nom1", g, Rt, ri.principal[0]);
  std::string i = ri.param("i"), j = f.symbol;
  Node ij = atn(i, j), ip = at(i, f.lhs);
  Sequent base = g.without(Rt, ri.principal[0]);
  Derivation inner = cut(weaken(open_leaf(base.with(Rt, ip)), L, ij),
                         make_node(base.with(L, ip).with(L, ij).with(Rt, ri.principal[0]),
                                   macro_inst("AxS", {ij, ip})),
                         ip);
  return cut(open_leaf(base.with(Rt, ij)), inner, ij);
}

Derivation nom2(const Sequent& g, const RuleInstance& ri) {
  arity("Nom2", ri, 0);
  std::string i = ri.param("i"), j = ri.param("j"), k = ri.param("k"), a = ri.param("a");
  Node ij = atn(i, j), iak = at(i, diamond(a, nominal(k))), jak = at(j, diamond(a, nominal(k)));
  Derivation s1 = by1(g.with(L, iak).with(L, ij), inst(R::S1, {ij, iak}), [&](const Sequent&) {
    return weaken(open_leaf(g.with(L, jak)), L, std::vector<Node>{ij, iak});
  });
  Derivation inner = cut(weaken(open_leaf(g.with(Rt, iak)), L, ij), s1, iak);
  return cut(open_leaf(g.with(Rt, ij)), inner, ij);
}

// [a]φ is ¬<a>¬φ.
bool split_box(const Node& e, std::string& a, Node& phi) {
  if (e->tag != NodeTag::Implies || e->rhs->tag != NodeTag::Bottom) return false;
  const Node& d = e->lhs;
  if (d->tag != NodeTag::Diamond || d->lhs->tag != NodeTag::Implies || d->lhs->rhs->tag != NodeTag::Bottom)
    return false;
  a = d->symbol;
  phi = d->lhs->lhs;
  return true;
}

Derivation box_l(const Sequent& g, const RuleInstance& ri) {
  arity("BoxL", ri, 1);
  const Node& x = ri.principal[0];
  const auto& f = at_of("BoxL", x);
  std::string a;
  Node phi;
  if (!split_box(f.lhs, a, phi)) bad("BoxL", "principal must be @i[a]φ");
  need("BoxL", g, L, x);
  const std::string& i = f.symbol;
  std::string j = ri.param("j");
  Node iaj = at(i, diamond(a, nominal(j))), ianp = at(i, f.lhs->lhs), jnp = at(j, neg(phi));
  Sequent base = g.without(L, x);
  Sequent prem2 = base.with(L, at(j, phi));
  return by(g, inst(R::ImpL, {x}), [&](std::size_t k, const Sequent& p) {
    if (k == 1) return leaf(p, inst(R::Bot, {at(i, bottom())}));
    Derivation right = by1(p.with(L, iaj), inst(R::DiaR, {iaj, ianp}), [&](const Sequent& q) {
      return by_kept1(q, inst(R::ImpR, {jnp}), [&](const Sequent& r) { return closed_by(r, prem2); });
    });
    return cut(open_leaf(base.with(Rt, iaj)), right, iaj);
  });
}

Derivation box_r(const Sequent& g, const RuleInstance& ri) {
  arity("BoxR", ri, 1);
  const Node& x = ri.principal[0];
  const auto& f = at_of("BoxR", x);
  std::string a;
  Node phi;
  if (!split_box(f.lhs, a, phi)) bad("BoxR", "principal must be @i[a]φ");
  need("BoxR", g, Rt, x);
  const std::string& i = f.symbol;
  std::string j = ri.param("j");
  Sequent prem = g.without(Rt, x).with(L, at(i, diamond(a, nominal(j)))).with(Rt, at(j, phi));
  return by1(g, inst(R::ImpR, {x}), [&](const Sequent& p) {
    return by1(p, inst(R::DiaL, {at(i, f.lhs->lhs)}, {{"j", j}}), [&](const Sequent& q) {
      return by(q, inst(R::ImpL, {at(j, neg(phi))}), [&](std::size_t k, const Sequent& r) {
        if (k == 1) return leaf(r, inst(R::Bot, {at(j, bottom())}));
        return closed_by(r, prem);
      });
    });
  });
}

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

Node rest_body(const std::vector<Path>& steps, std::size_t from, const Node& phi) {
  Node body = phi;
  for (std::size_t k = steps.size(); k > from; --k) body = dia_path(steps[k - 1], body);
  return body;
}

Derivation dia_left(const Sequent& g, const std::string& i, const std::vector<Path>& steps, std::size_t idx,
                    const Node& phi) {
  if (idx == steps.size()) return open_leaf(g);
  Node body = rest_body(steps, idx + 1, phi);
  const Path& s = steps[idx];
  switch (s->tag) {
    case PathTag::Atom: {
      std::string j = fresh_for(g);
      return by1(g, inst(R::DiaL, {at(i, diamond(s->symbol, body))}, {{"j", j}}),
                 [&](const Sequent& p) { return dia_left(p, j, steps, idx + 1, phi); });
    }
    case PathTag::Jump:
      return by1(g, inst(R::AtL, {at(i, at(s->symbol, body))}),
                 [&](const Sequent& p) { return dia_left(p, s->symbol, steps, idx + 1, phi); });
    case PathTag::Test:
      return by1(g, macro_inst("AndL", {at(i, conj(s->test, body))}),
                 [&](const Sequent& p) { return dia_left(p, i, steps, idx + 1, phi); });
    case PathTag::Concat: break;
  }
  bad("general_dia", "unflattened path");
}

struct Pending {
  std::string at;
  std::size_t idx;
};

Derivation dia_right(const Sequent& g, const std::vector<Path>& steps, const Node& phi,
                     std::deque<Pending> todo) {
  while (!todo.empty() && todo.front().idx == steps.size()) todo.pop_front();
  if (todo.empty()) return open_leaf(g);
  Pending cur = todo.front();
  todo.pop_front();
  const std::string& i = cur.at;
  Node body = rest_body(steps, cur.idx + 1, phi);
  const Path& s = steps[cur.idx];
  switch (s->tag) {
    case PathTag::Atom: {
      Node e = at(i, diamond(s->symbol, body));
      std::vector<std::string> ws;
      for (const auto& f : g.ante())
        if (f->tag == NodeTag::At && f->symbol == i && f->lhs->tag == NodeTag::Diamond &&
            f->lhs->symbol == s->symbol && f->lhs->lhs->tag == NodeTag::Nominal)
          ws.push_back(f->lhs->lhs->symbol);
      for (const auto& w : ws) todo.push_back({w, cur.idx + 1});
      std::function<Derivation(const Sequent&, std::size_t)> chain = [&](const Sequent& h, std::size_t k) {
        if (k == ws.size()) return dia_right(h, steps, phi, todo);
        return by1(h, inst(R::DiaR, {at(i, diamond(s->symbol, nominal(ws[k]))), e}),
                   [&](const Sequent& p) { return chain(p, k + 1); });
      };
      return chain(g, 0);
    }
    case PathTag::Jump:
      todo.push_front({s->symbol, cur.idx + 1});
      return by1(g, inst(R::AtR, {at(i, at(s->symbol, body))}),
                 [&](const Sequent& p) { return dia_right(p, steps, phi, todo); });
    case PathTag::Test:
      return by(g, macro_inst("AndR", {at(i, conj(s->test, body))}), [&](std::size_t k, const Sequent& p) {
        if (k == 0) return open_leaf(p);
        auto more = todo;
        more.push_front({i, cur.idx + 1});
        return dia_right(p, steps, phi, more);
      });
    case PathTag::Concat: break;
  }
  bad("general_dia", "unflattened path");
}

}  // namespace

std::vector<std::string> eigen_nominals(const std::set<std::string>& avoid, std::size_t count) {
  std::vector<std::string> out;
  std::size_t hint = 0;
  while (out.size() < count) out.push_back(fresh_nominal(avoid, hint));
  return out;
}

Derivation axg(const Sequent& goal, const Node& phi) {
  need("AxG", goal, L, phi);
  need("AxG", goal, Rt, phi);
  return make_node(goal, macro_inst("AxG", {phi}));
}

const std::vector<std::string>& macro_names() {
  static const std::vector<std::string> names = {
      "AxG", "AxS", "TopL", "AndL", "AndR", "IffR", "CmpB", "InvAndL", "InvImpR",
      "InvAtL", "InvDiaL", "InvCmpL", "Nom1", "Nom2", "BoxL", "BoxR"};
  return names;
}

Derivation expand_macro(const std::string& name, const Sequent& g, const RuleInstance& ri) {
  if (name == "AxG") {
    arity(name, ri, 1);
    need(name, g, L, ri.principal[0]);
    need(name, g, Rt, ri.principal[0]);
    return axg_tree(g, ri.principal[0]);
  }
  if (name == "AxS") {
    arity(name, ri, 2);
    const auto& ij = at_of(name, ri.principal[0]);
    const auto& ip = at_of(name, ri.principal[1]);
    if (ij.lhs->tag != NodeTag::Nominal || ij.symbol != ip.symbol) bad(name, "expects @ij and @iφ");
    need(name, g, L, ri.principal[0]);
    need(name, g, L, ri.principal[1]);
    need(name, g, Rt, at(ij.lhs->symbol, ip.lhs));
    return axs_tree(g, ij.symbol, ij.lhs->symbol, ip.lhs);
  }
  if (name == "TopL") {
    arity(name, ri, 0);
    return top_l(g, ri.param("i"));
  }
  if (name == "AndL") {
    arity(name, ri, 1);
    return and_l(g, ri.principal[0]);
  }
  if (name == "AndR") {
    arity(name, ri, 1);
    return and_r(g, ri.principal[0]);
  }
  if (name == "IffR") {
    arity(name, ri, 1);
    return iff_r(g, ri.principal[0]);
  }
  if (name == "CmpB") {
    arity(name, ri, 1);
    return cmp_b(g, ri.principal[0]);
  }
  if (name == "InvAndL") return inv_and_l(g, ri);
  if (name == "InvImpR") return inv_imp_r(g, ri);
  if (name == "InvAtL") return inv_at_l(g, ri);
  if (name == "InvDiaL") return inv_dia_l(g, ri);
  if (name == "InvCmpL") return inv_cmp_l(g, ri);
  if (name == "Nom1") return nom1(g, ri);
  if (name == "Nom2") return nom2(g, ri);
  if (name == "BoxL") return box_l(g, ri);
  if (name == "BoxR") return box_r(g, ri);
  throw MacroError("unknown macro '" + name + "'");
}

Derivation general_dia(const Sequent& goal, const std::string& i, const Path& alpha, const Node& phi,
                       Side side) {
  auto steps = flatten(alpha);
  Node e = at(i, dia_path(alpha, phi));
  need("general_dia", goal, side, e);
  if (side == L) return dia_left(goal, i, steps, 0, phi);
  return dia_right(goal, steps, phi, {{i, 0}});
}

Derivation expand_macros(const Derivation& d) {
  std::vector<Derivation> ch;
  bool same = true;
  for (const auto& c : d->children) {
    ch.push_back(expand_macros(c));
    same = same && ch.back() == c;
  }
  if (d->inst.rule != RuleId::Derived)
    return same ? d : make_node(d->conclusion, d->inst, std::move(ch));
  Derivation frag = expand_macros(expand_macro(d->inst.macro, d->conclusion, d->inst));
  return plug(frag, ch);
}

}  // namespace hxp
