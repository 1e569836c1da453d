// Hand-built derivations of the comparison axioms, the Paste step and the
// Nom2 simulation, following the displayed trees rule by rule.

#include "hxproof/derived.hpp"
#include "hxproof/search.hpp"
#include "hxproof/symbols.hpp"

namespace hxp {
namespace {

using R = RuleId;
constexpr Side L = Side::Left;

Node ncmp(const std::string& i, CmpKind kind, const std::string& c, const std::string& j) {
  return nominal_compare(i, kind, c, j);
}

// Closes φ, Γ ⊢ Δ, φ with Ax when φ has axiom shape.
Derivation close_with(const Sequent& s, const Node& phi) {
  return is_axiom_shape(phi) ? leaf(s, inst(R::Ax, {phi})) : axg(s, phi);
}

std::string pick(const std::string& want, std::set<std::string>& avoid) {
  std::string out = avoid.count(want) ? fresh_nominal(avoid) : want;
  avoid.insert(out);
  return out;
}

struct PasteNames {
  std::string i = "i", j = "j", k, l, m;
};

PasteNames paste_names(const Node& chi, const Path& alpha, const Path& beta) {
  PasteNames n;
  std::set<std::string> avoid = nominals_of(chi);
  for (const auto& x : nominals_of(alpha)) avoid.insert(x);
  for (const auto& x : nominals_of(beta)) avoid.insert(x);
  avoid.insert(n.i);
  avoid.insert(n.j);
  n.k = pick("k", avoid);
  n.l = pick("l", avoid);
  n.m = pick("m", avoid);
  return n;
}

Node paste_cut_formula(const PasteNames& n, const std::string& a, const Path& alpha, const Path& beta,
                       CmpKind kind, const std::string& c) {
  return at(n.i, conj(at(n.j, diamond(a, nominal(n.k))), compare(concat(jump(n.k), alpha), kind, c, beta)));
}

}  // namespace

Derivation reflexivity_derivation(const std::string& i, const std::string& c) {
  Node goal = at(i, compare(eps(), CmpKind::Eq, c, eps()));
  Node ii = ncmp(i, CmpKind::Eq, c, i);
  return by1(Sequent({}, {goal}), inst(R::AtT, {}, {{"i", i}}), [&](const Sequent& p1) {
    return by1(p1, macro_inst("TopL", {}, {{"i", i}}), [&](const Sequent& p2) {
      return by1(p2, macro_inst("InvAndL", {at(i, top()), at(i, nominal(i))}), [&](const Sequent& p3) {
        return by1(p3, inst(R::CmpR, {goal}, {{"j", i}, {"k", i}}), [&](const Sequent& p4) {
          return by1(p4, inst(R::EqT, {}, {{"i", i}, {"c", c}}),
                     [&](const Sequent& p5) { return leaf(p5, inst(R::Ax, {ii})); });
        });
      });
    });
  });
}

Derivation symmetry_derivation(const std::string& i, const std::string& a, const std::string& b, CmpKind kind,
                               const std::string& c) {
  Node ab = compare(atom(a), kind, c, atom(b));
  Node ba = compare(atom(b), kind, c, atom(a));
  Node goal = at(i, iff(ab, ba));
  // One direction: CmpL names the witnesses of `from`, CmpR reuses them
  // in swapped roles and CmpB flips the comparison back.
  auto side = [&](const Sequent& s, const Node& from, const Node& to, const std::string& x,
                  const std::string& y) {
    return by1(s, inst(R::CmpL, {at(i, from)}, {{"j", x}, {"k", y}}), [&](const Sequent& p1) {
      return by1(p1, inst(R::CmpR, {at(i, to)}, {{"j", y}, {"k", x}}), [&](const Sequent& p2) {
        return by1(p2, macro_inst("CmpB", {ncmp(x, kind, c, y)}),
                   [&](const Sequent& p3) { return close_with(p3, ncmp(y, kind, c, x)); });
      });
    });
  };
  return by(Sequent({}, {goal}), macro_inst("IffR", {goal}), [&](std::size_t n, const Sequent& p) {
    return n == 0 ? side(p, ab, ba, "j", "k") : side(p, ba, ab, "k", "j");
  });
}

Derivation transitivity_derivation(const Path& alpha, const Path& beta, const std::string& i,
                                   const std::string& c) {
  std::set<std::string> used = nominals_of(alpha);
  for (const auto& x : nominals_of(beta)) used.insert(x);
  used.insert(i);
  // Witnesses of α, the two names of the middle node, witness of β.
  std::string wa = pick("j", used), wc = pick("k", used), wd = pick("l", used), wb = pick("m", used);
  const auto eq = CmpKind::Eq;
  Node A = compare(alpha, eq, c, eps()), B = compare(eps(), eq, c, beta), C = compare(alpha, eq, c, beta);
  Node goal = at(i, implies(conj(A, B), C));
  Node eps_c = at(i, dia_path(eps(), nominal(wc))), eps_d = at(i, dia_path(eps(), nominal(wd)));

  // ⟨wa=wc⟩, ⟨wc=wb⟩ ⊢ ⟨wa=wb⟩ by symmetry and Euclideanness.
  Sequent r({ncmp(wa, eq, c, wc), ncmp(wc, eq, c, wb)}, {ncmp(wa, eq, c, wb)});
  Derivation top_part = by1(r, macro_inst("CmpB", {ncmp(wa, eq, c, wc)}), [&](const Sequent& p) {
    return by1(p, inst(R::Eq5, {ncmp(wc, eq, c, wa), ncmp(wc, eq, c, wb)}),
               [&](const Sequent& q) { return leaf(q, inst(R::Ax, {ncmp(wa, eq, c, wb)})); });
  });
  // @wd wc, ⟨wa=wc⟩, ⟨wd=wb⟩ ⊢ ⟨wa=wb⟩: S3 renames wd to wc.
  Sequent q({at(wd, nominal(wc)), ncmp(wa, eq, c, wc), ncmp(wd, eq, c, wb)}, {ncmp(wa, eq, c, wb)});
  Derivation s3_part = by1(q, inst(R::S3, {at(wd, nominal(wc)), ncmp(wd, eq, c, wb)}),
                           [&](const Sequent& p) { return weaken_to(top_part, p); });

  return by1(Sequent({}, {goal}), inst(R::ImpR, {goal}), [&](const Sequent& p1) {
    return by1(p1, macro_inst("AndL", {at(i, conj(A, B))}), [&](const Sequent& p2) {
      return by1(p2, inst(R::CmpL, {at(i, A)}, {{"j", wa}, {"k", wc}}), [&](const Sequent& p3) {
        return by1(p3, inst(R::CmpL, {at(i, B)}, {{"j", wd}, {"k", wb}}), [&](const Sequent& p4) {
          return by1(p4, macro_inst("AndL", {eps_c}), [&](const Sequent& p5) {
            return by1(p5, macro_inst("AndL", {eps_d}), [&](const Sequent& p6) {
              return by1(p6, inst(R::CmpR, {at(i, C)}, {{"j", wa}, {"k", wb}}), [&](const Sequent& p7) {
                return by1(p7, inst(R::At5, {at(i, nominal(wd)), at(i, nominal(wc))}),
                           [&](const Sequent& p8) { return weaken_to(s3_part, p8); });
              });
            });
          });
        });
      });
    });
  });
}

Sequent paste_hypothesis(const std::string& a, const Node& chi, const Path& alpha, const Path& beta, CmpKind kind,
                         const std::string& c) {
  PasteNames n = paste_names(chi, alpha, beta);
  Node cf = paste_cut_formula(n, a, alpha, beta, kind, c);
  return Sequent({}, {at(n.i, implies(cf->lhs, chi))});
}

Derivation paste_derivation(const std::string& a, const Node& chi, const Path& alpha, const Path& beta,
                            CmpKind kind, const std::string& c, const Derivation& hypothesis) {
  PasteNames n = paste_names(chi, alpha, beta);
  Path jaa = concat(jump(n.j), concat(atom(a), alpha));
  Node pasted = compare(jaa, kind, c, beta);
  Node goal = at(n.i, implies(pasted, chi));
  Node cf = paste_cut_formula(n, a, alpha, beta, kind, c);
  Node ichi = at(n.i, chi);
  Node jak = at(n.j, diamond(a, nominal(n.k)));
  Node k_alpha_l = at(n.k, dia_path(alpha, nominal(n.l)));
  Node i_beta_m = at(n.i, dia_path(beta, nominal(n.m)));
  Node lm = ncmp(n.l, kind, c, n.m);
  Node k_cmp = at(n.i, compare(concat(jump(n.k), alpha), kind, c, beta));

  Sequent hyp_goal = paste_hypothesis(a, chi, alpha, beta, kind, c);
  Derivation hyp = hypothesis ? hypothesis : open_leaf(hyp_goal);
  Derivation right = make_node(Sequent({cf}, {ichi}), macro_inst("InvImpR", {cf, ichi}), {hyp});

  auto cut_step = [&](const Sequent& g4) {
    Sequent lg(g4.ante().items(), {cf});
    Derivation left = by(lg, macro_inst("AndR", {cf}), [&](std::size_t b, const Sequent& p) {
      if (b == 0) {
        Derivation d = by1(Sequent({jak}, {at(n.i, jak)}), inst(R::AtR, {at(n.i, jak)}),
                           [&](const Sequent& q) { return axg(q, jak); });
        return weaken_to(d, p);
      }
      Sequent inner({k_alpha_l, i_beta_m, lm}, {k_cmp});
      Derivation d = by1(inner, macro_inst("InvAtL", {k_alpha_l}, {{"j", n.i}}), [&](const Sequent& q) {
        return by1(q, inst(R::CmpR, {k_cmp}, {{"j", n.l}, {"k", n.m}}), [&](const Sequent& q2) {
          return weaken_to(close_with(Sequent({lm}, {lm}), lm), q2);
        });
      });
      return weaken_to(d, p);
    });
    return cut(left, right, cf);
  };

  return by1(Sequent({}, {goal}), inst(R::ImpR, {goal}), [&](const Sequent& p1) {
    return by1(p1, inst(R::CmpL, {at(n.i, pasted)}, {{"j", n.l}, {"k", n.m}}), [&](const Sequent& p2) {
      Node at_j = at(n.i, dia_path(jaa, nominal(n.l)));
      return by1(p2, inst(R::AtL, {at_j}), [&](const Sequent& p3) {
        return by1(p3, inst(R::DiaL, {at_j->lhs}, {{"j", n.k}}), cut_step);
      });
    });
  });
}

Derivation nom2_derivation() {
  Node ij = at("i", nominal("j")), iak = at("i", diamond("a", nominal("k"))), jak = at("j", diamond("a", nominal("k")));
  Sequent goal({ij, iak}, {jak});
  RuleInstance ri = macro_inst("Nom2", {}, {{"i", "i"}, {"j", "j"}, {"k", "k"}, {"a", "a"}});
  Derivation frag = expand_macro("Nom2", goal, ri);
  auto leaves = open_leaves(frag);
  std::vector<Derivation> fill{leaf(leaves[0]->conclusion, inst(R::Ax, {ij})), axg(leaves[1]->conclusion, iak),
                               axg(leaves[2]->conclusion, jak)};
  return plug(frag, fill);
}

std::map<std::string, Derivation> prove_axiom_suite() {
  std::map<std::string, Derivation> out;
  out["reflexivity"] = reflexivity_derivation();
  out["symmetry"] = symmetry_derivation();
  out["transitivity"] = transitivity_derivation(atom("a"), atom("b"));
  // χ is the pasted comparison itself, so the premiss is valid and the
  // search supplies its proof.
  Path alpha = atom("b"), beta = atom("d");
  Node chi = compare(concat(jump("j"), concat(atom("a"), alpha)), CmpKind::Eq, "c", beta);
  SearchConfig cfg;
  cfg.enable_countermodel = false;
  SearchResult hyp = prove(paste_hypothesis("a", chi, alpha, beta), cfg);
  out["paste"] = paste_derivation("a", chi, alpha, beta, CmpKind::Eq, "c", hyp.proof);
  out["nom2"] = nom2_derivation();
  return out;
}

}  // namespace hxp
