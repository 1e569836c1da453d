#include "doctest.h"
#include "fixtures.hpp"
#include "hxproof/parser.hpp"
#include "hxproof/printer.hpp"

using namespace hxp;
using Status = SearchResult::Status;

TEST_CASE("search proves the comparison axioms") {
  SearchResult refl = prove(parse_sequent("|- @i <eps =c eps>"));
  REQUIRE(refl.status == Status::Proved);
  CHECK(check_derivation(refl.proof).empty());
  CHECK(refl.proof->conclusion == parse_sequent("|- @i <eps =c eps>"));

  SearchResult sym = prove(parse_sequent("|- @i (<a =c b> -> <b =c a>)"));
  REQUIRE(sym.status == Status::Proved);
  CHECK(check_derivation(sym.proof).empty());

  SearchResult dia = prove(parse_sequent("@i <a> j, @j p |- @i <a> p"));
  REQUIRE(dia.status == Status::Proved);
  CHECK(check_derivation(dia.proof).empty());
}

TEST_CASE("search refutes with a small model") {
  SearchResult r = prove(parse_sequent("|- @i p"));
  REQUIRE(r.status == Status::Refuted);
  REQUIRE(r.model);
  CHECK(r.model->size() == 1);
  CHECK_FALSE(check_sequent_validity(*r.model, parse_sequent("|- @i p")));

  SearchResult d = prove(parse_sequent("@i <a> p |- @i p"));
  REQUIRE(d.status == Status::Refuted);
  CHECK_FALSE(check_sequent_validity(*d.model, parse_sequent("@i <a> p |- @i p")));
}

TEST_CASE("bounds give Unknown") {
  SearchConfig cfg;
  cfg.max_steps = 1;
  cfg.enable_countermodel = false;
  SearchResult r = prove(parse_sequent("|- @i (<a =c b> -> <b =c a>)"), cfg);
  CHECK(r.status == Status::Unknown);
  CHECK_FALSE(r.report.empty());
  CHECK(std::string(to_string(r.status)) == "Unknown");
}

TEST_CASE("axiom suite") {
  auto suite = prove_axiom_suite();
  for (const char* n : {"reflexivity", "symmetry", "transitivity", "paste", "nom2"}) {
    REQUIRE(suite.count(n));
    INFO(n);
    CHECK(check_derivation(suite.at(n)).empty());
  }
  CHECK(suite.at("reflexivity")->conclusion == parse_sequent("|- @i <eps =c eps>"));
  CHECK(height(reflexivity_derivation()) == 6);
  CHECK(nom2_derivation()->conclusion == parse_sequent("@i j, @i <a> k |- @j <a> k"));
  Derivation tr = transitivity_derivation(atom("a"), concat(atom("a"), atom("b")));
  CHECK(check_derivation(tr).empty());
  CHECK(check_derivation(symmetry_derivation("i", "a", "b", CmpKind::Neq)).empty());
}

TEST_CASE("paste leaves its hypothesis open") {
  Path alpha = atom("b"), beta = atom("a");
  Node chi = compare(concat(jump("j"), concat(atom("a"), alpha)), CmpKind::Eq, "c", beta);
  Derivation d = paste_derivation("a", chi, alpha, beta);
  CHECK(check_derivation(d, {true}).empty());
  auto leaves = open_leaves(d);
  REQUIRE(leaves.size() == 1);
  CHECK(leaves[0]->conclusion == paste_hypothesis("a", chi, alpha, beta));
}

TEST_CASE("every rule can be inverted") {
  oracle::Gen g(41);
  for (RuleId r : fixtures::logical_rules()) {
    INFO(rule_name(r));
    int made = 0;
    for (int t = 0; t < 3; ++t) {
      auto x = fixtures::instance(r, g);
      if (!x) continue;
      ++made;
      CHECK(fixtures::check_inverse(*x) == "");
    }
    CHECK(made > 0);
  }
}

TEST_CASE("EqT inverts without a cut") {
  Sequent g = parse_sequent("@i j |- @j i");
  Derivation d = prove(g).proof;
  REQUIRE_FALSE(contains_rule(d, RuleId::Cut));
  RuleInstance ri = inst(RuleId::EqT, {}, {{"i", "i"}, {"c", "c"}});
  auto inv = invert(RuleId::EqT, d, ri);
  REQUIRE(inv.size() == 1);
  CHECK(inv[0]->conclusion == apply_rule(g, ri)[0]);
  CHECK(check_derivation(inv[0]).empty());
  CHECK_FALSE(contains_rule(inv[0], RuleId::Cut));
}

TEST_CASE("structural rules are not inverted") {
  Derivation d = prove(parse_sequent("@i p |- @i p")).proof;
  CHECK_THROWS(invert(RuleId::Cut, d, inst(RuleId::Cut, {parse_node("@i q")})));
  CHECK_THROWS_AS(invert(RuleId::ImpR, d, inst(RuleId::ImpR, {parse_node("@i (p -> q)")})), RuleError);
}

TEST_CASE("disabled rules are avoided") {
  SearchConfig cfg;
  cfg.disabled = {RuleId::CmpR};
  SearchResult r = prove(parse_sequent("|- @i <eps =c eps>"), cfg);
  CHECK(r.status != Status::Proved);
  SearchConfig plain;
  plain.use_generalized_axiom = false;
  SearchResult a = prove(parse_sequent("@i (p & q) |- @i (p & q)"), plain);
  REQUIRE(a.status == Status::Proved);
  CHECK_FALSE(contains_rule(a.proof, RuleId::Derived));
}
