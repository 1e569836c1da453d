#include "doctest.h"
#include "fixtures.hpp"
#include "hxproof/derived.hpp"
#include "hxproof/hylo.hpp"
#include "hxproof/parser.hpp"

using namespace hxp;
using Status = SearchResult::Status;

TEST_CASE("fragment test") {
  CHECK(is_hylo(parse_node("@i <a> (p -> j)")));
  CHECK(is_hylo(parse_node("@i [a] ~p")));
  CHECK_FALSE(is_hylo(parse_node("@i <a =c b>")));
  CHECK_FALSE(is_hylo(parse_node("<i: =c j:>")));
  CHECK(is_hylo(parse_sequent("@i p, @j <a> i |- @k q")));
  CHECK_FALSE(is_hylo(parse_sequent("@i p |- <i: !=c j:>")));
}

TEST_CASE("proofs in the fragment avoid comparisons") {
  const char* valid[] = {"@i <a> j, @j p |- @i <a> p", "@i j, @j p |- @i p", "|- @i (p -> p)",
                         "@i [a] p, @i <a> q |- @i <a> (p & q)", "@i j |- @j i"};
  for (const char* text : valid) {
    INFO(text);
    SearchResult r = prove_hylo(parse_sequent(text));
    REQUIRE(r.status == Status::Proved);
    CHECK(check_derivation(r.proof).empty());
    Derivation e = expand_macros(r.proof);
    for (RuleId c : comparison_rules()) CHECK_FALSE(contains_rule(e, c));
  }
  CHECK(prove_hylo(parse_sequent("|- @i p")).status == Status::Refuted);
  CHECK_THROWS_AS(prove_hylo(parse_sequent("<i: =c j:> |-")), FragmentError);
}

TEST_CASE("reference-calculus rules as fragments") {
  Sequent base = parse_sequent("@m r |- @n s");
  Derivation ref = simulate_brauner("Ref", base, inst(RuleId::AtT, {}, {{"i", "i"}}));
  CHECK(ref->inst.rule == RuleId::AtT);
  CHECK(check_derivation(ref, {true}).empty());

  RuleInstance n2 = macro_inst("Nom2", {}, {{"i", "i"}, {"j", "j"}, {"k", "k"}, {"a", "a"}});
  Derivation nom2 = simulate_brauner("Nom2", base, n2);
  CHECK(fixtures::same_tree(nom2, fixtures::nom2_reference(base, "i", "j", "k", "a")));
  CHECK(check_derivation(nom2, {true}).empty());
  CHECK(open_leaves(nom2).size() == 3);

  Node box = parse_node("@i [a] p");
  Derivation boxr = simulate_brauner("BoxR", base.with(Side::Right, box), macro_inst("BoxR", {box}, {{"j", "_w"}}));
  CHECK(check_derivation(boxr, {true}).empty());
  REQUIRE(open_leaves(boxr).size() == 1);
  CHECK(open_leaves(boxr)[0]->conclusion.has(Side::Right, parse_node("@_w p")));

  CHECK_THROWS_AS(simulate_brauner("Cut", base, inst(RuleId::Cut, {box})), FragmentError);
}
