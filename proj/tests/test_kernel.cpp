#include "doctest.h"
#include "hxproof/json_io.hpp"
#include "hxproof/kernel.hpp"
#include "hxproof/parser.hpp"

using namespace hxp;

namespace {

Derivation golden(const std::string& name) {
  return derivation_from_json(read_json_file("data/golden/" + name + ".json"));
}

// Drops the first node using `r`, keeping its conclusion under the
// child's rule and children.
Derivation bypass(const Derivation& d, RuleId r, bool& done) {
  if (done) return d;
  if (d->inst.rule == r && !d->children.empty()) {
    done = true;
    const Derivation& c = d->children.front();
    return make_node(d->conclusion, c->inst, c->children);
  }
  std::vector<Derivation> ch;
  for (const auto& c : d->children) ch.push_back(bypass(c, r, done));
  return make_node(d->conclusion, d->inst, ch);
}

}  // namespace

TEST_CASE("reflexivity golden checks") {
  Derivation d = golden("reflexivity");
  CHECK(check_derivation(d).empty());
  CHECK(height(d) == 6);
  CHECK(d->conclusion == parse_sequent("|- @i <eps =c eps>"));
  CHECK(count_rule(d, RuleId::Cut) == 0);
}

TEST_CASE("a tree with a missing step is rejected") {
  Derivation d = golden("reflexivity");
  REQUIRE(contains_rule(d, RuleId::EqT));
  bool done = false;
  Derivation bad = bypass(d, RuleId::EqT, done);
  REQUIRE(done);
  auto v = check_derivation(bad);
  REQUIRE_FALSE(v.empty());
  CHECK_FALSE(v.front().cause.empty());
  CHECK_FALSE(is_valid_derivation(bad));
}

TEST_CASE("apply_rule reads rules backwards") {
  Sequent g = parse_sequent("|- @i p");
  auto eqt = apply_rule(g, inst(RuleId::EqT, {}, {{"i", "i"}, {"c", "c"}}));
  REQUIRE(eqt.size() == 1);
  CHECK(eqt[0] == parse_sequent("<i: =c i:> |- @i p"));

  Sequent ax = parse_sequent("@i p |- @i p");
  CHECK(apply_rule(ax, inst(RuleId::Ax, {parse_node("@i p")})).empty());

  Sequent s3 = parse_sequent("@i j, <i: =c k:> |-");
  auto prem = apply_rule(s3, inst(RuleId::S3, {parse_node("@i j"), parse_node("<i: =c k:>")}));
  REQUIRE(prem.size() == 1);
  CHECK(prem[0].has(Side::Left, parse_node("<j: =c k:>")));

  Sequent imp = parse_sequent("@i (p -> q) |- @i q");
  auto il = apply_rule(imp, inst(RuleId::ImpL, {parse_node("@i (p -> q)")}));
  REQUIRE(il.size() == 2);
  CHECK(il[0] == parse_sequent("|- @i q, @i p"));
  CHECK(il[1] == parse_sequent("@i q |- @i q"));

  CHECK_THROWS_AS(apply_rule(parse_sequent("|- @i p"), inst(RuleId::Ax, {parse_node("@i p")})), RuleError);
  CHECK_THROWS_AS(apply_rule(parse_sequent("@i (p->q) |- @i (p -> q)"),
                             inst(RuleId::Ax, {parse_node("@i (p -> q)")})),
                  RuleError);
}

TEST_CASE("eigen-nominals must be fresh") {
  Sequent g = parse_sequent("@i <a> p |- @j p");
  Node pr = parse_node("@i <a> p");
  try {
    apply_rule(g, inst(RuleId::DiaL, {pr}, {{"j", "j"}}));
    FAIL("expected a side-condition error");
  } catch (const RuleError& e) {
    CHECK(e.kind == RuleError::SideCondition);
  }
  auto ok = apply_rule(g, inst(RuleId::DiaL, {pr}, {{"j", "k"}}));
  REQUIRE(ok.size() == 1);
  CHECK(ok[0] == parse_sequent("@i <a> k, @k p |- @j p"));
  CHECK_THROWS_AS(apply_rule(parse_sequent("|- @i p"), inst(RuleId::Nom, {}, {{"i", "i"}, {"j", "i"}})),
                  RuleError);
}

TEST_CASE("heights of leaves and cuts") {
  Node ip = parse_node("@i p");
  Sequent s = parse_sequent("@i p |- @i p");
  Derivation ax = leaf(s, inst(RuleId::Ax, {ip}));
  CHECK(check_derivation(ax).empty());
  CHECK(height(ax) == 1);
  Derivation c = cut(ax, ax, ip);
  CHECK(c->inst.rule == RuleId::Cut);
  CHECK(check_derivation(c).empty());
  CHECK(cut_height(c) == 2);
  CHECK(height(c) == 2);
  CHECK(count_nodes(c) == 3);
}

TEST_CASE("weakening") {
  Node ip = parse_node("@i p"), jq = parse_node("@j q");
  Derivation ax = leaf(parse_sequent("@i p |- @i p"), inst(RuleId::Ax, {ip}));
  Derivation w = weaken(ax, Side::Left, jq);
  CHECK(w->conclusion == parse_sequent("@i p, @j q |- @i p"));
  CHECK(w->inst.rule == RuleId::WL);
  CHECK(check_derivation(w).empty());
  Derivation t = weaken_to(ax, parse_sequent("@i p, @j q |- @i p, @k r"));
  CHECK(t->conclusion == parse_sequent("@i p, @j q |- @i p, @k r"));
  CHECK(check_derivation(t).empty());
  // A WL whose principal is absent from the conclusion is not a step.
  Derivation bad = make_node(ax->conclusion, inst(RuleId::WL, {jq}), {ax});
  CHECK_FALSE(check_derivation(bad).empty());
}

TEST_CASE("renaming a nominal throughout a derivation") {
  for (const char* name : {"reflexivity", "symmetry", "transitivity"}) {
    Derivation d = golden(name);
    Derivation r = rename_nominal(d, "i", "_r");
    CHECK(check_derivation(r).empty());
    CHECK_FALSE(nominals_of(r).count("i"));
    CHECK(nominals_of(r->conclusion).count("_r"));
  }
}

TEST_CASE("open leaves need permission") {
  Sequent g = parse_sequent("|- @i p");
  Derivation d = by1(g, inst(RuleId::EqT, {}, {{"i", "i"}, {"c", "c"}}),
                     [](const Sequent& p) { return open_leaf(p); });
  CHECK_FALSE(check_derivation(d).empty());
  CHECK(check_derivation(d, {true}).empty());
  REQUIRE(open_leaves(d).size() == 1);
  Sequent s = parse_sequent("@i p |- @i p");
  Derivation d2 = make_node(s.with(Side::Left, parse_node("<i: =c i:>")),
                            inst(RuleId::WL, {parse_node("<i: =c i:>")}), {open_leaf(s)});
  Derivation filled = plug(d2, {leaf(s, inst(RuleId::Ax, {parse_node("@i p")}))});
  CHECK(check_derivation(filled).empty());
}

TEST_CASE("rule names round-trip") {
  for (int r = 0; r <= static_cast<int>(RuleId::Open); ++r) {
    RuleId id = static_cast<RuleId>(r);
    auto back = rule_from_name(rule_name(id));
    REQUIRE(back);
    CHECK(*back == id);
  }
  CHECK_FALSE(rule_from_name("NoSuchRule"));
  CHECK(is_structural(RuleId::Cut));
  CHECK(is_comparison_rule(RuleId::CmpR));
  CHECK_FALSE(is_comparison_rule(RuleId::DiaR));
}
