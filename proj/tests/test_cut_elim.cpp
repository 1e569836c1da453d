#include "doctest.h"
#include "fixtures.hpp"
#include "hxproof/json_io.hpp"
#include "hxproof/parser.hpp"

using namespace hxp;

namespace {

Derivation golden(const std::string& name) {
  return derivation_from_json(read_json_file("data/golden/" + name + ".json"));
}

Derivation find_rule(const Derivation& d, RuleId r) {
  if (d->inst.rule == r) return d;
  for (const auto& c : d->children)
    if (auto x = find_rule(c, r)) return x;
  return nullptr;
}

}  // namespace

TEST_CASE("complexity of a cut") {
  Node ip = parse_node("@i p");
  Derivation ax = leaf(parse_sequent("@i p |- @i p"), inst(RuleId::Ax, {ip}));
  Derivation c = cut(ax, ax, ip);
  CHECK(cut_complexity(c) == CutComplexity{2, 2});
  CHECK(cut_measure(c) == std::vector<CutComplexity>{{2, 2}});
  CHECK(to_string(cut_complexity(c)) == "(2, 2)");
}

TEST_CASE("multiset order") {
  using V = std::vector<CutComplexity>;
  CHECK(measure_less(V{}, V{{1, 1}}));
  CHECK_FALSE(measure_less(V{}, V{}));
  CHECK(measure_less(V{{2, 9}}, V{{3, 1}}));
  CHECK(measure_less(V{{3, 1}, {2, 9}, {2, 9}}, V{{3, 2}}));
  CHECK_FALSE(measure_less(V{{3, 2}}, V{{3, 2}}));
  CHECK_FALSE(measure_less(V{{3, 2}, {1, 1}}, V{{3, 2}}));
  CHECK(measure_less(V{{3, 2}}, V{{3, 2}, {1, 1}}));
}

TEST_CASE("inverse of AtL") {
  Derivation d = golden("inv-atL");
  REQUIRE(check_derivation(d).empty());
  Derivation c = find_rule(d, RuleId::Cut);
  REQUIRE(c);
  CHECK(cut_complexity(c).k == 3);
  std::vector<CutStep> trace;
  Derivation out = eliminate_cuts(d, {}, &trace);
  CHECK_FALSE(contains_rule(out, RuleId::Cut));
  CHECK(out->conclusion == d->conclusion);
  CHECK(check_derivation(out).empty());
  CHECK_FALSE(trace.empty());
  for (const auto& s : trace) CHECK(measure_less(s.after, s.before));
}

TEST_CASE("cut-free trees pass through") {
  Derivation d = golden("reflexivity");
  Derivation out = eliminate_cuts(d);
  CHECK(fixtures::same_tree(out, d));
  CHECK_THROWS_AS(reduce_once(d), CutElimError);
}

TEST_CASE("paste golden becomes cut-free") {
  Derivation d = golden("paste");
  Derivation out = eliminate_cuts(d);
  CHECK_FALSE(contains_rule(out, RuleId::Cut));
  CHECK(out->conclusion == d->conclusion);
  CHECK(check_derivation(out).empty());
}

TEST_CASE("principal diamond cut") {
  Node iap = parse_node("@i <a> p"), jp = parse_node("@j p"), iaj = parse_node("@i <a> j");
  Node goal_r = parse_node("@i <a> (p | q)");
  Sequent base({iaj, jp}, {goal_r});
  // Left: DiaR on @i<a>p with witness @i<a>j.
  Derivation left = by1(base.with(Side::Right, iap), inst(RuleId::DiaR, {iaj, iap}),
                        [&](const Sequent& p) { return leaf(p, inst(RuleId::Ax, {jp})); });
  REQUIRE(check_derivation(left).empty());
  // Right: DiaL on @i<a>p, the rest by search.
  Derivation right = by1(base.with(Side::Left, iap), inst(RuleId::DiaL, {iap}, {{"j", "_w"}}),
                         [&](const Sequent& p) {
                           SearchResult r = prove(p, fixtures::quiet_search());
                           REQUIRE(r.status == SearchResult::Status::Proved);
                           return r.proof;
                         });
  REQUIRE(check_derivation(right).empty());
  Derivation d = cut(left, right, iap);
  REQUIRE(check_derivation(d).empty());

  CutStep step;
  Derivation once = reduce_once(d, &step);
  CHECK(step.family == "principal");
  CHECK(step.reduced.k == size(iap));
  CHECK(measure_less(step.after, step.before));
  CHECK(step.after == cut_measure(once));
  CHECK(check_derivation(once).empty());
  CHECK(once->conclusion == d->conclusion);
  // What remains is smaller in size, or of the same size and lower.
  for (const auto& c : step.after) CHECK((c.k < size(iap) || c.h < step.reduced.h));

  CHECK(fixtures::check_elimination(d) == "");
}

TEST_CASE("corpus eliminates with a strictly decreasing measure") {
  auto corpus = fixtures::cut_corpus(0xc0ffee, 2);
  CHECK(corpus.size() >= 10);
  for (const auto& item : corpus) {
    INFO(item.label);
    CHECK(fixtures::check_elimination(item.d) == "");
  }
}
