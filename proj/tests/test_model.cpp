#include "doctest.h"
#include "hxproof/json_io.hpp"
#include "hxproof/model.hpp"
#include "hxproof/parser.hpp"
#include "hxproof/printer.hpp"
#include "oracle.hpp"

using namespace hxp;

namespace {

HybridDataModel example() { return ingest_datagraph(example_datagraph()); }

}  // namespace

TEST_CASE("example graph paths") {
  HybridDataModel m = example();
  int n1 = m.node_index("n1"), n2 = m.node_index("n2"), n5 = m.node_index("n5");
  CHECK(eval_path(m, n1, n2, atom("friends")));
  CHECK_FALSE(eval_path(m, n1, n5, atom("friends")));
  CHECK(eval_path(m, n1, n5, concat(atom("friends"), atom("born"))));
  for (int n = 0; n < static_cast<int>(m.size()); ++n) {
    CHECK(eval_path(m, n, n, eps()));
    for (int k = 0; k < static_cast<int>(m.size()); ++k)
      if (k != n) CHECK_FALSE(eval_path(m, n, k, eps()));
  }
}

TEST_CASE("example queries") {
  HybridDataModel m = example();
  Node q1 = parse_node("<i1: born (Date?) =val i1: friends born (Date?)>");
  Node q2eq = parse_node("<i2: born (Date?) =val i2: friends born (Date?)>");
  Path a = parse_path("i2: born (Date?)"), b = parse_path("i2: friends born (Date?)");
  for (int n = 0; n < static_cast<int>(m.size()); ++n) {
    CHECK(eval_node(m, n, q1));
    CHECK_FALSE(eval_node(m, n, q2eq));
    CHECK(eval_box_compare(m, n, a, b, CmpKind::Neq, "val"));
    CHECK_FALSE(eval_node(m, n, bottom()));
  }
}

TEST_CASE("box comparison is vacuous without witnesses") {
  HybridDataModel m = make_model(2);
  for (int n = 0; n < 2; ++n) {
    CHECK(eval_box_compare(m, n, atom("a"), atom("b"), CmpKind::Eq, "c"));
    CHECK(eval_node(m, n, box_compare(atom("a"), CmpKind::Eq, "c", atom("b"))));
  }
}

TEST_CASE("evaluator agrees with the reference semantics") {
  oracle::Vocab v;
  v.modalities = {"a", "b"};
  oracle::Gen g(21, v);
  Signature sig;
  for (const auto& p : v.props) sig.props.insert(p);
  for (const auto& i : v.nominals) sig.nominals.insert(i);
  for (const auto& a : v.modalities) sig.modalities.insert(a);
  for (const auto& c : v.comparisons) sig.comparisons.insert(c);
  for (int t = 0; t < 500; ++t) {
    HybridDataModel m = random_model(sig, 1 + static_cast<std::size_t>(g.pick(4)), g.rng());
    m.validate();
    oracle::Model o = oracle::from_library(m);
    Node e = g.node(3);
    Path a = g.path(2), b = g.path(2);
    CmpKind kd = g.pick(2) ? CmpKind::Eq : CmpKind::Neq;
    for (int n = 0; n < static_cast<int>(m.size()); ++n) {
      INFO(print_node(e));
      CHECK(eval_node(m, n, e) == oracle::holds(o, n, e));
      CHECK(eval_box_compare(m, n, a, b, kd, "c") == eval_node(m, n, box_compare(a, kd, "c", b)));
    }
  }
}

TEST_CASE("comparisons are equivalences") {
  oracle::Gen g(22);
  Signature sig;
  sig.comparisons = {"c", "d"};
  sig.nominals = {"i"};
  for (int t = 0; t < 50; ++t) {
    HybridDataModel m = random_model(sig, 4, g.rng());
    for (const auto& c : sig.comparisons)
      for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
          CHECK(m.cls(c, x) == m.cls(c, x));
          CHECK((m.cls(c, x) == m.cls(c, y)) == (m.cls(c, y) == m.cls(c, x)));
          for (int z = 0; z < 4; ++z)
            if (m.cls(c, x) == m.cls(c, y) && m.cls(c, y) == m.cls(c, z)) CHECK(m.cls(c, x) == m.cls(c, z));
        }
  }
}

TEST_CASE("sets and sequent validity") {
  HybridDataModel m = example();
  CHECK(satisfies_set(m, 0, {}));
  CHECK_FALSE(satisfies_set(m, 0, {bottom()}));
  CHECK(satisfies_set(m, 0, {at("i1", prop("Person")), at("i2", prop("Person"))}));
  CHECK(check_sequent_validity(m, parse_sequent("@i1 false |- @i1 Date")));
  CHECK(check_sequent_validity(m, parse_sequent("|- @i1 <eps =c eps>")));
  CHECK_FALSE(check_sequent_validity(m, parse_sequent("|- @i1 Date")));
}

TEST_CASE("data graph ingestion") {
  HybridDataModel m = example();
  CHECK(m.size() == 6);
  CHECK(m.cls("name", m.node_index("n1")) == m.cls("name", m.node_index("n3")));
  CHECK(m.cls("val", m.node_index("n4")) == m.cls("val", m.node_index("n5")));
  CHECK(m.g.at("i1") == m.node_index("n1"));

  DataGraph one;
  one.nodes.push_back({"x", {"L"}, {}, {}});
  HybridDataModel m1 = ingest_datagraph(one);
  CHECK(m1.size() == 1);
  CHECK(m1.cls("c", 0) == 0);

  DataGraph three;
  for (const char* id : {"a", "b", "c", "d"})
    three.nodes.push_back({id, {}, {{"k", std::string(id) == "d" ? "2" : "1"}}, {}});
  HybridDataModel m3 = ingest_datagraph(three);
  CHECK(m3.cls("k", 0) == m3.cls("k", 1));
  CHECK(m3.cls("k", 1) == m3.cls("k", 2));
  CHECK(m3.cls("k", 0) != m3.cls("k", 3));

  DataGraph dup;
  dup.nodes.push_back({"x", {}, {}, {"i"}});
  dup.nodes.push_back({"y", {}, {}, {"i"}});
  CHECK_THROWS(ingest_datagraph(dup));
}

TEST_CASE("unassigned nominals") {
  HybridDataModel m = make_model(2);
  auto filled = m.complete_assignment({"i", "j"}, 1);
  CHECK(filled == std::vector<std::string>{"i", "j"});
  CHECK(m.g.at("i") == 1);
  CHECK_THROWS_AS(m.complete_assignment({"k"}, 0, true), ModelError);
}

TEST_CASE("bounded countermodels") {
  auto cm = find_countermodel(parse_sequent("|- @i p"), 3);
  REQUIRE(cm);
  CHECK(cm->size() == 1);
  CHECK_FALSE(find_countermodel(parse_sequent("|- @i <eps =c eps>"), 3));

  Sequent s = parse_sequent("@i <a> p |- @i p");
  auto m = find_countermodel(s, 3);
  REQUIRE(m);
  CHECK(m->size() == 2);
  CHECK_FALSE(oracle::valid_in(oracle::from_library(*m), s));
  CountermodelOptions all;
  all.generated_only = false;
  CHECK(find_countermodel(s, 2, all)->size() == 2);
}
