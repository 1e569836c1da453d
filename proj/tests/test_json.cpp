#include "doctest.h"
#include "fixtures.hpp"
#include "hxproof/json_io.hpp"
#include "hxproof/parser.hpp"

using namespace hxp;

TEST_CASE("expressions round-trip") {
  oracle::Vocab v;
  v.modalities = {"a", "b"};
  oracle::Gen g(51, v);
  for (int n = 0; n < 300; ++n) {
    Node e = g.node(3);
    CHECK(equal(node_from_json(node_to_json(e)), e));
    Path p = g.path(3);
    CHECK(equal(path_from_json(path_to_json(p)), p));
    Sequent s = g.sequent(3, 2);
    CHECK(sequent_from_json(sequent_to_json(s)) == s);
  }
}

TEST_CASE("derivations round-trip byte for byte") {
  for (const char* name : {"reflexivity", "symmetry", "transitivity", "paste", "nom2", "inv-atL"}) {
    INFO(name);
    json j = read_json_file(std::string("data/golden/") + name + ".json");
    Derivation d = derivation_from_json(j);
    json back = derivation_to_json(d);
    CHECK(fixtures::same_tree(derivation_from_json(back), d));
    CHECK(derivation_to_json(derivation_from_json(back)).dump() == back.dump());
  }
  Derivation searched = prove(parse_sequent("@i j, @_x <a> i |- @_x <a> j")).proof;
  REQUIRE(searched);
  CHECK(fixtures::same_tree(derivation_from_json(derivation_to_json(searched)), searched));
}

TEST_CASE("models round-trip") {
  HybridDataModel m = load_model_json(read_json_file("data/example1.json"));
  CHECK(m.size() == 6);
  HybridDataModel back = model_from_json(model_to_json(m));
  CHECK(back.names == m.names);
  CHECK(back.rel == m.rel);
  CHECK(back.g == m.g);
  CHECK(back.val == m.val);
  for (const auto& [c, ids] : m.cmp)
    for (int x = 0; x < 6; ++x)
      for (int y = 0; y < 6; ++y) CHECK((back.cls(c, x) == back.cls(c, y)) == (ids[x] == ids[y]));
  HybridDataModel direct = load_model_json(model_to_json(m));
  CHECK(direct.names == m.names);

  DataGraph dg = datagraph_from_json(read_json_file("data/example1.json"));
  DataGraph again = datagraph_from_json(datagraph_to_json(dg));
  CHECK(again.nodes.size() == dg.nodes.size());
  CHECK(again.edges.size() == dg.edges.size());
}

TEST_CASE("malformed input is reported") {
  CHECK_THROWS_AS(node_from_json(json::parse(R"({"tag": "nope"})")), JsonFormatError);
  CHECK_THROWS_AS(node_from_json(json::parse(R"({"tag": "implies", "children": []})")), JsonFormatError);
  CHECK_THROWS_AS(derivation_from_json(json::parse(R"({"rule": "Zap", "conclusion": {"ante": [], "succ": []}})")),
                  JsonFormatError);
  CHECK_THROWS_AS(model_from_json(json::parse(R"({"nodes": ["a"], "g": {"i": 4}})")), std::runtime_error);
  CHECK_THROWS(read_json_file("data/no-such-file.json"));
}
