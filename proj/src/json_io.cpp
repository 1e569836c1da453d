#include "hxproof/json_io.hpp"

#include <fstream>

#include "hxproof/parser.hpp"
#include "hxproof/printer.hpp"

namespace hxp {
namespace {

[[noreturn]] void fail(const std::string& why) { throw JsonFormatError(why); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing member '") + key + "'");
  return j.at(key);
}

std::string str(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_string()) fail(std::string("member '") + key + "' must be a string");
  return v.get<std::string>();
}

const json& kids(const json& j, std::size_t n) {
  const json& c = member(j, "children");
  if (!c.is_array() || c.size() != n)
    fail("'" + str(j, "tag") + "' expects " + std::to_string(n) + " children");
  return c;
}

Node text_node(const json& j, SymbolTable& table) {
  if (!j.is_string()) fail("formula must be a string");
  try {
    return parse_node(j.get<std::string>(), table);
  } catch (const std::exception& e) {
    fail("bad formula '" + j.get<std::string>() + "': " + e.what());
  }
}

std::vector<Node> text_nodes(const json& j, SymbolTable& table) {
  if (!j.is_array()) fail("expected an array of formulas");
  std::vector<Node> out;
  for (const auto& x : j) out.push_back(text_node(x, table));
  return out;
}

json texts(const Cedent& c) {
  json out = json::array();
  for (const auto& e : c) out.push_back(print_node(e));
  return out;
}

void collect_props(const Node& e, std::set<std::string>& out);
void collect_props(const Path& a, std::set<std::string>& out) {
  switch (a->tag) {
    case PathTag::Test: collect_props(a->test, out); break;
    case PathTag::Concat:
      collect_props(a->head, out);
      collect_props(a->tail, out);
      break;
    default: break;
  }
}
void collect_props(const Node& e, std::set<std::string>& out) {
  switch (e->tag) {
    case NodeTag::Prop: out.insert(e->symbol); break;
    case NodeTag::Implies: collect_props(e->rhs, out); [[fallthrough]];
    case NodeTag::At:
    case NodeTag::Diamond: collect_props(e->lhs, out); break;
    case NodeTag::Compare:
      collect_props(e->left, out);
      collect_props(e->right, out);
      break;
    default: break;
  }
}

void derivation_symbols(const Derivation& d, std::set<std::string>& props) {
  for (const auto& s : {d->conclusion.ante(), d->conclusion.succ()})
    for (const auto& e : s) collect_props(e, props);
  for (const auto& e : d->inst.principal) collect_props(e, props);
  for (const auto& c : d->children) derivation_symbols(c, props);
}

json derivation_body(const Derivation& d) {
  json j;
  j["rule"] = rule_name(d->inst.rule);
  if (d->inst.rule == RuleId::Derived) j["macro"] = d->inst.macro;
  json pr = json::array();
  for (const auto& e : d->inst.principal) pr.push_back(print_node(e));
  j["principal"] = pr;
  j["inst"] = json::object();
  for (const auto& [k, v] : d->inst.params) j["inst"][k] = v;
  j["conclusion"] = sequent_to_json(d->conclusion);
  j["children"] = json::array();
  for (const auto& c : d->children) j["children"].push_back(derivation_body(c));
  return j;
}

Derivation derivation_body(const json& j, SymbolTable& table) {
  std::string name = str(j, "rule");
  auto rule = rule_from_name(name);
  if (!rule) fail("unknown rule '" + name + "'");
  RuleInstance ri;
  ri.rule = *rule;
  if (ri.rule == RuleId::Derived) ri.macro = str(j, "macro");
  if (j.contains("principal")) ri.principal = text_nodes(j.at("principal"), table);
  if (j.contains("inst")) {
    const json& in = j.at("inst");
    if (!in.is_object()) fail("'inst' must be an object");
    for (const auto& [k, v] : in.items()) {
      if (!v.is_string()) fail("instantiation values must be strings");
      ri.params[k] = v.get<std::string>();
    }
  }
  Sequent concl = sequent_from_json(member(j, "conclusion"), table);
  std::vector<Derivation> ch;
  if (j.contains("children")) {
    if (!j.at("children").is_array()) fail("'children' must be an array");
    for (const auto& c : j.at("children")) ch.push_back(derivation_body(c, table));
  }
  return make_node(std::move(concl), std::move(ri), std::move(ch));
}

int node_ref(const HybridDataModel& m, const json& v) {
  if (v.is_number_integer()) {
    int n = v.get<int>();
    if (n < 0 || static_cast<std::size_t>(n) >= m.size()) fail("node index out of range");
    return n;
  }
  if (!v.is_string()) fail("node reference must be an id or an index");
  try {
    return m.node_index(v.get<std::string>());
  } catch (const ModelError& e) {
    fail(e.what());
  }
}

}  // namespace

json node_to_json(const Node& e) {
  json j;
  switch (e->tag) {
    case NodeTag::Prop: j = {{"tag", "prop"}, {"name", e->symbol}}; break;
    case NodeTag::Nominal: j = {{"tag", "nominal"}, {"name", e->symbol}}; break;
    case NodeTag::Bottom: j = {{"tag", "bot"}}; break;
    case NodeTag::Implies:
      j = {{"tag", "implies"}, {"children", {node_to_json(e->lhs), node_to_json(e->rhs)}}};
      break;
    case NodeTag::At:
      j = {{"tag", "at"}, {"name", e->symbol}, {"children", json::array({node_to_json(e->lhs)})}};
      break;
    case NodeTag::Diamond:
      j = {{"tag", "diamond"}, {"name", e->symbol}, {"children", json::array({node_to_json(e->lhs)})}};
      break;
    case NodeTag::Compare:
      j = {{"tag", "compare"},
           {"name", e->symbol},
           {"kind", e->kind == CmpKind::Eq ? "eq" : "neq"},
           {"children", {path_to_json(e->left), path_to_json(e->right)}}};
      break;
  }
  return j;
}

json path_to_json(const Path& a) {
  switch (a->tag) {
    case PathTag::Atom: return {{"tag", "atom"}, {"name", a->symbol}};
    case PathTag::Jump: return {{"tag", "jump"}, {"name", a->symbol}};
    case PathTag::Test: return {{"tag", "test"}, {"children", json::array({node_to_json(a->test)})}};
    case PathTag::Concat:
      return {{"tag", "concat"}, {"children", {path_to_json(a->head), path_to_json(a->tail)}}};
  }
  return {};
}

Node node_from_json(const json& j) {
  std::string tag = str(j, "tag");
  if (tag == "prop") return prop(str(j, "name"));
  if (tag == "nominal") return nominal(str(j, "name"));
  if (tag == "bot") return bottom();
  if (tag == "implies") {
    const json& c = kids(j, 2);
    return implies(node_from_json(c[0]), node_from_json(c[1]));
  }
  if (tag == "at") return at(str(j, "name"), node_from_json(kids(j, 1)[0]));
  if (tag == "diamond") return diamond(str(j, "name"), node_from_json(kids(j, 1)[0]));
  if (tag == "compare") {
    const json& c = kids(j, 2);
    std::string kind = str(j, "kind");
    if (kind != "eq" && kind != "neq") fail("compare kind must be eq or neq");
    return compare(path_from_json(c[0]), kind == "eq" ? CmpKind::Eq : CmpKind::Neq, str(j, "name"),
                   path_from_json(c[1]));
  }
  fail("unknown node tag '" + tag + "'");
}

Path path_from_json(const json& j) {
  std::string tag = str(j, "tag");
  if (tag == "atom") return atom(str(j, "name"));
  if (tag == "jump") return jump(str(j, "name"));
  if (tag == "test") return test(node_from_json(kids(j, 1)[0]));
  if (tag == "concat") {
    const json& c = kids(j, 2);
    return concat(path_from_json(c[0]), path_from_json(c[1]));
  }
  fail("unknown path tag '" + tag + "'");
}

json sequent_to_json(const Sequent& s) { return {{"ante", texts(s.ante())}, {"succ", texts(s.succ())}}; }

Sequent sequent_from_json(const json& j, SymbolTable& table) {
  if (j.is_string()) {
    try {
      return parse_sequent(j.get<std::string>(), table);
    } catch (const std::exception& e) {
      fail(std::string("bad sequent: ") + e.what());
    }
  }
  auto side = [&](const char* key) {
    return j.contains(key) ? text_nodes(j.at(key), table) : std::vector<Node>{};
  };
  try {
    return Sequent(side("ante"), side("succ"));
  } catch (const ShapeError& e) {
    fail(e.what());
  }
}

Sequent sequent_from_json(const json& j) {
  SymbolTable table;
  return sequent_from_json(j, table);
}

json derivation_to_json(const Derivation& d) {
  json j = derivation_body(d);
  std::set<std::string> props;
  derivation_symbols(d, props);
  json decl_props = json::array(), decl_noms = json::array();
  for (const auto& p : props)
    if (looks_like_nominal(p)) decl_props.push_back(p);
  for (const auto& i : nominals_of(d))
    if (!looks_like_nominal(i)) decl_noms.push_back(i);
  if (!decl_props.empty() || !decl_noms.empty()) {
    j["declare"] = json::object();
    if (!decl_props.empty()) j["declare"]["props"] = decl_props;
    if (!decl_noms.empty()) j["declare"]["nominals"] = decl_noms;
  }
  return j;
}

Derivation derivation_from_json(const json& j) {
  SymbolTable table;
  if (j.contains("declare")) {
    const json& d = j.at("declare");
    try {
      if (d.contains("props"))
        for (const auto& p : d.at("props")) table.declare(p.get<std::string>(), SymbolSpace::Prop);
      if (d.contains("nominals"))
        for (const auto& i : d.at("nominals")) table.declare(i.get<std::string>(), SymbolSpace::Nominal);
    } catch (const json::exception& e) {
      fail(std::string("bad declarations: ") + e.what());
    }
  }
  try {
    return derivation_body(j, table);
  } catch (const SymbolSpaceError& e) {
    fail(e.what());
  }
}

json model_to_json(const HybridDataModel& m) {
  json j;
  j["nodes"] = m.names;
  j["rels"] = json::object();
  for (const auto& [a, rows] : m.rel) {
    json pairs = json::array();
    for (std::size_t x = 0; x < m.size(); ++x)
      for (std::size_t y = 0; y < m.size(); ++y)
        if (rows[x] >> y & 1) pairs.push_back({m.names[x], m.names[y]});
    j["rels"][a] = pairs;
  }
  j["cmp"] = json::object();
  for (const auto& [c, ids] : m.cmp) {
    // Classes listed by their smallest member.
    std::map<int, json> classes;
    std::vector<int> order;
    for (std::size_t n = 0; n < m.size(); ++n) {
      if (!classes.count(ids[n])) {
        classes[ids[n]] = json::array();
        order.push_back(ids[n]);
      }
      classes[ids[n]].push_back(m.names[n]);
    }
    json out = json::array();
    for (int id : order) out.push_back(classes[id]);
    j["cmp"][c] = out;
  }
  j["g"] = json::object();
  for (const auto& [i, n] : m.g) j["g"][i] = m.names.at(n);
  j["val"] = json::object();
  for (const auto& [p, mask] : m.val) {
    json ns = json::array();
    for (std::size_t n = 0; n < m.size(); ++n)
      if (mask >> n & 1) ns.push_back(m.names[n]);
    j["val"][p] = ns;
  }
  return j;
}

HybridDataModel model_from_json(const json& j) {
  const json& nodes = member(j, "nodes");
  if (!nodes.is_array() || nodes.empty()) fail("'nodes' must be a non-empty array");
  if (nodes.size() > kMaxModelNodes) fail("models are limited to 64 nodes");
  HybridDataModel m = make_model(nodes.size());
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    if (!nodes[n].is_string()) fail("node ids must be strings");
    m.names[n] = nodes[n].get<std::string>();
  }
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = x + 1; y < m.size(); ++y)
      if (m.names[x] == m.names[y]) fail("duplicate node id '" + m.names[x] + "'");
  if (j.contains("rels"))
    for (const auto& [a, pairs] : j.at("rels").items()) {
      m.rel[a].assign(m.size(), 0);
      for (const auto& p : pairs) {
        if (!p.is_array() || p.size() != 2) fail("relation pairs must have two members");
        m.add_edge(a, node_ref(m, p[0]), node_ref(m, p[1]));
      }
    }
  if (j.contains("cmp"))
    for (const auto& [c, classes] : j.at("cmp").items()) {
      m.cmp[c].resize(m.size());
      for (std::size_t n = 0; n < m.size(); ++n) m.cmp[c][n] = static_cast<int>(n);
      for (const auto& cl : classes) {
        if (!cl.is_array() || cl.empty()) fail("comparison classes must be non-empty arrays");
        int first = node_ref(m, cl[0]);
        for (const auto& x : cl) m.relate(c, first, node_ref(m, x));
      }
    }
  if (j.contains("g"))
    for (const auto& [i, n] : j.at("g").items()) m.g[i] = node_ref(m, n);
  if (j.contains("val"))
    for (const auto& [p, ns] : j.at("val").items()) {
      Mask mask = 0;
      for (const auto& n : ns) mask |= Mask{1} << node_ref(m, n);
      m.val[p] = mask;
    }
  try {
    m.validate();
  } catch (const ModelError& e) {
    fail(e.what());
  }
  return m;
}

json datagraph_to_json(const DataGraph& dg) {
  json j;
  j["nodes"] = json::array();
  for (const auto& v : dg.nodes)
    j["nodes"].push_back({{"id", v.id}, {"labels", v.labels}, {"attrs", v.attrs}, {"index", v.index}});
  j["edges"] = json::array();
  for (const auto& e : dg.edges) j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"label", e.label}});
  return j;
}

DataGraph datagraph_from_json(const json& j) {
  DataGraph dg;
  try {
    for (const auto& v : member(j, "nodes")) {
      DataGraph::Vertex x;
      x.id = str(v, "id");
      if (v.contains("labels")) x.labels = v.at("labels").get<std::vector<std::string>>();
      if (v.contains("attrs")) x.attrs = v.at("attrs").get<std::map<std::string, std::string>>();
      if (v.contains("index")) {
        const json& ix = v.at("index");
        if (ix.is_string())
          x.index.push_back(ix.get<std::string>());
        else
          x.index = ix.get<std::vector<std::string>>();
      }
      dg.nodes.push_back(std::move(x));
    }
    for (const auto& e : member(j, "edges")) dg.edges.push_back({str(e, "from"), str(e, "to"), str(e, "label")});
  } catch (const json::exception& e) {
    fail(std::string("bad data graph: ") + e.what());
  }
  return dg;
}

HybridDataModel load_model_json(const json& j) {
  if (j.is_object() && j.contains("edges")) {
    try {
      return ingest_datagraph(datagraph_from_json(j));
    } catch (const ModelError& e) {
      fail(e.what());
    }
  }
  return model_from_json(j);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw JsonFormatError("'" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace hxp
