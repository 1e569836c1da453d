#include "hxproof/model.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

namespace hxp {
namespace {

Mask bit(int n) { return Mask{1} << n; }

template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    int n = std::countr_zero(m);
    f(n);
    m &= m - 1;
  }
}

std::vector<Mask> compose(const std::vector<Mask>& r, const std::vector<Mask>& s) {
  std::vector<Mask> out(r.size(), 0);
  for (std::size_t n = 0; n < r.size(); ++n)
    for_each_bit(r[n], [&](int m) { out[n] |= s[m]; });
  return out;
}

// cm[x] = nodes in the class of x.
std::vector<Mask> class_masks(const HybridDataModel& m, const std::string& c) {
  std::vector<Mask> out(m.size(), 0);
  auto it = m.cmp.find(c);
  if (it == m.cmp.end()) {
    for (std::size_t x = 0; x < m.size(); ++x) out[x] = bit(static_cast<int>(x));
    return out;
  }
  const auto& ids = it->second;
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = 0; y < m.size(); ++y)
      if (ids[x] == ids[y]) out[x] |= bit(static_cast<int>(y));
  return out;
}

int nominal_node(const HybridDataModel& m, const std::string& i) {
  auto it = m.g.find(i);
  if (it == m.g.end()) throw ModelError("unassigned nominal '" + i + "'");
  return it->second;
}

void check_node(const HybridDataModel& m, int n) {
  if (n < 0 || static_cast<std::size_t>(n) >= m.size())
    throw ModelError("unknown node " + std::to_string(n));
}

}  // namespace

int HybridDataModel::node_index(const std::string& id) const {
  auto it = std::find(names.begin(), names.end(), id);
  if (it == names.end()) throw ModelError("unknown node '" + id + "'");
  return static_cast<int>(it - names.begin());
}

void HybridDataModel::add_edge(const std::string& a, int from, int to) {
  check_node(*this, from);
  check_node(*this, to);
  auto& rows = rel[a];
  rows.resize(size(), 0);
  rows[from] |= bit(to);
}

void HybridDataModel::relate(const std::string& c, int x, int y) {
  check_node(*this, x);
  check_node(*this, y);
  auto& ids = cmp[c];
  if (ids.empty())
    for (std::size_t n = 0; n < size(); ++n) ids.push_back(static_cast<int>(n));
  int from = ids[y], to = ids[x];
  if (from == to) return;
  for (auto& id : ids)
    if (id == from) id = to;
}

int HybridDataModel::cls(const std::string& c, int n) const {
  auto it = cmp.find(c);
  return it == cmp.end() ? n : it->second[n];
}

std::vector<std::string> HybridDataModel::complete_assignment(const std::set<std::string>& nominals,
                                                              int default_node, bool strict) {
  check_node(*this, default_node);
  std::vector<std::string> filled;
  for (const auto& i : nominals) {
    if (g.count(i)) continue;
    if (strict) throw ModelError("unassigned nominal '" + i + "'");
    g[i] = default_node;
    filled.push_back(i);
  }
  return filled;
}

void HybridDataModel::validate() const {
  if (names.empty()) throw ModelError("model has no nodes");
  if (names.size() > kMaxModelNodes) throw ModelError("model exceeds 64 nodes");
  for (const auto& [a, rows] : rel) {
    if (rows.size() != size()) throw ModelError("relation '" + a + "' has wrong width");
    for (Mask r : rows)
      if (r & ~all()) throw ModelError("relation '" + a + "' leaves the node set");
  }
  for (const auto& [c, ids] : cmp) {
    if (ids.size() != size()) throw ModelError("comparison '" + c + "' has wrong width");
    for (int id : ids)
      if (id < 0 || static_cast<std::size_t>(id) >= size())
        throw ModelError("comparison '" + c + "' has a bad class id");
  }
  for (const auto& [i, n] : g) check_node(*this, n);
  for (const auto& [p, m] : val)
    if (m & ~all()) throw ModelError("valuation of '" + p + "' leaves the node set");
}

HybridDataModel make_model(std::size_t nodes) {
  if (nodes == 0 || nodes > kMaxModelNodes) throw ModelError("model size must be in 1..64");
  HybridDataModel m;
  for (std::size_t n = 0; n < nodes; ++n) m.names.push_back("n" + std::to_string(n + 1));
  return m;
}

std::vector<Mask> path_relation(const HybridDataModel& m, const Path& a) {
  switch (a->tag) {
    case PathTag::Atom: {
      auto it = m.rel.find(a->symbol);
      if (it == m.rel.end()) return std::vector<Mask>(m.size(), 0);
      return it->second;
    }
    case PathTag::Jump: return std::vector<Mask>(m.size(), bit(nominal_node(m, a->symbol)));
    case PathTag::Test: {
      Mask t = extension(m, a->test);
      std::vector<Mask> out(m.size(), 0);
      for_each_bit(t, [&](int n) { out[n] = bit(n); });
      return out;
    }
    case PathTag::Concat: return compose(path_relation(m, a->head), path_relation(m, a->tail));
  }
  return {};
}

Mask extension(const HybridDataModel& m, const Node& e) {
  switch (e->tag) {
    case NodeTag::Prop: {
      auto it = m.val.find(e->symbol);
      return it == m.val.end() ? 0 : it->second;
    }
    case NodeTag::Nominal: return bit(nominal_node(m, e->symbol));
    case NodeTag::Bottom: return 0;
    case NodeTag::Implies: return (~extension(m, e->lhs) | extension(m, e->rhs)) & m.all();
    case NodeTag::At: return (extension(m, e->lhs) & bit(nominal_node(m, e->symbol))) ? m.all() : 0;
    case NodeTag::Diamond: {
      Mask body = extension(m, e->lhs);
      Mask out = 0;
      auto it = m.rel.find(e->symbol);
      if (it == m.rel.end()) return 0;
      for (std::size_t n = 0; n < m.size(); ++n)
        if (it->second[n] & body) out |= bit(static_cast<int>(n));
      return out;
    }
    case NodeTag::Compare: {
      auto ra = path_relation(m, e->left), rb = path_relation(m, e->right);
      auto cm = class_masks(m, e->symbol);
      Mask out = 0;
      for (std::size_t n = 0; n < m.size(); ++n) {
        Mask hit = 0;
        for_each_bit(ra[n], [&](int x) {
          hit |= e->kind == CmpKind::Eq ? (rb[n] & cm[x]) : (rb[n] & ~cm[x]);
        });
        if (hit) out |= bit(static_cast<int>(n));
      }
      return out;
    }
  }
  return 0;
}

bool eval_path(const HybridDataModel& m, int n, int n2, const Path& a) {
  check_node(m, n);
  check_node(m, n2);
  return path_relation(m, a)[n] & bit(n2);
}

bool eval_node(const HybridDataModel& m, int n, const Node& e) {
  check_node(m, n);
  return extension(m, e) & bit(n);
}

bool eval_box_compare(const HybridDataModel& m, int n, const Path& a, const Path& b, CmpKind kind,
                      const std::string& c) {
  check_node(m, n);
  Mask as = path_relation(m, a)[n], bs = path_relation(m, b)[n];
  auto cm = class_masks(m, c);
  bool ok = true;
  for_each_bit(as, [&](int x) {
    Mask same = bs & cm[x];
    if (kind == CmpKind::Eq ? same != bs : same != 0) ok = false;
  });
  return ok;
}

bool satisfies_set(const HybridDataModel& m, int n, const std::vector<Node>& set) {
  for (const auto& e : set)
    if (!eval_node(m, n, e)) return false;
  return true;
}

bool check_sequent_validity(const HybridDataModel& m, const Sequent& s) {
  // Restricted expressions are node-independent; node 0 stands for all.
  for (const auto& e : s.ante())
    if (!(extension(m, e) & 1)) return true;
  for (const auto& e : s.succ())
    if (extension(m, e) & 1) return true;
  return false;
}

HybridDataModel ingest_datagraph(const DataGraph& dg) {
  HybridDataModel m = make_model(dg.nodes.size());
  for (std::size_t n = 0; n < dg.nodes.size(); ++n) {
    const auto& v = dg.nodes[n];
    if (std::find(m.names.begin(), m.names.begin() + n, v.id) != m.names.begin() + n)
      throw ModelError("duplicate node id '" + v.id + "'");
    m.names[n] = v.id;
  }
  std::map<std::string, std::map<std::string, int>> first_with_value;
  for (std::size_t n = 0; n < dg.nodes.size(); ++n) {
    const auto& v = dg.nodes[n];
    int id = static_cast<int>(n);
    for (const auto& p : v.labels) m.val[p] |= bit(id);
    for (const auto& i : v.index)
      if (!m.g.emplace(i, id).second) throw ModelError("duplicate index label '" + i + "'");
    for (const auto& [c, d] : v.attrs) {
      auto [it, fresh] = first_with_value[c].emplace(d, id);
      if (!m.cmp.count(c))
        for (std::size_t k = 0; k < m.size(); ++k) m.cmp[c].push_back(static_cast<int>(k));
      if (!fresh) m.relate(c, it->second, id);
    }
  }
  for (const auto& e : dg.edges) m.add_edge(e.label, m.node_index(e.from), m.node_index(e.to));
  return m;
}

DataGraph example_datagraph() {
  DataGraph dg;
  dg.nodes = {
      {"n1", {"Person"}, {{"name", "Alice"}}, {"i1"}},
      {"n2", {"Person"}, {{"name", "Bob"}}, {}},
      {"n3", {"Person"}, {{"name", "Alice"}}, {"i2"}},
      {"n4", {"Date"}, {{"val", "1977-07-07"}}, {}},
      {"n5", {"Date"}, {{"val", "1977-07-07"}}, {}},
      {"n6", {"Date"}, {{"val", "1975-05-05"}}, {}},
  };
  dg.edges = {
      {"n1", "n2", "friends"}, {"n2", "n1", "friends"}, {"n2", "n3", "friends"},
      {"n3", "n2", "friends"}, {"n1", "n4", "born"},    {"n2", "n5", "born"},
      {"n3", "n6", "born"},
  };
  return dg;
}

namespace {

// Restricted-growth strings of length `len` with values below `limit`.
void restricted_growth(std::size_t len, int limit, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> go = [&](int max_used) {
    if (cur.size() == len) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= std::min(max_used + 1, limit - 1); ++v) {
      cur.push_back(v);
      go(std::max(max_used, v));
      cur.pop_back();
    }
  };
  go(-1);
}

// Calls f(bits) for every value of an n-bit counter; stops when f returns true.
template <typename F>
bool for_each_word(std::size_t nbits, F&& f) {
  if (nbits >= 63) throw ModelError("countermodel search space too large");
  for (Mask w = 0; w < (Mask{1} << nbits); ++w)
    if (f(w)) return true;
  return false;
}

}  // namespace

std::optional<HybridDataModel> find_countermodel(const Sequent& s, std::size_t max_nodes,
                                                 CountermodelOptions opt) {
  Signature sig = s.signature();
  std::vector<std::string> noms(sig.nominals.begin(), sig.nominals.end());
  std::vector<std::string> mods(sig.modalities.begin(), sig.modalities.end());
  std::vector<std::string> cmps(sig.comparisons.begin(), sig.comparisons.end());
  std::vector<std::string> props(sig.props.begin(), sig.props.end());
  max_nodes = std::min(max_nodes, kMaxModelNodes);

  for (std::size_t n = 1; n <= max_nodes; ++n) {
    HybridDataModel m = make_model(n);
    std::vector<std::vector<int>> assigns, parts;
    restricted_growth(noms.size(), static_cast<int>(n), assigns);
    restricted_growth(n, static_cast<int>(n), parts);
    std::optional<HybridDataModel> found;

    for (const auto& as : assigns) {
      Mask named = noms.empty() ? 1 : 0;
      for (std::size_t k = 0; k < noms.size(); ++k) {
        m.g[noms[k]] = as[k];
        named |= bit(as[k]);
      }
      bool hit = for_each_word(mods.size() * n * n, [&](Mask rw) {
        std::size_t b = 0;
        for (const auto& a : mods) {
          auto& rows = m.rel[a];
          rows.assign(n, 0);
          for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y, ++b)
              if (rw >> b & 1) rows[x] |= bit(static_cast<int>(y));
        }
        if (opt.generated_only) {
          Mask reach = named, prev = 0;
          while (reach != prev) {
            prev = reach;
            for (const auto& a : mods) for_each_bit(prev, [&](int x) { reach |= m.rel[a][x]; });
          }
          if (reach != m.all()) return false;
        }
        std::vector<std::size_t> pick(cmps.size(), 0);
        for (;;) {
          for (std::size_t k = 0; k < cmps.size(); ++k) m.cmp[cmps[k]] = parts[pick[k]];
          bool refuted = for_each_word(props.size() * n, [&](Mask vw) {
            std::size_t vb = 0;
            for (const auto& p : props) {
              m.val[p] = (vw >> vb) & m.all();
              vb += n;
            }
            return !check_sequent_validity(m, s);
          });
          if (refuted) {
            found = m;
            return true;
          }
          std::size_t k = 0;
          while (k < pick.size() && ++pick[k] == parts.size()) pick[k++] = 0;
          if (k == pick.size()) return false;
        }
      });
      if (hit) return found;
    }
  }
  return std::nullopt;
}

HybridDataModel random_model(const Signature& sig, std::size_t nodes, std::mt19937_64& rng) {
  HybridDataModel m = make_model(nodes);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(nodes) - 1);
  std::bernoulli_distribution coin(0.4);
  for (const auto& a : sig.modalities) {
    auto& rows = m.rel[a];
    rows.assign(nodes, 0);
    for (std::size_t x = 0; x < nodes; ++x)
      for (std::size_t y = 0; y < nodes; ++y)
        if (coin(rng)) rows[x] |= bit(static_cast<int>(y));
  }
  for (const auto& c : sig.comparisons) {
    auto& ids = m.cmp[c];
    ids.assign(nodes, 0);
    for (auto& id : ids) id = pick(rng);
  }
  for (const auto& i : sig.nominals) m.g[i] = pick(rng);
  for (const auto& p : sig.props)
    for (std::size_t x = 0; x < nodes; ++x)
      if (coin(rng)) m.val[p] |= bit(static_cast<int>(x));
  return m;
}

}  // namespace hxp
