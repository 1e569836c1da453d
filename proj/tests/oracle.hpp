// Test-only reference semantics and random generators.
//
// The evaluator works on explicit sets of node pairs, straight from the
// satisfaction clauses, and shares no code with the library's bitmask
// evaluator.

#ifndef HXPROOF_TESTS_ORACLE_HPP_
#define HXPROOF_TESTS_ORACLE_HPP_

#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hxproof/model.hpp"
#include "hxproof/sequent.hpp"
#include "hxproof/syntax.hpp"

namespace oracle {

using Pairs = std::set<std::pair<int, int>>;

struct Model {
  int n = 0;
  std::map<std::string, Pairs> rel;
  std::map<std::string, std::vector<std::set<int>>> classes;  // partition blocks
  std::map<std::string, int> g;
  std::map<std::string, std::set<int>> val;

  bool related(const std::string& c, int x, int y) const {
    auto it = classes.find(c);
    if (it == classes.end()) return x == y;
    for (const auto& block : it->second)
      if (block.count(x)) return block.count(y) > 0;
    return x == y;
  }
};

inline Model from_library(const hxp::HybridDataModel& m) {
  Model o;
  o.n = static_cast<int>(m.size());
  for (const auto& [a, rows] : m.rel)
    for (int x = 0; x < o.n; ++x)
      for (int y = 0; y < o.n; ++y)
        if ((rows[x] >> y) & 1) o.rel[a].insert({x, y});
  for (const auto& [c, ids] : m.cmp) {
    std::map<int, std::set<int>> blocks;
    for (int x = 0; x < o.n; ++x) blocks[ids[x]].insert(x);
    for (auto& [id, b] : blocks) o.classes[c].push_back(b);
  }
  o.g = m.g;
  for (const auto& [p, mask] : m.val)
    for (int x = 0; x < o.n; ++x)
      if ((mask >> x) & 1) o.val[p].insert(x);
  return o;
}

inline bool holds(const Model& m, int n, const hxp::Node& e);

inline Pairs path(const Model& m, const hxp::Path& a) {
  Pairs out;
  switch (a->tag) {
    case hxp::PathTag::Atom: {
      auto it = m.rel.find(a->symbol);
      if (it != m.rel.end()) out = it->second;
      break;
    }
    case hxp::PathTag::Jump: {
      int t = m.g.at(a->symbol);
      for (int x = 0; x < m.n; ++x) out.insert({x, t});
      break;
    }
    case hxp::PathTag::Test:
      for (int x = 0; x < m.n; ++x)
        if (holds(m, x, a->test)) out.insert({x, x});
      break;
    case hxp::PathTag::Concat: {
      Pairs h = path(m, a->head), t = path(m, a->tail);
      for (auto [x, y] : h)
        for (auto [y2, z] : t)
          if (y == y2) out.insert({x, z});
      break;
    }
  }
  return out;
}

inline bool holds(const Model& m, int n, const hxp::Node& e) {
  switch (e->tag) {
    case hxp::NodeTag::Prop: {
      auto it = m.val.find(e->symbol);
      return it != m.val.end() && it->second.count(n);
    }
    case hxp::NodeTag::Nominal:
      return m.g.at(e->symbol) == n;
    case hxp::NodeTag::Bottom:
      return false;
    case hxp::NodeTag::Implies:
      return !holds(m, n, e->lhs) || holds(m, n, e->rhs);
    case hxp::NodeTag::At:
      return holds(m, m.g.at(e->symbol), e->lhs);
    case hxp::NodeTag::Diamond: {
      auto it = m.rel.find(e->symbol);
      if (it == m.rel.end()) return false;
      for (auto [x, y] : it->second)
        if (x == n && holds(m, y, e->lhs)) return true;
      return false;
    }
    case hxp::NodeTag::Compare: {
      Pairs l = path(m, e->left), r = path(m, e->right);
      for (auto [x, y] : l) {
        if (x != n) continue;
        for (auto [x2, z] : r) {
          if (x2 != n) continue;
          bool same = m.related(e->symbol, y, z);
          if (same == (e->kind == hxp::CmpKind::Eq)) return true;
        }
      }
      return false;
    }
  }
  return false;
}

// Restricted formulas are node-independent; evaluate at node 0.
inline bool valid_in(const Model& m, const hxp::Sequent& s) {
  for (const auto& f : s.ante())
    if (!holds(m, 0, f)) return true;
  for (const auto& f : s.succ())
    if (holds(m, 0, f)) return true;
  return false;
}

struct Vocab {
  std::vector<std::string> props{"p", "q"};
  std::vector<std::string> nominals{"i", "j", "k"};
  std::vector<std::string> modalities{"a"};
  std::vector<std::string> comparisons{"c"};
};

class Gen {
 public:
  Gen(std::uint64_t seed, Vocab v = {}) : rng_(seed), v_(std::move(v)) {}

  std::mt19937_64& rng() { return rng_; }
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  const std::string& any(const std::vector<std::string>& xs) { return xs[pick(static_cast<int>(xs.size()))]; }
  std::string nom() { return any(v_.nominals); }

  hxp::Node node(int depth) {
    if (depth <= 0 || pick(3) == 0) {
      switch (pick(4)) {
        case 0: return hxp::nominal(nom());
        case 1: return hxp::bottom();
        default: return hxp::prop(any(v_.props));
      }
    }
    int choices = v_.comparisons.empty() ? 4 : 5;
    switch (pick(choices)) {
      case 0: return hxp::implies(node(depth - 1), node(depth - 1));
      case 1: return hxp::neg(node(depth - 1));
      case 2: return hxp::at(nom(), node(depth - 1));
      case 3: return hxp::diamond(any(v_.modalities), node(depth - 1));
      default:
        return hxp::compare(path(depth - 1), pick(2) ? hxp::CmpKind::Eq : hxp::CmpKind::Neq,
                            any(v_.comparisons), path(depth - 1));
    }
  }

  hxp::Path path(int depth) {
    if (depth <= 0) return pick(2) ? hxp::atom(any(v_.modalities)) : hxp::jump(nom());
    switch (pick(5)) {
      case 0: return hxp::jump(nom());
      case 1: return hxp::test(node(depth - 1));
      case 2: return hxp::concat(path(depth - 1), path(depth - 1));
      default: return hxp::atom(any(v_.modalities));
    }
  }

  hxp::Node restricted(int depth) {
    if (!v_.comparisons.empty() && pick(8) == 0)
      return hxp::compare(hxp::jump(nom()), pick(2) ? hxp::CmpKind::Eq : hxp::CmpKind::Neq,
                          any(v_.comparisons), hxp::jump(nom()));
    return hxp::at(nom(), node(depth));
  }

  hxp::Sequent sequent(int max_side, int depth) {
    std::vector<hxp::Node> l, r;
    int nl = pick(max_side + 1), nr = 1 + pick(max_side);
    for (int x = 0; x < nl; ++x) l.push_back(restricted(depth));
    for (int x = 0; x < nr; ++x) r.push_back(restricted(depth));
    return hxp::Sequent(l, r);
  }

 private:
  std::mt19937_64 rng_;
  Vocab v_;
};

// Random model over the vocabulary with `n` nodes, built directly.
inline Model random_model(Gen& gen, const Vocab& v, int n) {
  Model m;
  m.n = n;
  for (const auto& a : v.modalities)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (gen.pick(3) == 0) m.rel[a].insert({x, y});
  for (const auto& c : v.comparisons) {
    std::vector<int> label(n);
    for (int x = 0; x < n; ++x) label[x] = gen.pick(n);
    std::map<int, std::set<int>> blocks;
    for (int x = 0; x < n; ++x) blocks[label[x]].insert(x);
    for (auto& [id, b] : blocks) m.classes[c].push_back(b);
  }
  for (const auto& i : v.nominals) m.g[i] = gen.pick(n);
  for (const auto& p : v.props)
    for (int x = 0; x < n; ++x)
      if (gen.pick(2)) m.val[p].insert(x);
  return m;
}

}  // namespace oracle

#endif  // HXPROOF_TESTS_ORACLE_HPP_
