#include "hxproof/syntax.hpp"

#include <utility>

namespace hxp {

namespace {

Node make_node(NodeExpr e) { return std::make_shared<const NodeExpr>(std::move(e)); }
Path make_path(PathExpr e) { return std::make_shared<const PathExpr>(std::move(e)); }

int cmp_str(const std::string& a, const std::string& b) {
  int c = a.compare(b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

}  // namespace

Node prop(std::string p) { return make_node({NodeTag::Prop, std::move(p), {}, {}, {}, {}}); }
Node nominal(std::string i) { return make_node({NodeTag::Nominal, std::move(i), {}, {}, {}, {}}); }

Node bottom() {
  static const Node b = make_node({NodeTag::Bottom, {}, {}, {}, {}, {}});
  return b;
}

Node implies(Node a, Node b) {
  return make_node({NodeTag::Implies, {}, std::move(a), std::move(b), {}, {}});
}

Node at(std::string i, Node body) {
  return make_node({NodeTag::At, std::move(i), std::move(body), {}, {}, {}});
}

Node diamond(std::string modality, Node body) {
  return make_node({NodeTag::Diamond, std::move(modality), std::move(body), {}, {}, {}});
}

Node compare(Path a, CmpKind kind, std::string cmp, Path b) {
  NodeExpr e{NodeTag::Compare, std::move(cmp), {}, {}, std::move(a), std::move(b)};
  e.kind = kind;
  return make_node(std::move(e));
}

Path atom(std::string modality) { return make_path({PathTag::Atom, std::move(modality), {}, {}, {}}); }
Path jump(std::string i) { return make_path({PathTag::Jump, std::move(i), {}, {}, {}}); }
Path test(Node body) { return make_path({PathTag::Test, {}, std::move(body), {}, {}}); }

Path concat(Path a, Path b) {
  if (a->tag == PathTag::Concat) return concat(a->head, concat(a->tail, std::move(b)));
  return make_path({PathTag::Concat, {}, {}, std::move(a), std::move(b)});
}

Node top() {
  static const Node t = implies(bottom(), bottom());
  return t;
}
Node neg(Node a) { return implies(std::move(a), bottom()); }
Node disj(Node a, Node b) { return implies(neg(std::move(a)), std::move(b)); }
Node conj(Node a, Node b) { return neg(implies(std::move(a), neg(std::move(b)))); }
Node iff(Node a, Node b) { return conj(implies(a, b), implies(b, a)); }
Path eps() { return test(top()); }

Node dia_path(const Path& alpha, Node body) {
  switch (alpha->tag) {
    case PathTag::Atom: return diamond(alpha->symbol, std::move(body));
    case PathTag::Jump: return at(alpha->symbol, std::move(body));
    case PathTag::Test: return conj(alpha->test, std::move(body));
    case PathTag::Concat: return dia_path(alpha->head, dia_path(alpha->tail, std::move(body)));
  }
  throw std::logic_error("dia_path: bad path tag");
}

Node box_path(const Path& alpha, Node body) { return neg(dia_path(alpha, neg(std::move(body)))); }

Node box_compare(Path a, CmpKind kind, std::string cmp, Path b) {
  return neg(compare(std::move(a), flip(kind), std::move(cmp), std::move(b)));
}

Abbrev abbrev_from_name(const std::string& name) {
  if (name == "top") return Abbrev::Top;
  if (name == "not") return Abbrev::Neg;
  if (name == "or") return Abbrev::Or;
  if (name == "and") return Abbrev::And;
  if (name == "iff") return Abbrev::Iff;
  if (name == "eps") return Abbrev::Eps;
  if (name == "dia") return Abbrev::DiaPath;
  if (name == "box") return Abbrev::BoxPath;
  if (name == "boxcmp") return Abbrev::BoxCompare;
  throw std::invalid_argument("unknown abbreviation: " + name);
}

Expansion expand_abbrev(Abbrev which, const AbbrevArgs& args) {
  auto need = [&](std::size_t nodes, std::size_t paths) {
    if (args.nodes.size() != nodes || args.paths.size() != paths)
      throw std::invalid_argument("abbreviation arity mismatch");
  };
  switch (which) {
    case Abbrev::Top: need(0, 0); return {top(), {}};
    case Abbrev::Neg: need(1, 0); return {neg(args.nodes[0]), {}};
    case Abbrev::Or: need(2, 0); return {disj(args.nodes[0], args.nodes[1]), {}};
    case Abbrev::And: need(2, 0); return {conj(args.nodes[0], args.nodes[1]), {}};
    case Abbrev::Iff: need(2, 0); return {iff(args.nodes[0], args.nodes[1]), {}};
    case Abbrev::Eps: need(0, 0); return {{}, eps()};
    case Abbrev::DiaPath: need(1, 1); return {dia_path(args.paths[0], args.nodes[0]), {}};
    case Abbrev::BoxPath: need(1, 1); return {box_path(args.paths[0], args.nodes[0]), {}};
    case Abbrev::BoxCompare:
      need(0, 2);
      return {box_compare(args.paths[0], args.kind, args.cmp, args.paths[1]), {}};
  }
  throw std::invalid_argument("unknown abbreviation");
}

int compare_paths(const PathExpr& a, const PathExpr& b) {
  if (&a == &b) return 0;
  if (a.tag != b.tag) return a.tag < b.tag ? -1 : 1;
  switch (a.tag) {
    case PathTag::Atom:
    case PathTag::Jump: return cmp_str(a.symbol, b.symbol);
    case PathTag::Test: return compare_nodes(a.test, b.test);
    case PathTag::Concat: {
      int c = compare_paths(a.head, b.head);
      return c != 0 ? c : compare_paths(a.tail, b.tail);
    }
  }
  return 0;
}

int compare_nodes(const NodeExpr& a, const NodeExpr& b) {
  if (&a == &b) return 0;
  if (a.tag != b.tag) return a.tag < b.tag ? -1 : 1;
  switch (a.tag) {
    case NodeTag::Prop:
    case NodeTag::Nominal: return cmp_str(a.symbol, b.symbol);
    case NodeTag::Bottom: return 0;
    case NodeTag::Implies: {
      int c = compare_nodes(a.lhs, b.lhs);
      return c != 0 ? c : compare_nodes(a.rhs, b.rhs);
    }
    case NodeTag::At:
    case NodeTag::Diamond: {
      int c = cmp_str(a.symbol, b.symbol);
      return c != 0 ? c : compare_nodes(a.lhs, b.lhs);
    }
    case NodeTag::Compare: {
      if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
      int c = cmp_str(a.symbol, b.symbol);
      if (c != 0) return c;
      c = compare_paths(a.left, b.left);
      return c != 0 ? c : compare_paths(a.right, b.right);
    }
  }
  return 0;
}

bool equal(const Node& a, const Node& b) { return compare_nodes(a, b) == 0; }
bool equal(const Path& a, const Path& b) { return compare_paths(a, b) == 0; }

std::size_t size(const Path& e) {
  switch (e->tag) {
    case PathTag::Atom:
    case PathTag::Jump: return 1;
    case PathTag::Test: return 1 + size(e->test);
    case PathTag::Concat: return size(e->head) + size(e->tail);
  }
  return 0;
}

std::size_t size(const Node& e) {
  switch (e->tag) {
    case NodeTag::Prop:
    case NodeTag::Nominal:
    case NodeTag::Bottom: return 1;
    case NodeTag::Implies: return 1 + size(e->lhs) + size(e->rhs);
    case NodeTag::At:
    case NodeTag::Diamond: return 1 + size(e->lhs);
    case NodeTag::Compare: return 1 + size(e->left) + size(e->right);
  }
  return 0;
}

void collect_nominals(const Path& e, std::set<std::string>& out) {
  switch (e->tag) {
    case PathTag::Atom: break;
    case PathTag::Jump: out.insert(e->symbol); break;
    case PathTag::Test: collect_nominals(e->test, out); break;
    case PathTag::Concat:
      collect_nominals(e->head, out);
      collect_nominals(e->tail, out);
      break;
  }
}

void collect_nominals(const Node& e, std::set<std::string>& out) {
  switch (e->tag) {
    case NodeTag::Prop:
    case NodeTag::Bottom: break;
    case NodeTag::Nominal: out.insert(e->symbol); break;
    case NodeTag::Implies:
      collect_nominals(e->lhs, out);
      collect_nominals(e->rhs, out);
      break;
    case NodeTag::At:
      out.insert(e->symbol);
      collect_nominals(e->lhs, out);
      break;
    case NodeTag::Diamond: collect_nominals(e->lhs, out); break;
    case NodeTag::Compare:
      collect_nominals(e->left, out);
      collect_nominals(e->right, out);
      break;
  }
}

std::set<std::string> nominals_of(const Node& e) {
  std::set<std::string> out;
  collect_nominals(e, out);
  return out;
}

std::set<std::string> nominals_of(const Path& e) {
  std::set<std::string> out;
  collect_nominals(e, out);
  return out;
}

void Signature::add(const Path& e) {
  switch (e->tag) {
    case PathTag::Atom: modalities.insert(e->symbol); break;
    case PathTag::Jump: nominals.insert(e->symbol); break;
    case PathTag::Test: add(e->test); break;
    case PathTag::Concat:
      add(e->head);
      add(e->tail);
      break;
  }
}

void Signature::add(const Node& e) {
  switch (e->tag) {
    case NodeTag::Prop: props.insert(e->symbol); break;
    case NodeTag::Nominal: nominals.insert(e->symbol); break;
    case NodeTag::Bottom: break;
    case NodeTag::Implies:
      add(e->lhs);
      add(e->rhs);
      break;
    case NodeTag::At:
      nominals.insert(e->symbol);
      add(e->lhs);
      break;
    case NodeTag::Diamond:
      modalities.insert(e->symbol);
      add(e->lhs);
      break;
    case NodeTag::Compare:
      comparisons.insert(e->symbol);
      add(e->left);
      add(e->right);
      break;
  }
}

Path rename_nominal(const Path& e, const std::string& from, const std::string& to) {
  if (from == to) return e;
  switch (e->tag) {
    case PathTag::Atom: return e;
    case PathTag::Jump: return e->symbol == from ? jump(to) : e;
    case PathTag::Test: {
      Node b = rename_nominal(e->test, from, to);
      return b == e->test ? e : test(b);
    }
    case PathTag::Concat: {
      Path h = rename_nominal(e->head, from, to);
      Path t = rename_nominal(e->tail, from, to);
      return (h == e->head && t == e->tail) ? e : concat(h, t);
    }
  }
  return e;
}

Node rename_nominal(const Node& e, const std::string& from, const std::string& to) {
  if (from == to) return e;
  switch (e->tag) {
    case NodeTag::Prop:
    case NodeTag::Bottom: return e;
    case NodeTag::Nominal: return e->symbol == from ? nominal(to) : e;
    case NodeTag::Implies: {
      Node a = rename_nominal(e->lhs, from, to);
      Node b = rename_nominal(e->rhs, from, to);
      return (a == e->lhs && b == e->rhs) ? e : implies(a, b);
    }
    case NodeTag::At: {
      Node b = rename_nominal(e->lhs, from, to);
      if (b == e->lhs && e->symbol != from) return e;
      return at(e->symbol == from ? to : e->symbol, b);
    }
    case NodeTag::Diamond: {
      Node b = rename_nominal(e->lhs, from, to);
      return b == e->lhs ? e : diamond(e->symbol, b);
    }
    case NodeTag::Compare: {
      Path l = rename_nominal(e->left, from, to);
      Path r = rename_nominal(e->right, from, to);
      return (l == e->left && r == e->right) ? e : compare(l, e->kind, e->symbol, r);
    }
  }
  return e;
}

bool is_at(const Node& e) { return e->tag == NodeTag::At; }

bool is_nominal_compare(const Node& e) {
  return e->tag == NodeTag::Compare && e->left->tag == PathTag::Jump &&
         e->right->tag == PathTag::Jump;
}

bool is_restricted(const Node& e) { return is_at(e) || is_nominal_compare(e); }

bool is_axiom_shape(const Node& e) {
  if (is_at(e)) return e->lhs->tag == NodeTag::Prop || e->lhs->tag == NodeTag::Nominal;
  return is_nominal_compare(e) && e->kind == CmpKind::Eq;
}

bool is_s1_body(const Node& e) {
  if (e->tag == NodeTag::Prop || e->tag == NodeTag::Bottom) return true;
  return e->tag == NodeTag::Diamond && e->lhs->tag == NodeTag::Nominal;
}

Node nominal_compare(const std::string& i, CmpKind kind, const std::string& c, const std::string& j) {
  return compare(jump(i), kind, c, jump(j));
}

}  // namespace hxp
