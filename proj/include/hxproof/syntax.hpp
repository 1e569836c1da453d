// Abstract syntax of hybrid XPath with data comparisons.
//
// Path and node expressions are immutable trees shared through
// std::shared_ptr<const ...>. Only primitive constructors are stored;
// the usual abbreviations (negation, conjunction, boxes, generalized
// diamonds, ...) are expansion functions returning primitive trees.

#ifndef HXPROOF_SYNTAX_HPP_
#define HXPROOF_SYNTAX_HPP_

#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hxp {

enum class CmpKind : std::uint8_t { Eq, Neq };

constexpr CmpKind flip(CmpKind k) { return k == CmpKind::Eq ? CmpKind::Neq : CmpKind::Eq; }

struct PathExpr;
struct NodeExpr;
using Path = std::shared_ptr<const PathExpr>;
using Node = std::shared_ptr<const NodeExpr>;

enum class PathTag : std::uint8_t { Atom, Jump, Test, Concat };

struct PathExpr {
  PathTag tag;
  std::string symbol;  // modality for Atom, nominal for Jump
  Node test;           // Test body
  Path head, tail;     // Concat; head is never itself a Concat
};

enum class NodeTag : std::uint8_t { Prop, Nominal, Bottom, Implies, At, Diamond, Compare };

struct NodeExpr {
  NodeTag tag;
  // Prop name, Nominal name, At index, Diamond modality or Compare symbol.
  std::string symbol;
  Node lhs, rhs;       // Implies uses both; At and Diamond keep their body in lhs
  Path left, right;    // Compare operands
  CmpKind kind = CmpKind::Eq;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at offset " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

// Primitive constructors.
Node prop(std::string p);
Node nominal(std::string i);
Node bottom();
Node implies(Node a, Node b);
Node at(std::string i, Node body);
Node diamond(std::string modality, Node body);
Node compare(Path a, CmpKind kind, std::string cmp, Path b);

Path atom(std::string modality);
Path jump(std::string i);
Path test(Node body);
// Builds a right-nested chain regardless of how the operands are nested.
Path concat(Path a, Path b);

// Abbreviations, expanded to primitives.
Node top();                                  // ⊥→⊥
Node neg(Node a);                            // a→⊥
Node disj(Node a, Node b);                   // ¬a→b
Node conj(Node a, Node b);                   // ¬(a→¬b)
Node iff(Node a, Node b);                    // (a→b)∧(b→a)
Path eps();                                  // ⊤?
Node dia_path(const Path& alpha, Node body); // ⟨α⟩φ for an arbitrary path
Node box_path(const Path& alpha, Node body); // [α]φ
Node box_compare(Path a, CmpKind kind, std::string cmp, Path b);  // [α▲β]

enum class Abbrev { Top, Neg, Or, And, Iff, Eps, DiaPath, BoxPath, BoxCompare };

struct AbbrevArgs {
  std::vector<Node> nodes;
  std::vector<Path> paths;
  CmpKind kind = CmpKind::Eq;
  std::string cmp;
};

struct Expansion {
  Node node;
  Path path;
};

// Generic entry point over the abbreviations above; checks arity.
Expansion expand_abbrev(Abbrev which, const AbbrevArgs& args);
Abbrev abbrev_from_name(const std::string& name);

// Total structural order; 0 iff structurally equal.
int compare_nodes(const NodeExpr& a, const NodeExpr& b);
int compare_paths(const PathExpr& a, const PathExpr& b);
inline int compare_nodes(const Node& a, const Node& b) {
  return a == b ? 0 : compare_nodes(*a, *b);
}
inline int compare_paths(const Path& a, const Path& b) {
  return a == b ? 0 : compare_paths(*a, *b);
}
bool equal(const Node& a, const Node& b);
bool equal(const Path& a, const Path& b);

struct NodeLess {
  bool operator()(const Node& a, const Node& b) const { return compare_nodes(a, b) < 0; }
};

using NodeSet = std::set<Node, NodeLess>;

std::size_t size(const Node& e);
std::size_t size(const Path& e);

void collect_nominals(const Node& e, std::set<std::string>& out);
void collect_nominals(const Path& e, std::set<std::string>& out);
std::set<std::string> nominals_of(const Node& e);
std::set<std::string> nominals_of(const Path& e);

// Symbols of the other three spaces, for countermodel enumeration.
struct Signature {
  std::set<std::string> props, nominals, modalities, comparisons;
  void add(const Node& e);
  void add(const Path& e);
};

Node rename_nominal(const Node& e, const std::string& from, const std::string& to);
Path rename_nominal(const Path& e, const std::string& from, const std::string& to);

// Shape predicates used by the calculus.
bool is_at(const Node& e);                         // @_i φ
bool is_nominal_compare(const Node& e);            // ⟨i: ▲ j:⟩
bool is_restricted(const Node& e);                 // either of the above
bool is_axiom_shape(const Node& e);                // @_i p, @_i j, ⟨i: =_c j:⟩
bool is_s1_body(const Node& e);                    // p, ⊥ or ⟨a⟩k

// ⟨i: ▲_c j:⟩
Node nominal_compare(const std::string& i, CmpKind kind, const std::string& c, const std::string& j);

}  // namespace hxp

#endif  // HXPROOF_SYNTAX_HPP_
