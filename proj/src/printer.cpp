#include "hxproof/printer.hpp"

#include "hxproof/sequent.hpp"

namespace hxp {
namespace {

struct Glyphs {
  const char* bot;
  const char* top;
  const char* eps;
  const char* neg;
  const char* imp;
  const char* lt;
  const char* gt;
  const char* neq;
  const char* turnstile;
};

constexpr Glyphs kAscii{"false", "true", "eps", "~", " -> ", "<", ">", "!=", "|-"};
constexpr Glyphs kUnicode{"⊥", "⊤", "ε", "¬", " → ", "⟨", "⟩", "≠", "⊢"};

const Glyphs& glyphs(Notation n) { return n == Notation::Ascii ? kAscii : kUnicode; }

void put(std::string& out, const Node& e, const Glyphs& g);

void put(std::string& out, const Path& e, const Glyphs& g) {
  switch (e->tag) {
    case PathTag::Atom: out += e->symbol; break;
    case PathTag::Jump:
      out += e->symbol;
      out += ':';
      break;
    case PathTag::Test:
      if (equal(e->test, top())) {
        out += g.eps;
        break;
      }
      out += '(';
      put(out, e->test, g);
      out += "?)";
      break;
    case PathTag::Concat:
      put(out, e->head, g);
      out += ' ';
      put(out, e->tail, g);
      break;
  }
}

// ⊤, ε and negation are re-sugared on an exact match; other abbreviations
// stay in primitive form. Implications carry their own parentheses, so
// every printed form is self-delimiting in unary position.
void put(std::string& out, const Node& e, const Glyphs& g) {
  switch (e->tag) {
    case NodeTag::Prop:
    case NodeTag::Nominal: out += e->symbol; break;
    case NodeTag::Bottom: out += g.bot; break;
    case NodeTag::Implies:
      if (e->rhs->tag == NodeTag::Bottom && e->lhs->tag == NodeTag::Bottom) {
        out += g.top;
      } else if (e->rhs->tag == NodeTag::Bottom) {
        out += g.neg;
        put(out, e->lhs, g);
      } else {
        out += '(';
        put(out, e->lhs, g);
        out += g.imp;
        put(out, e->rhs, g);
        out += ')';
      }
      break;
    case NodeTag::At:
      out += '@';
      out += e->symbol;
      out += ' ';
      put(out, e->lhs, g);
      break;
    case NodeTag::Diamond:
      out += g.lt;
      out += e->symbol;
      out += g.gt;
      put(out, e->lhs, g);
      break;
    case NodeTag::Compare:
      out += g.lt;
      put(out, e->left, g);
      out += ' ';
      out += e->kind == CmpKind::Eq ? "=" : g.neq;
      out += e->symbol;
      out += ' ';
      put(out, e->right, g);
      out += g.gt;
      break;
  }
}

void put_cedent(std::string& out, const Cedent& c, const Glyphs& g) {
  bool first = true;
  for (const auto& e : c) {
    if (!first) out += ", ";
    first = false;
    put(out, e, g);
  }
}

}  // namespace

std::string print_node(const Node& e, Notation n) {
  std::string out;
  put(out, e, glyphs(n));
  return out;
}

std::string print_path(const Path& e, Notation n) {
  std::string out;
  put(out, e, glyphs(n));
  return out;
}

std::string print_sequent(const Sequent& s, Notation n) {
  const Glyphs& g = glyphs(n);
  std::string out;
  put_cedent(out, s.ante(), g);
  if (!s.ante().empty()) out += ' ';
  out += g.turnstile;
  if (!s.succ().empty()) out += ' ';
  put_cedent(out, s.succ(), g);
  return out;
}

}  // namespace hxp
