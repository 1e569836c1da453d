#include "hxproof/parser.hpp"

#include <cctype>
#include <cstring>
#include <vector>

namespace hxp {
namespace {

enum class Tok {
  Ident, LParen, RParen, LAngle, RAngle, LBrack, RBrack,
  Colon, Question, Comma, Eq, Neq, Not, And, Or, Imp, Iff,
  At, Turnstile, True, False, Eps, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

struct Spelling {
  const char* text;
  Tok kind;
};

// Longest spellings first so that "<->" wins over "<" and "|-" over "|".
constexpr Spelling kSpellings[] = {
    {"<->", Tok::Iff}, {"->", Tok::Imp}, {"|-", Tok::Turnstile}, {"!=", Tok::Neq},
    {"↔", Tok::Iff},   {"→", Tok::Imp},  {"⊢", Tok::Turnstile},  {"≠", Tok::Neq},
    {"⟨", Tok::LAngle}, {"⟩", Tok::RAngle}, {"¬", Tok::Not}, {"∧", Tok::And},
    {"∨", Tok::Or},    {"⊥", Tok::False}, {"⊤", Tok::True},     {"ε", Tok::Eps},
    {"<", Tok::LAngle}, {">", Tok::RAngle}, {"(", Tok::LParen},  {")", Tok::RParen},
    {"[", Tok::LBrack}, {"]", Tok::RBrack}, {":", Tok::Colon},   {"?", Tok::Question},
    {",", Tok::Comma},  {"=", Tok::Eq},     {"~", Tok::Not},     {"!", Tok::Not},
    {"&", Tok::And},    {"|", Tok::Or},     {"@", Tok::At},
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < s.size()) {
    char c = s[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++k;
      continue;
    }
    if (ident_char(c)) {
      std::size_t start = k;
      while (k < s.size() && ident_char(s[k])) ++k;
      std::string word(s.substr(start, k - start));
      Tok kind = Tok::Ident;
      if (word == "true") kind = Tok::True;
      else if (word == "false") kind = Tok::False;
      else if (word == "eps") kind = Tok::Eps;
      out.push_back({kind, std::move(word), start});
      continue;
    }
    bool matched = false;
    for (const auto& sp : kSpellings) {
      std::size_t len = std::strlen(sp.text);
      if (s.substr(k, len) == sp.text) {
        out.push_back({sp.kind, sp.text, k});
        k += len;
        matched = true;
        break;
      }
    }
    if (!matched) throw SyntaxError(std::string("unexpected character '") + c + "'", k);
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, SymbolTable& table) : toks_(lex(text)), table_(table) {}

  Node node() {
    Node a = imp();
    while (accept(Tok::Iff)) a = iff(a, imp());
    return a;
  }

  Path path() {
    Path p = step();
    while (starts_step()) p = concat(p, step());
    return p;
  }

  Sequent sequent() {
    std::vector<Node> ante, succ;
    if (peek().kind != Tok::Turnstile) cedent(ante);
    expect(Tok::Turnstile, "'|-'");
    if (peek().kind != Tok::End) cedent(succ);
    return Sequent(std::move(ante), std::move(succ));
  }

  void finish() {
    if (peek().kind != Tok::End) fail("trailing input '" + peek().text + "'");
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, peek().pos); }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    return next();
  }
  std::string ident(SymbolSpace space, const char* what) {
    std::string name = expect(Tok::Ident, what).text;
    table_.use(name, space);
    return name;
  }

  void cedent(std::vector<Node>& out) {
    do {
      std::size_t at = peek().pos;
      Node e = node();
      if (!is_restricted(e))
        throw SyntaxError("sequent member must be @i φ or <i: =c j:>", at);
      out.push_back(e);
    } while (accept(Tok::Comma));
  }

  Node imp() {
    Node a = disjunction();
    if (accept(Tok::Imp)) return implies(a, imp());
    return a;
  }

  Node disjunction() {
    Node a = conjunction();
    while (accept(Tok::Or)) a = disj(a, conjunction());
    return a;
  }

  Node conjunction() {
    Node a = unary();
    while (accept(Tok::And)) a = conj(a, unary());
    return a;
  }

  Node unary() {
    switch (peek().kind) {
      case Tok::Not:
        next();
        return neg(unary());
      case Tok::At: {
        next();
        std::string i = ident(SymbolSpace::Nominal, "nominal after '@'");
        return at(i, unary());
      }
      case Tok::LAngle:
      case Tok::LBrack: return modal();
      case Tok::LParen: {
        next();
        Node e = node();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::True: next(); return top();
      case Tok::False: next(); return bottom();
      case Tok::Ident: {
        std::string name = next().text;
        SymbolSpace sp = table_.classify(name);
        table_.use(name, sp);
        return sp == SymbolSpace::Nominal ? nominal(name) : prop(name);
      }
      default: fail("expected a node expression");
    }
  }

  Node modal() {
    bool box = next().kind == Tok::LBrack;
    Tok close = box ? Tok::RBrack : Tok::RAngle;
    Path a = path();
    if (peek().kind == Tok::Eq || peek().kind == Tok::Neq) {
      CmpKind kind = next().kind == Tok::Eq ? CmpKind::Eq : CmpKind::Neq;
      std::string c = ident(SymbolSpace::Comparison, "comparison symbol");
      Path b = path();
      expect(close, box ? "']'" : "'>'");
      return box ? box_compare(a, kind, c, b) : compare(a, kind, c, b);
    }
    expect(close, box ? "']'" : "'>'");
    Node body = unary();
    return box ? box_path(a, body) : dia_path(a, body);
  }

  bool starts_step() const {
    Tok k = peek().kind;
    return k == Tok::Ident || k == Tok::Eps || k == Tok::LParen;
  }

  Path step() {
    switch (peek().kind) {
      case Tok::Eps: next(); return eps();
      case Tok::LParen: {
        next();
        Node t = node();
        expect(Tok::Question, "'?' closing a test");
        expect(Tok::RParen, "')'");
        return test(t);
      }
      case Tok::Ident: {
        std::string name = next().text;
        if (accept(Tok::Colon)) {
          table_.use(name, SymbolSpace::Nominal);
          return jump(name);
        }
        table_.use(name, SymbolSpace::Modality);
        return atom(name);
      }
      default: fail("expected a path step");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  SymbolTable& table_;
};

}  // namespace

Node parse_node(std::string_view text, SymbolTable& table) {
  Parser p(text, table);
  Node e = p.node();
  p.finish();
  return e;
}

Node parse_node(std::string_view text) {
  SymbolTable table;
  return parse_node(text, table);
}

Path parse_path(std::string_view text, SymbolTable& table) {
  Parser p(text, table);
  Path e = p.path();
  p.finish();
  return e;
}

Path parse_path(std::string_view text) {
  SymbolTable table;
  return parse_path(text, table);
}

Sequent parse_sequent(std::string_view text, SymbolTable& table) {
  Parser p(text, table);
  Sequent s = p.sequent();
  p.finish();
  return s;
}

Sequent parse_sequent(std::string_view text) {
  SymbolTable table;
  return parse_sequent(text, table);
}

}  // namespace hxp
