#ifndef HXPROOF_PARSER_HPP_
#define HXPROOF_PARSER_HPP_

#include <string_view>

#include "hxproof/sequent.hpp"
#include "hxproof/symbols.hpp"
#include "hxproof/syntax.hpp"

namespace hxp {

// Grammar (docs/grammar.md):
//
//   node    ::= imp ( "<->" imp )*
//   imp     ::= or ( "->" imp )?
//   or      ::= and ( "|" and )*
//   and     ::= unary ( "&" unary )*
//   unary   ::= "~" unary | "@" NOM unary
//             | "<" path ">" unary | "<" path CMPOP CMP path ">"
//             | "[" path "]" unary | "[" path CMPOP CMP path "]"
//             | "(" node ")" | "true" | "false" | IDENT
//   path    ::= step+
//   step    ::= NOM ":" | MOD | "eps" | "(" node "?" ")"
//   CMPOP   ::= "=" | "!="
//   sequent ::= [ node ( "," node )* ] "|-" [ node ( "," node )* ]
//
// Unicode spellings (¬ → ↔ ∧ ∨ ⊥ ⊤ ε ⟨ ⟩ ≠ ⊢) are accepted as well.
// Abbreviations are expanded while parsing.
Node parse_node(std::string_view text, SymbolTable& table);
Node parse_node(std::string_view text);
Path parse_path(std::string_view text, SymbolTable& table);
Path parse_path(std::string_view text);
Sequent parse_sequent(std::string_view text, SymbolTable& table);
Sequent parse_sequent(std::string_view text);

}  // namespace hxp

#endif  // HXPROOF_PARSER_HPP_
