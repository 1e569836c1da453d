#ifndef HXPROOF_PRINTER_HPP_
#define HXPROOF_PRINTER_HPP_

#include <string>

#include "hxproof/syntax.hpp"

namespace hxp {

class Sequent;

enum class Notation { Ascii, Unicode };

// ASCII output is re-readable by parse_node; Unicode output mirrors the
// usual mathematical notation and is also accepted by the parser.
std::string print_node(const Node& e, Notation n = Notation::Ascii);
std::string print_path(const Path& e, Notation n = Notation::Ascii);
std::string print_sequent(const Sequent& s, Notation n = Notation::Ascii);

}  // namespace hxp

#endif  // HXPROOF_PRINTER_HPP_
