#ifndef HXPROOF_SYMBOLS_HPP_
#define HXPROOF_SYMBOLS_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <string>

#include "hxproof/syntax.hpp"

namespace hxp {

enum class SymbolSpace { Prop, Nominal, Modality, Comparison };

const char* to_string(SymbolSpace s);

// Interned symbol spaces plus the fresh-nominal supply.
//
// Identifiers that were never declared are classified lexically when they
// occur in node position: `_name` and a single letter from i..n followed
// by digits are nominals, everything else is a proposition. Path and
// comparison positions fix the space syntactically.
class SymbolTable {
 public:
  // Registers `name` in `space`; throws SymbolSpaceError on a clash.
  void use(const std::string& name, SymbolSpace space);
  void declare(const std::string& name, SymbolSpace space) { use(name, space); }

  // Space an identifier gets in node position (Prop or Nominal).
  SymbolSpace classify(const std::string& name) const;

  void register_expr(const Node& e);
  void register_expr(const Path& e);

  // A nominal `_n<k>` never registered or returned before.
  std::string fresh();

  bool known(const std::string& name) const { return spaces_.count(name) != 0; }

 private:
  std::map<std::string, SymbolSpace> spaces_;
  std::size_t counter_ = 0;
};

class SymbolSpaceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool looks_like_nominal(const std::string& name);

// Smallest `_n<k>` outside `avoid`; `hint` is advanced past the result.
std::string fresh_nominal(const std::set<std::string>& avoid, std::size_t& hint);
inline std::string fresh_nominal(const std::set<std::string>& avoid) {
  std::size_t hint = 0;
  return fresh_nominal(avoid, hint);
}

}  // namespace hxp

#endif  // HXPROOF_SYMBOLS_HPP_
