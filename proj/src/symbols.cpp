#include "hxproof/symbols.hpp"

#include <cctype>

namespace hxp {

const char* to_string(SymbolSpace s) {
  switch (s) {
    case SymbolSpace::Prop: return "proposition";
    case SymbolSpace::Nominal: return "nominal";
    case SymbolSpace::Modality: return "modality";
    case SymbolSpace::Comparison: return "comparison";
  }
  return "?";
}

bool looks_like_nominal(const std::string& name) {
  if (name.empty()) return false;
  if (name[0] == '_') return true;
  if (name[0] < 'i' || name[0] > 'n') return false;
  for (std::size_t k = 1; k < name.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(name[k]))) return false;
  return true;
}

void SymbolTable::use(const std::string& name, SymbolSpace space) {
  auto [it, inserted] = spaces_.emplace(name, space);
  if (!inserted && it->second != space)
    throw SymbolSpaceError("symbol '" + name + "' used as " + to_string(space) +
                           " but already a " + to_string(it->second));
}

SymbolSpace SymbolTable::classify(const std::string& name) const {
  auto it = spaces_.find(name);
  if (it != spaces_.end() && (it->second == SymbolSpace::Prop || it->second == SymbolSpace::Nominal))
    return it->second;
  return looks_like_nominal(name) ? SymbolSpace::Nominal : SymbolSpace::Prop;
}

void SymbolTable::register_expr(const Path& e) {
  switch (e->tag) {
    case PathTag::Atom: use(e->symbol, SymbolSpace::Modality); break;
    case PathTag::Jump: use(e->symbol, SymbolSpace::Nominal); break;
    case PathTag::Test: register_expr(e->test); break;
    case PathTag::Concat:
      register_expr(e->head);
      register_expr(e->tail);
      break;
  }
}

void SymbolTable::register_expr(const Node& e) {
  switch (e->tag) {
    case NodeTag::Prop: use(e->symbol, SymbolSpace::Prop); break;
    case NodeTag::Nominal: use(e->symbol, SymbolSpace::Nominal); break;
    case NodeTag::Bottom: break;
    case NodeTag::Implies:
      register_expr(e->lhs);
      register_expr(e->rhs);
      break;
    case NodeTag::At:
      use(e->symbol, SymbolSpace::Nominal);
      register_expr(e->lhs);
      break;
    case NodeTag::Diamond:
      use(e->symbol, SymbolSpace::Modality);
      register_expr(e->lhs);
      break;
    case NodeTag::Compare:
      use(e->symbol, SymbolSpace::Comparison);
      register_expr(e->left);
      register_expr(e->right);
      break;
  }
}

std::string SymbolTable::fresh() {
  for (;;) {
    std::string name = "_n" + std::to_string(counter_++);
    if (!known(name)) {
      spaces_.emplace(name, SymbolSpace::Nominal);
      return name;
    }
  }
}

std::string fresh_nominal(const std::set<std::string>& avoid, std::size_t& hint) {
  for (;;) {
    std::string name = "_n" + std::to_string(hint++);
    if (!avoid.count(name)) return name;
  }
}

}  // namespace hxp
