#include "hxproof/sequent.hpp"

#include <algorithm>

#include "hxproof/printer.hpp"

namespace hxp {

void require_restricted(const Node& e) {
  if (!e || !is_restricted(e))
    throw ShapeError("sequent member must be @_i φ or ⟨i: ▲ j:⟩: " +
                     (e ? print_node(e) : std::string("<null>")));
}

Cedent::Cedent(std::vector<Node> items) : items_(std::move(items)) {
  for (const auto& e : items_) require_restricted(e);
  std::sort(items_.begin(), items_.end(), NodeLess{});
  items_.erase(std::unique(items_.begin(), items_.end(),
                           [](const Node& a, const Node& b) { return equal(a, b); }),
               items_.end());
}

bool Cedent::contains(const Node& e) const {
  return std::binary_search(items_.begin(), items_.end(), e, NodeLess{});
}

Cedent Cedent::with(const Node& e) const {
  require_restricted(e);
  Cedent out = *this;
  auto it = std::lower_bound(out.items_.begin(), out.items_.end(), e, NodeLess{});
  if (it == out.items_.end() || !equal(*it, e)) out.items_.insert(it, e);
  return out;
}

Cedent Cedent::without(const Node& e) const {
  Cedent out = *this;
  auto it = std::lower_bound(out.items_.begin(), out.items_.end(), e, NodeLess{});
  if (it != out.items_.end() && equal(*it, e)) out.items_.erase(it);
  return out;
}

Cedent Cedent::united(const Cedent& other) const {
  Cedent out;
  out.items_.reserve(items_.size() + other.items_.size());
  std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                 std::back_inserter(out.items_), NodeLess{});
  return out;
}

bool Cedent::subset_of(const Cedent& other) const {
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end(),
                       NodeLess{});
}

bool operator==(const Cedent& a, const Cedent& b) {
  if (a.items_.size() != b.items_.size()) return false;
  for (std::size_t k = 0; k < a.items_.size(); ++k)
    if (!equal(a.items_[k], b.items_[k])) return false;
  return true;
}

Sequent::Sequent(Cedent ante, Cedent succ) : ante_(std::move(ante)), succ_(std::move(succ)) {}

Sequent Sequent::with(Side s, const Node& e) const {
  Sequent out = *this;
  (s == Side::Left ? out.ante_ : out.succ_) = side(s).with(e);
  return out;
}

Sequent Sequent::without(Side s, const Node& e) const {
  Sequent out = *this;
  (s == Side::Left ? out.ante_ : out.succ_) = side(s).without(e);
  return out;
}

std::set<std::string> Sequent::nominals() const {
  std::set<std::string> out;
  for (const auto& e : ante_) collect_nominals(e, out);
  for (const auto& e : succ_) collect_nominals(e, out);
  return out;
}

Signature Sequent::signature() const {
  Signature sig;
  for (const auto& e : ante_) sig.add(e);
  for (const auto& e : succ_) sig.add(e);
  return sig;
}

bool Sequent::subsumed_by(const Sequent& other) const {
  return ante_.subset_of(other.ante_) && succ_.subset_of(other.succ_);
}

}  // namespace hxp
