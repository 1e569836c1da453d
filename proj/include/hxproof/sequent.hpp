#ifndef HXPROOF_SEQUENT_HPP_
#define HXPROOF_SEQUENT_HPP_

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hxproof/syntax.hpp"

namespace hxp {

enum class Side { Left, Right };

class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonical sorted, duplicate-free list of restricted node expressions.
class Cedent {
 public:
  Cedent() = default;
  explicit Cedent(std::vector<Node> items);

  const std::vector<Node>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool contains(const Node& e) const;
  Cedent with(const Node& e) const;
  Cedent without(const Node& e) const;
  Cedent united(const Cedent& other) const;
  bool subset_of(const Cedent& other) const;

  friend bool operator==(const Cedent& a, const Cedent& b);

 private:
  std::vector<Node> items_;
};

// Γ ⊢ Δ over expressions of the form @_i φ or ⟨i: ▲ j:⟩.
class Sequent {
 public:
  Sequent() = default;
  Sequent(Cedent ante, Cedent succ);
  Sequent(std::vector<Node> ante, std::vector<Node> succ)
      : Sequent(Cedent(std::move(ante)), Cedent(std::move(succ))) {}

  const Cedent& ante() const { return ante_; }
  const Cedent& succ() const { return succ_; }
  const Cedent& side(Side s) const { return s == Side::Left ? ante_ : succ_; }

  bool has(Side s, const Node& e) const { return side(s).contains(e); }
  Sequent with(Side s, const Node& e) const;
  Sequent without(Side s, const Node& e) const;

  std::set<std::string> nominals() const;
  Signature signature() const;

  // Both sides of `*this` included in the corresponding sides of `other`.
  bool subsumed_by(const Sequent& other) const;

  friend bool operator==(const Sequent& a, const Sequent& b) {
    return a.ante_ == b.ante_ && a.succ_ == b.succ_;
  }
  friend bool operator!=(const Sequent& a, const Sequent& b) { return !(a == b); }

 private:
  Cedent ante_, succ_;
};

void require_restricted(const Node& e);

}  // namespace hxp

#endif  // HXPROOF_SEQUENT_HPP_
