#pragma once

// Classical propositional layer: vocabularies, worlds, world sets and
// propositional formulas.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace belfl {

/// Ordered list of distinct propositional variables. Variable i is bit i of
/// a world index.
class Vocabulary {
 public:
  static constexpr std::size_t kDefaultMaxVars = 4;
  /// World sets are 64-bit masks, so 2^n must stay <= 64.
  static constexpr std::size_t kAbsoluteMaxVars = 6;

  Vocabulary() = default;
  explicit Vocabulary(std::vector<std::string> names,
                      std::size_t max_vars = kDefaultMaxVars);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// |Omega| = 2^n.
  std::size_t world_count() const { return std::size_t{1} << names_.size(); }

  /// "p=1,q=0" for world index w.
  std::string describe_world(std::size_t world) const;

  bool operator==(const Vocabulary&) const = default;

 private:
  std::vector<std::string> names_;
};

/// A set of world indices, stored as a bitmask (bit w = world w).
class WorldSet {
 public:
  constexpr WorldSet() = default;
  constexpr explicit WorldSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr WorldSet singleton(std::size_t world) {
    return WorldSet(std::uint64_t{1} << world);
  }
  static constexpr WorldSet full(std::size_t world_count) {
    return WorldSet(world_count >= 64 ? ~std::uint64_t{0}
                                      : (std::uint64_t{1} << world_count) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t world) const {
    return (bits_ >> world) & 1U;
  }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool subset_of(WorldSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(WorldSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr WorldSet operator&(WorldSet o) const { return WorldSet(bits_ & o.bits_); }
  constexpr WorldSet operator|(WorldSet o) const { return WorldSet(bits_ | o.bits_); }
  /// Set difference.
  constexpr WorldSet operator-(WorldSet o) const { return WorldSet(bits_ & ~o.bits_); }
  constexpr WorldSet complement(std::size_t world_count) const {
    return full(world_count) - *this;
  }

  std::vector<std::size_t> worlds() const;

  constexpr auto operator<=>(const WorldSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

enum class PropOp { Var, False, True, Not, And, Or, Implies, Iff };

/// Immutable propositional formula over variable indices of a Vocabulary.
class PropFormula {
 public:
  static PropFormula var(std::size_t index);
  static PropFormula falsum();
  static PropFormula verum();
  static PropFormula negation(PropFormula operand);
  static PropFormula conjunction(PropFormula lhs, PropFormula rhs);
  static PropFormula disjunction(PropFormula lhs, PropFormula rhs);
  static PropFormula implication(PropFormula lhs, PropFormula rhs);
  static PropFormula equivalence(PropFormula lhs, PropFormula rhs);
  static PropFormula binary(PropOp op, PropFormula lhs, PropFormula rhs);

  PropOp op() const { return node_->op; }
  std::size_t var_index() const { return node_->var; }
  const PropFormula& operand() const { return *node_->lhs; }
  const PropFormula& lhs() const { return *node_->lhs; }
  const PropFormula& rhs() const { return *node_->rhs; }

  /// Largest variable index used plus one (0 for variable-free formulas).
  std::size_t var_bound() const;

  friend bool operator==(const PropFormula& a, const PropFormula& b);

 private:
  struct Node {
    PropOp op;
    std::size_t var = 0;
    std::shared_ptr<const PropFormula> lhs;
    std::shared_ptr<const PropFormula> rhs;
  };
  explicit PropFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Truth value of `formula` at world index `world`.
bool evaluate(const PropFormula& formula, std::size_t world);

/// Mod(phi): every world of the vocabulary that satisfies the formula.
WorldSet mod_set(const PropFormula& formula, const Vocabulary& vocab);

/// The min-term sigma_w, whose only model is w.
PropFormula minterm(std::size_t world, const Vocabulary& vocab);

/// Disjunction of the min-terms of `worlds`; falsum when empty.
PropFormula formula_of_set(WorldSet worlds, const Vocabulary& vocab);

/// Fully parenthesised-where-needed ASCII rendering that parse_prop accepts.
std::string to_string(const PropFormula& formula, const Vocabulary& vocab);

PropFormula parse_prop(std::string_view text, const Vocabulary& vocab);

/// Identifiers in order of first appearance, skipping the P(...)/B(...)
/// operator keywords. Used when a command line gives no explicit vocabulary.
std::vector<std::string> scan_variables(std::string_view text);

}  // namespace belfl
