#include "belfl/propcore.hpp"

#include <algorithm>
#include <set>

#include "belfl/error.hpp"

namespace belfl {

Vocabulary::Vocabulary(std::vector<std::string> names, std::size_t max_vars)
    : names_(std::move(names)) {
  if (names_.empty()) throw Error("vocabulary must declare at least one variable");
  max_vars = std::min(max_vars, kAbsoluteMaxVars);
  if (names_.size() > max_vars) {
    throw CapExceededError("vocabulary has " + std::to_string(names_.size()) +
                           " variables; the cap is " + std::to_string(max_vars));
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error("empty variable name");
    if (!seen.insert(n).second) throw Error("duplicate variable '" + n + "'");
  }
}

std::optional<std::size_t> Vocabulary::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::string Vocabulary::describe_world(std::size_t world) const {
  std::string out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out += ',';
    out += names_[i];
    out += ((world >> i) & 1U) ? "=1" : "=0";
  }
  return out;
}

std::vector<std::size_t> WorldSet::worlds() const {
  std::vector<std::size_t> out;
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return out;
}

// --- PropFormula -----------------------------------------------------------

PropFormula PropFormula::var(std::size_t index) {
  return PropFormula(std::make_shared<const Node>(Node{PropOp::Var, index, nullptr, nullptr}));
}

PropFormula PropFormula::falsum() {
  return PropFormula(std::make_shared<const Node>(Node{PropOp::False, 0, nullptr, nullptr}));
}

PropFormula PropFormula::verum() {
  return PropFormula(std::make_shared<const Node>(Node{PropOp::True, 0, nullptr, nullptr}));
}

PropFormula PropFormula::negation(PropFormula operand) {
  return PropFormula(std::make_shared<const Node>(
      Node{PropOp::Not, 0, std::make_shared<const PropFormula>(std::move(operand)), nullptr}));
}

PropFormula PropFormula::binary(PropOp op, PropFormula lhs, PropFormula rhs) {
  return PropFormula(std::make_shared<const Node>(
      Node{op, 0, std::make_shared<const PropFormula>(std::move(lhs)),
           std::make_shared<const PropFormula>(std::move(rhs))}));
}

PropFormula PropFormula::conjunction(PropFormula lhs, PropFormula rhs) {
  return binary(PropOp::And, std::move(lhs), std::move(rhs));
}
PropFormula PropFormula::disjunction(PropFormula lhs, PropFormula rhs) {
  return binary(PropOp::Or, std::move(lhs), std::move(rhs));
}
PropFormula PropFormula::implication(PropFormula lhs, PropFormula rhs) {
  return binary(PropOp::Implies, std::move(lhs), std::move(rhs));
}
PropFormula PropFormula::equivalence(PropFormula lhs, PropFormula rhs) {
  return binary(PropOp::Iff, std::move(lhs), std::move(rhs));
}

std::size_t PropFormula::var_bound() const {
  switch (op()) {
    case PropOp::Var: return var_index() + 1;
    case PropOp::False:
    case PropOp::True: return 0;
    case PropOp::Not: return operand().var_bound();
    default: return std::max(lhs().var_bound(), rhs().var_bound());
  }
}

bool operator==(const PropFormula& a, const PropFormula& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op()) return false;
  switch (a.op()) {
    case PropOp::Var: return a.var_index() == b.var_index();
    case PropOp::False:
    case PropOp::True: return true;
    case PropOp::Not: return a.operand() == b.operand();
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

// --- Semantics -------------------------------------------------------------

bool evaluate(const PropFormula& f, std::size_t world) {
  switch (f.op()) {
    case PropOp::Var: return (world >> f.var_index()) & 1U;
    case PropOp::False: return false;
    case PropOp::True: return true;
    case PropOp::Not: return !evaluate(f.operand(), world);
    case PropOp::And: return evaluate(f.lhs(), world) && evaluate(f.rhs(), world);
    case PropOp::Or: return evaluate(f.lhs(), world) || evaluate(f.rhs(), world);
    case PropOp::Implies: return !evaluate(f.lhs(), world) || evaluate(f.rhs(), world);
    case PropOp::Iff: return evaluate(f.lhs(), world) == evaluate(f.rhs(), world);
  }
  return false;
}

WorldSet mod_set(const PropFormula& formula, const Vocabulary& vocab) {
  if (formula.var_bound() > vocab.size()) {
    throw Error("formula uses a variable outside the vocabulary");
  }
  std::uint64_t bits = 0;
  for (std::size_t w = 0; w < vocab.world_count(); ++w) {
    if (evaluate(formula, w)) bits |= std::uint64_t{1} << w;
  }
  return WorldSet(bits);
}

PropFormula minterm(std::size_t world, const Vocabulary& vocab) {
  if (world >= vocab.world_count()) throw Error("world index out of range");
  std::optional<PropFormula> acc;
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    PropFormula literal = ((world >> i) & 1U)
                              ? PropFormula::var(i)
                              : PropFormula::negation(PropFormula::var(i));
    acc = acc ? PropFormula::conjunction(std::move(*acc), std::move(literal))
              : std::move(literal);
  }
  return *acc;
}

PropFormula formula_of_set(WorldSet worlds, const Vocabulary& vocab) {
  if (!worlds.subset_of(WorldSet::full(vocab.world_count()))) {
    throw Error("world set exceeds the vocabulary's worlds");
  }
  std::optional<PropFormula> acc;
  for (std::size_t w : worlds.worlds()) {
    PropFormula term = minterm(w, vocab);
    acc = acc ? PropFormula::disjunction(std::move(*acc), std::move(term)) : std::move(term);
  }
  return acc ? *acc : PropFormula::falsum();
}

// --- Printing --------------------------------------------------------------

namespace {

const char* prop_symbol(PropOp op) {
  switch (op) {
    case PropOp::And: return " & ";
    case PropOp::Or: return " | ";
    case PropOp::Implies: return " -> ";
    case PropOp::Iff: return " <-> ";
    default: return "?";
  }
}

bool is_binary(PropOp op) {
  return op == PropOp::And || op == PropOp::Or || op == PropOp::Implies || op == PropOp::Iff;
}

std::string print_child(const PropFormula& f, const Vocabulary& vocab) {
  std::string s = to_string(f, vocab);
  return is_binary(f.op()) ? "(" + s + ")" : s;
}

}  // namespace

std::string to_string(const PropFormula& f, const Vocabulary& vocab) {
  switch (f.op()) {
    case PropOp::Var: return vocab.name(f.var_index());
    case PropOp::False: return "0";
    case PropOp::True: return "1";
    case PropOp::Not: return "!" + print_child(f.operand(), vocab);
    default:
      return print_child(f.lhs(), vocab) + prop_symbol(f.op()) + print_child(f.rhs(), vocab);
  }
}

}  // namespace belfl
