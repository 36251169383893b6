#pragma once

// Lukasiewicz combinations of P-atoms over MEL formulas, with rational
// truth constants, evaluated under a mass function.

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "belfl/belief.hpp"
#include "belfl/mel.hpp"
#include "belfl/rational.hpp"

namespace belfl {

/// Lukasiewicz connectives. Implies and the constant 0 are primitive; the
/// rest are definable from them.
enum class LukOp { Not, Implies, StrongAnd, StrongOr, Minus, WeakAnd, WeakOr, Iff };

/// Exact truth function of `op`. Not takes one argument, the rest two.
Rational luk_apply(LukOp op, std::span<const Rational> args);
Rational luk_apply(LukOp op, const Rational& x);
Rational luk_apply(LukOp op, const Rational& x, const Rational& y);

enum class PKind { Atom, Const, Connective };

class PFormula {
 public:
  /// P(Phi).
  static PFormula atom(MelFormula formula);
  /// B(phi), i.e. P([]phi).
  static PFormula belief(PropFormula formula);
  /// Throws ConstantRangeError (position 0) outside [0,1].
  static PFormula constant(Rational value);
  static PFormula negation(PFormula operand);
  static PFormula binary(LukOp op, PFormula lhs, PFormula rhs);
  static PFormula implication(PFormula lhs, PFormula rhs) {
    return binary(LukOp::Implies, std::move(lhs), std::move(rhs));
  }

  PKind kind() const { return node_->kind; }
  LukOp op() const { return node_->op; }
  const MelFormula& mel() const { return *node_->mel; }
  const Rational& value() const { return node_->value; }
  const PFormula& operand() const { return *node_->lhs; }
  const PFormula& lhs() const { return *node_->lhs; }
  const PFormula& rhs() const { return *node_->rhs; }

  friend bool operator==(const PFormula& a, const PFormula& b);

 private:
  struct Node {
    PKind kind = PKind::Const;
    LukOp op = LukOp::Not;
    std::shared_ptr<const MelFormula> mel;
    Rational value;
    std::shared_ptr<const PFormula> lhs;
    std::shared_ptr<const PFormula> rhs;
  };
  explicit PFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Rewrites every derived connective into the primitive base {->, 0}
/// following the standard definitions (!x := x -> 0, x (+) y := !x -> y, ...).
PFormula normalize(const PFormula& formula);

/// Atoms go through mu_of_mel, constants to their value, connectives
/// through luk_apply.
Rational p_eval(const MassFunction& mass, const PFormula& formula,
                const Vocabulary& vocab);

/// Prints B(phi) for P-atoms over a bare box; otherwise P(...).
std::string to_string(const PFormula& formula, const Vocabulary& vocab);

PFormula parse_p(std::string_view text, const Vocabulary& vocab);

struct AxiomCheck {
  std::string scheme;
  std::string instance;
  Rational value;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_hold() const;
  std::vector<AxiomCheck> failures() const;
};

/// Evaluates instances of FP0-FP3 (FP3 in both its implicative and its
/// additive form), the K/D/Nec translations, the B-level K analogue and
/// P(\/[]phi_i) -> P([]\/phi_i) under `mass`. FP0 instances come from the
/// MEL-valid members of `mel_pool` together with K/D/Nec instances over
/// `prop_pool`. Every value should be 1.
AxiomReport axiom_suite(const MassFunction& mass, const Vocabulary& vocab,
                        std::span<const MelFormula> mel_pool,
                        std::span<const PropFormula> prop_pool);

}  // namespace belfl
