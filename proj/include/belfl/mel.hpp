#pragma once

// Minimal epistemic logic: Boolean combinations of boxed propositional
// formulas, evaluated on non-empty world sets (epistemic models).

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "belfl/propcore.hpp"

namespace belfl {

enum class MelOp { Box, Not, And, Or, Implies, Iff };

/// Immutable MEL formula. Atoms are exactly boxed propositional formulas,
/// so nested modalities cannot be built. Diamond is Not(Box(Not phi)).
class MelFormula {
 public:
  static MelFormula box(PropFormula body);
  static MelFormula diamond(PropFormula body);
  static MelFormula negation(MelFormula operand);
  static MelFormula conjunction(MelFormula lhs, MelFormula rhs);
  static MelFormula disjunction(MelFormula lhs, MelFormula rhs);
  static MelFormula implication(MelFormula lhs, MelFormula rhs);
  static MelFormula equivalence(MelFormula lhs, MelFormula rhs);
  static MelFormula binary(MelOp op, MelFormula lhs, MelFormula rhs);

  MelOp op() const { return node_->op; }
  /// Body of a Box atom.
  const PropFormula& body() const { return *node_->body; }
  const MelFormula& operand() const { return *node_->lhs; }
  const MelFormula& lhs() const { return *node_->lhs; }
  const MelFormula& rhs() const { return *node_->rhs; }

  friend bool operator==(const MelFormula& a, const MelFormula& b);

 private:
  struct Node {
    MelOp op;
    std::shared_ptr<const PropFormula> body;
    std::shared_ptr<const MelFormula> lhs;
    std::shared_ptr<const MelFormula> rhs;
  };
  explicit MelFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// A consistent epistemic state: a non-empty world set.
class EpistemicModel {
 public:
  /// Throws belfl::Error when `worlds` is empty.
  explicit EpistemicModel(WorldSet worlds);
  WorldSet worlds() const { return worlds_; }

 private:
  WorldSet worlds_;
};

/// E |= Phi, with E |= []phi iff E is a subset of Mod(phi).
bool mel_sat(const EpistemicModel& model, const MelFormula& formula,
             const Vocabulary& vocab);

/// Membership vector over all world-set masks: entry E is true iff E is
/// non-empty and E |= Phi. Entry 0 (the empty set) is always false.
std::vector<bool> mel_models(const MelFormula& formula, const Vocabulary& vocab);

/// True iff every epistemic model satisfies Phi.
bool mel_valid(const MelFormula& formula, const Vocabulary& vocab);

struct MelConsequence {
  bool holds = false;
  /// Smallest model (in ascending mask order) satisfying the premises but
  /// not the conclusion.
  std::optional<WorldSet> countermodel;
};

MelConsequence mel_consequence(const std::vector<MelFormula>& premises,
                               const MelFormula& conclusion,
                               const Vocabulary& vocab);

/// Sigma_E = []phi_E & /\_{w in E} ![](phi_E & !sigma_w); its only model is E.
MelFormula characteristic_formula(const EpistemicModel& model,
                                  const Vocabulary& vocab);

std::string to_string(const MelFormula& formula, const Vocabulary& vocab);

MelFormula parse_mel(std::string_view text, const Vocabulary& vocab);

/// Throws CapExceededError if 2^|Omega| models cannot be enumerated.
void require_enumerable(const Vocabulary& vocab);

}  // namespace belfl
