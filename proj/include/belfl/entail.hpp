#pragma once

// Semantic entailment and truth degrees for finite theories of P-formulas,
// decided by an exact MILP over mass-assignment variables.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "belfl/belief.hpp"
#include "belfl/lpcore.hpp"
#include "belfl/pformula.hpp"

namespace belfl {

struct Theory {
  std::vector<PFormula> formulas;
  ModelClass model_class = ModelClass::GeneralBelief;
};

struct EntailOptions {
  lp::SolverOptions solver;
};

/// MILP whose feasible points are exactly the class-conforming mass
/// functions satisfying every theory formula, plus the value of the query.
struct Encoding {
  lp::RationalMILP milp;
  /// Mass variable of every non-empty world set (by mask).
  std::map<WorldSet, lp::VarId> mass_vars;
  /// Value of the query formula (the objective, minimised).
  lp::LinearExpr query_value;
  /// Consonance indicators, Necessity class only.
  std::map<WorldSet, lp::VarId> chain_indicators;
};

/// Throws CapExceededError if the vocabulary is too large to enumerate.
Encoding encode(const Theory& theory, const PFormula& query, const Vocabulary& vocab);

struct EntailmentVerdict {
  bool valid = false;
  /// No class-conforming model satisfies the theory; validity is vacuous.
  bool inconsistent = false;
  /// Minimum of the query's value over all models (1 when inconsistent).
  Rational truth_degree;
  std::optional<MassFunction> countermodel;
};

EntailmentVerdict entails(const Theory& theory, const PFormula& query,
                          const Vocabulary& vocab, const EntailOptions& options = {});

struct TruthDegree {
  Rational value;
  MassFunction witness;
};

/// Exact minimum of the query over the theory's models, with a minimiser.
/// Throws InconsistentTheoryError when the theory has no model.
TruthDegree truth_degree(const Theory& theory, const PFormula& query,
                         const Vocabulary& vocab, const EntailOptions& options = {});

/// A model of the theory, if any.
std::optional<MassFunction> find_model(const Theory& theory, const Vocabulary& vocab,
                                       const EntailOptions& options = {});

struct GradedMpReport {
  Rational lukasiewicz_bound;  // max(r+s-1, 0)
  Rational min_bound;          // min(r, s)
  bool lukasiewicz_valid = false;
  bool min_valid = false;
  /// Bound implied by the model class: min for Necessity, else Lukasiewicz.
  Rational class_bound;
  /// Truth degree of B(psi) from the two premises.
  Rational degree;
  /// degree == class_bound.
  bool tight = false;
  std::optional<MassFunction> min_countermodel;
};

/// Premises r -> B(phi), s -> B(phi -> psi); checks both conclusion bounds.
GradedMpReport check_graded_mp(const Rational& r, const Rational& s,
                               const PropFormula& phi, const PropFormula& psi,
                               ModelClass model_class, const Vocabulary& vocab,
                               const EntailOptions& options = {});

}  // namespace belfl
