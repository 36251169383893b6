#include "belfl/entail.hpp"

#include <stdexcept>

#include "belfl/error.hpp"

namespace belfl {

namespace {

using lp::LinearExpr;
using lp::Sense;
using lp::VarId;

// Every Lukasiewicz truth function is a truncation or a min/max of linear
// terms over [0,1]; each truncation costs one binary with big-M = 1.
class Encoder {
 public:
  Encoder(const Vocabulary& vocab, Encoding& out) : vocab_(vocab), out_(out) {}

  void add_masses(ModelClass model_class) {
    const std::uint64_t count = std::uint64_t{1} << vocab_.world_count();
    LinearExpr total;
    for (std::uint64_t bits = 1; bits < count; ++bits) {
      const WorldSet e(bits);
      std::optional<Rational> upper;
      if (model_class == ModelClass::Probability && e.size() > 1) upper = Rational(0);
      VarId m = out_.milp.add_continuous("m_" + std::to_string(bits), 0, upper);
      out_.mass_vars.emplace(e, m);
      total += m;
    }
    out_.milp.add_constraint(total, Sense::Equal, 1, "normalization");

    if (model_class == ModelClass::Necessity) {
      for (const auto& [e, m] : out_.mass_vars) {
        VarId y = out_.milp.add_binary("y_" + std::to_string(e.bits()));
        out_.chain_indicators.emplace(e, y);
        out_.milp.add_constraint(LinearExpr(m) - y, Sense::LessEq, 0,
                                 "focal_" + std::to_string(e.bits()));
      }
      for (auto a = out_.chain_indicators.begin(); a != out_.chain_indicators.end(); ++a) {
        for (auto b = std::next(a); b != out_.chain_indicators.end(); ++b) {
          if (a->first.subset_of(b->first) || b->first.subset_of(a->first)) continue;
          out_.milp.add_constraint(LinearExpr(a->second) + b->second, Sense::LessEq, 1,
                                   "chain_" + std::to_string(a->first.bits()) + "_" +
                                       std::to_string(b->first.bits()));
        }
      }
    }
  }

  LinearExpr value(const PFormula& f) {
    switch (f.kind()) {
      case PKind::Const: return LinearExpr(f.value());
      case PKind::Atom: return atom(f.mel());
      case PKind::Connective: break;
    }
    const std::string key = to_string(f, vocab_);
    if (auto it = compound_cache_.find(key); it != compound_cache_.end()) return it->second;

    LinearExpr result;
    if (f.op() == LukOp::Not) {
      result = LinearExpr(Rational(1)) - value(f.operand());
    } else {
      LinearExpr x = value(f.lhs());
      LinearExpr y = value(f.rhs());
      if (x.is_constant() && y.is_constant()) {
        result = LinearExpr(luk_apply(f.op(), x.constant(), y.constant()));
      } else {
        switch (f.op()) {
          case LukOp::Implies: result = cap_at_one(LinearExpr(Rational(1)) - x + y); break;
          case LukOp::StrongOr: result = cap_at_one(x + y); break;
          case LukOp::StrongAnd: result = floor_at_zero(x + y - LinearExpr(Rational(1))); break;
          case LukOp::Minus: result = floor_at_zero(x - y); break;
          case LukOp::Iff:
            // One of the two implications is always 1, so their strong
            // conjunction is their sum minus 1.
            result = cap_at_one(LinearExpr(Rational(1)) - x + y) +
                     cap_at_one(LinearExpr(Rational(1)) - y + x) - LinearExpr(Rational(1));
            break;
          case LukOp::WeakAnd: result = select(x, y, /*minimum=*/true); break;
          case LukOp::WeakOr: result = select(x, y, /*minimum=*/false); break;
          case LukOp::Not: break;
        }
      }
    }
    compound_cache_.emplace(key, result);
    return result;
  }

 private:
  LinearExpr atom(const MelFormula& phi) {
    std::vector<bool> models = mel_models(phi, vocab_);
    if (auto it = atom_cache_.find(models); it != atom_cache_.end()) return it->second;
    VarId a = out_.milp.add_continuous("a_" + std::to_string(atom_cache_.size()), 0, Rational(1));
    LinearExpr def(a);
    for (const auto& [e, m] : out_.mass_vars) {
      if (models[e.bits()]) def.add_term(m, -1);
    }
    out_.milp.add_constraint(def, Sense::Equal, 0, "atom_" + to_string(phi, vocab_));
    atom_cache_.emplace(std::move(models), LinearExpr(a));
    return LinearExpr(a);
  }

  VarId fresh_value() {
    return out_.milp.add_continuous("t_" + std::to_string(counter_++), 0, Rational(1));
  }
  VarId fresh_binary() { return out_.milp.add_binary("b_" + std::to_string(counter_++)); }

  // t = min(1, s) for s in [0,2].
  LinearExpr cap_at_one(const LinearExpr& s) {
    if (s.is_constant()) return LinearExpr(std::min(Rational(1), s.constant()));
    VarId t = fresh_value();
    VarId b = fresh_binary();
    out_.milp.add_constraint(LinearExpr(t) - s, Sense::LessEq, 0);
    out_.milp.add_constraint(LinearExpr(t) - s + b, Sense::GreaterEq, 0);
    out_.milp.add_constraint(LinearExpr(t) - b, Sense::GreaterEq, 0);
    return LinearExpr(t);
  }

  // t = max(0, s) for s in [-1,1].
  LinearExpr floor_at_zero(const LinearExpr& s) {
    if (s.is_constant()) return LinearExpr(std::max(Rational(0), s.constant()));
    VarId t = fresh_value();
    VarId b = fresh_binary();
    out_.milp.add_constraint(LinearExpr(t) - s, Sense::GreaterEq, 0);
    out_.milp.add_constraint(LinearExpr(t) - s - b, Sense::LessEq, 0);
    out_.milp.add_constraint(LinearExpr(t) + b, Sense::LessEq, 1);
    return LinearExpr(t);
  }

  // t = min(x, y) or max(x, y); b selects which argument is attained.
  LinearExpr select(const LinearExpr& x, const LinearExpr& y, bool minimum) {
    VarId t = fresh_value();
    VarId b = fresh_binary();
    if (minimum) {
      out_.milp.add_constraint(LinearExpr(t) - x, Sense::LessEq, 0);
      out_.milp.add_constraint(LinearExpr(t) - y, Sense::LessEq, 0);
      out_.milp.add_constraint(LinearExpr(t) - x + b, Sense::GreaterEq, 0);
      out_.milp.add_constraint(LinearExpr(t) - y - b, Sense::GreaterEq, -1);
    } else {
      out_.milp.add_constraint(LinearExpr(t) - x, Sense::GreaterEq, 0);
      out_.milp.add_constraint(LinearExpr(t) - y, Sense::GreaterEq, 0);
      out_.milp.add_constraint(LinearExpr(t) - x - b, Sense::LessEq, 0);
      out_.milp.add_constraint(LinearExpr(t) - y + b, Sense::LessEq, 1);
    }
    return LinearExpr(t);
  }

  const Vocabulary& vocab_;
  Encoding& out_;
  std::map<std::vector<bool>, LinearExpr> atom_cache_;
  std::map<std::string, LinearExpr> compound_cache_;
  std::size_t counter_ = 0;
};

MassFunction extract_mass(const Encoding& enc, const lp::SolveResult& result,
                          std::size_t world_count) {
  std::map<WorldSet, Rational> masses;
  for (const auto& [e, var] : enc.mass_vars) {
    const Rational& v = result.assignment[var.index];
    if (v != 0) masses.emplace(e, v);
  }
  return MassFunction(world_count, std::move(masses));
}

// Re-evaluates the MILP answer with the direct semantics.
void verify_model(const Theory& theory, const PFormula& query, const Vocabulary& vocab,
                  const MassFunction& mass, const Rational& query_value) {
  if (!conforms(mass, theory.model_class)) {
    throw std::logic_error("MILP model violates the " + to_string(theory.model_class) +
                           " class");
  }
  for (const auto& f : theory.formulas) {
    if (p_eval(mass, f, vocab) != 1) {
      throw std::logic_error("MILP model does not satisfy " + to_string(f, vocab));
    }
  }
  if (p_eval(mass, query, vocab) != query_value) {
    throw std::logic_error("MILP optimum disagrees with direct evaluation of " +
                           to_string(query, vocab));
  }
}

}  // namespace

Encoding encode(const Theory& theory, const PFormula& query, const Vocabulary& vocab) {
  require_enumerable(vocab);
  Encoding enc;
  Encoder encoder(vocab, enc);
  encoder.add_masses(theory.model_class);
  for (std::size_t i = 0; i < theory.formulas.size(); ++i) {
    enc.milp.add_constraint(encoder.value(theory.formulas[i]), lp::Sense::Equal, 1,
                            "theory_" + std::to_string(i));
  }
  enc.query_value = encoder.value(query);
  enc.milp.set_objective(enc.query_value, lp::Direction::Minimize);
  return enc;
}

EntailmentVerdict entails(const Theory& theory, const PFormula& query, const Vocabulary& vocab,
                          const EntailOptions& options) {
  Encoding enc = encode(theory, query, vocab);
  lp::SolveResult result = lp::solve_milp(enc.milp, options.solver);
  EntailmentVerdict verdict;
  if (result.status != lp::Status::Optimal) {
    verdict.valid = true;
    verdict.inconsistent = true;
    verdict.truth_degree = 1;
    return verdict;
  }
  verdict.truth_degree = result.optimum;
  verdict.valid = result.optimum == 1;
  MassFunction model = extract_mass(enc, result, vocab.world_count());
  verify_model(theory, query, vocab, model, result.optimum);
  if (!verdict.valid) verdict.countermodel = std::move(model);
  return verdict;
}

TruthDegree truth_degree(const Theory& theory, const PFormula& query, const Vocabulary& vocab,
                         const EntailOptions& options) {
  Encoding enc = encode(theory, query, vocab);
  lp::SolveResult result = lp::solve_milp(enc.milp, options.solver);
  if (result.status != lp::Status::Optimal) {
    throw InconsistentTheoryError("the theory has no " + to_string(theory.model_class) +
                                  " belief-function model");
  }
  MassFunction witness = extract_mass(enc, result, vocab.world_count());
  verify_model(theory, query, vocab, witness, result.optimum);
  return {result.optimum, std::move(witness)};
}

std::optional<MassFunction> find_model(const Theory& theory, const Vocabulary& vocab,
                                       const EntailOptions& options) {
  try {
    return truth_degree(theory, PFormula::constant(1), vocab, options).witness;
  } catch (const InconsistentTheoryError&) {
    return std::nullopt;
  }
}

GradedMpReport check_graded_mp(const Rational& r, const Rational& s, const PropFormula& phi,
                               const PropFormula& psi, ModelClass model_class,
                               const Vocabulary& vocab, const EntailOptions& options) {
  Theory theory;
  theory.model_class = model_class;
  theory.formulas.push_back(PFormula::implication(PFormula::constant(r), PFormula::belief(phi)));
  theory.formulas.push_back(PFormula::implication(
      PFormula::constant(s), PFormula::belief(PropFormula::implication(phi, psi))));

  GradedMpReport report;
  report.lukasiewicz_bound = std::max(Rational(0), Rational(r + s - 1));
  report.min_bound = std::min(r, s);
  auto conclusion = [&](const Rational& bound) {
    return PFormula::implication(PFormula::constant(bound), PFormula::belief(psi));
  };
  report.lukasiewicz_valid = entails(theory, conclusion(report.lukasiewicz_bound), vocab, options).valid;
  EntailmentVerdict at_min = entails(theory, conclusion(report.min_bound), vocab, options);
  report.min_valid = at_min.valid;
  report.min_countermodel = std::move(at_min.countermodel);
  report.class_bound =
      model_class == ModelClass::Necessity ? report.min_bound : report.lukasiewicz_bound;
  report.degree = truth_degree(theory, PFormula::belief(psi), vocab, options).value;
  report.tight = report.degree == report.class_bound;
  return report;
}

}  // namespace belfl
