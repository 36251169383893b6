#include "belfl/pformula.hpp"

#include <algorithm>

#include "belfl/error.hpp"

namespace belfl {

// --- Truth functions -------------------------------------------------------

Rational luk_apply(LukOp op, const Rational& x) {
  if (op != LukOp::Not) throw Error("binary connective applied to one argument");
  return 1 - x;
}

Rational luk_apply(LukOp op, const Rational& x, const Rational& y) {
  switch (op) {
    case LukOp::Implies: return std::min(Rational(1), Rational(1 - x + y));
    case LukOp::StrongOr: return std::min(Rational(1), Rational(x + y));
    case LukOp::StrongAnd: return std::max(Rational(0), Rational(x + y - 1));
    case LukOp::Minus: return std::max(Rational(0), Rational(x - y));
    case LukOp::Iff: return 1 - abs(Rational(x - y));
    case LukOp::WeakAnd: return std::min(x, y);
    case LukOp::WeakOr: return std::max(x, y);
    case LukOp::Not: break;
  }
  throw Error("negation applied to two arguments");
}

Rational luk_apply(LukOp op, std::span<const Rational> args) {
  if (args.size() == 1) return luk_apply(op, args[0]);
  if (args.size() == 2) return luk_apply(op, args[0], args[1]);
  throw Error("connectives take one or two arguments");
}

// --- Construction ----------------------------------------------------------

PFormula PFormula::atom(MelFormula formula) {
  Node n;
  n.kind = PKind::Atom;
  n.mel = std::make_shared<const MelFormula>(std::move(formula));
  return PFormula(std::make_shared<const Node>(std::move(n)));
}

PFormula PFormula::belief(PropFormula formula) {
  return atom(MelFormula::box(std::move(formula)));
}

PFormula PFormula::constant(Rational value) {
  if (!in_unit_interval(value)) {
    throw ConstantRangeError("truth constant " + to_string(value) + " outside [0,1]", 0);
  }
  Node n;
  n.kind = PKind::Const;
  n.value = std::move(value);
  return PFormula(std::make_shared<const Node>(std::move(n)));
}

PFormula PFormula::negation(PFormula operand) {
  Node n;
  n.kind = PKind::Connective;
  n.lhs = std::make_shared<const PFormula>(std::move(operand));
  return PFormula(std::make_shared<const Node>(std::move(n)));
}

PFormula PFormula::binary(LukOp op, PFormula lhs, PFormula rhs) {
  if (op == LukOp::Not) throw Error("negation is unary");
  Node n;
  n.kind = PKind::Connective;
  n.op = op;
  n.lhs = std::make_shared<const PFormula>(std::move(lhs));
  n.rhs = std::make_shared<const PFormula>(std::move(rhs));
  return PFormula(std::make_shared<const Node>(std::move(n)));
}

bool operator==(const PFormula& a, const PFormula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case PKind::Atom: return a.mel() == b.mel();
    case PKind::Const: return a.value() == b.value();
    case PKind::Connective:
      if (a.op() != b.op()) return false;
      if (a.op() == LukOp::Not) return a.operand() == b.operand();
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

// --- Normal form over {->, 0} -----------------------------------------------

namespace {

PFormula imp(PFormula a, PFormula b) { return PFormula::implication(std::move(a), std::move(b)); }
PFormula neg(PFormula a) { return imp(std::move(a), PFormula::constant(0)); }
PFormula oplus(PFormula a, PFormula b) { return imp(neg(std::move(a)), std::move(b)); }
PFormula odot(PFormula a, PFormula b) { return neg(oplus(neg(std::move(a)), neg(std::move(b)))); }
PFormula meet(const PFormula& a, const PFormula& b) { return odot(a, imp(a, b)); }

}  // namespace

PFormula normalize(const PFormula& f) {
  if (f.kind() != PKind::Connective) return f;
  if (f.op() == LukOp::Not) return neg(normalize(f.operand()));
  PFormula x = normalize(f.lhs());
  PFormula y = normalize(f.rhs());
  switch (f.op()) {
    case LukOp::Implies: return imp(x, y);
    case LukOp::StrongOr: return oplus(x, y);
    case LukOp::StrongAnd: return odot(x, y);
    case LukOp::Minus: return odot(x, neg(y));
    case LukOp::Iff: return odot(imp(x, y), imp(y, x));
    case LukOp::WeakAnd: return meet(x, y);
    case LukOp::WeakOr: return neg(meet(neg(x), neg(y)));
    case LukOp::Not: break;
  }
  return f;
}

// --- Evaluation --------------------------------------------------------------

Rational p_eval(const MassFunction& mass, const PFormula& f, const Vocabulary& vocab) {
  switch (f.kind()) {
    case PKind::Atom: return mu_of_mel(mass, f.mel(), vocab);
    case PKind::Const: return f.value();
    case PKind::Connective:
      if (f.op() == LukOp::Not) return luk_apply(LukOp::Not, p_eval(mass, f.operand(), vocab));
      return luk_apply(f.op(), p_eval(mass, f.lhs(), vocab), p_eval(mass, f.rhs(), vocab));
  }
  return 0;
}

// --- Printing ----------------------------------------------------------------

namespace {

const char* luk_symbol(LukOp op) {
  switch (op) {
    case LukOp::Implies: return " -> ";
    case LukOp::StrongOr: return " (+) ";
    case LukOp::StrongAnd: return " && ";
    case LukOp::Minus: return " (-) ";
    case LukOp::Iff: return " <-> ";
    case LukOp::WeakAnd: return " /\\ ";
    case LukOp::WeakOr: return " \\/ ";
    case LukOp::Not: return "!";
  }
  return "?";
}

std::string p_child(const PFormula& f, const Vocabulary& vocab) {
  std::string s = to_string(f, vocab);
  const bool binary = f.kind() == PKind::Connective && f.op() != LukOp::Not;
  return binary ? "(" + s + ")" : s;
}

}  // namespace

std::string to_string(const PFormula& f, const Vocabulary& vocab) {
  switch (f.kind()) {
    case PKind::Atom:
      if (f.mel().op() == MelOp::Box) return "B(" + to_string(f.mel().body(), vocab) + ")";
      return "P(" + to_string(f.mel(), vocab) + ")";
    case PKind::Const: {
      // Integers print bare so that 0/1 read naturally inside formulas.
      const Rational& v = f.value();
      return v.get_den() == 1 ? v.get_num().get_str() : to_string(v);
    }
    case PKind::Connective:
      if (f.op() == LukOp::Not) return "!" + p_child(f.operand(), vocab);
      return p_child(f.lhs(), vocab) + luk_symbol(f.op()) + p_child(f.rhs(), vocab);
  }
  return {};
}

// --- Axiom suite -------------------------------------------------------------

bool AxiomReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AxiomCheck& c) { return c.value == 1; });
}

std::vector<AxiomCheck> AxiomReport::failures() const {
  std::vector<AxiomCheck> out;
  std::copy_if(checks.begin(), checks.end(), std::back_inserter(out),
               [](const AxiomCheck& c) { return c.value != 1; });
  return out;
}

AxiomReport axiom_suite(const MassFunction& mass, const Vocabulary& vocab,
                        std::span<const MelFormula> mel_pool,
                        std::span<const PropFormula> prop_pool) {
  AxiomReport report;
  auto check = [&](const char* scheme, const PFormula& instance) {
    report.checks.push_back({scheme, to_string(instance, vocab), p_eval(mass, instance, vocab)});
  };
  using M = MelFormula;
  const auto P = [](const M& f) { return PFormula::atom(f); };
  const auto B = [](const PropFormula& f) { return PFormula::belief(f); };
  const auto L = [](LukOp op, PFormula a, PFormula b) {
    return PFormula::binary(op, std::move(a), std::move(b));
  };

  // FP0 over MEL validities, plus K, D and Nec instances.
  for (const auto& phi : mel_pool) {
    if (mel_valid(phi, vocab)) check("FP0", P(phi));
  }
  for (const auto& a : prop_pool) {
    if (mod_set(a, vocab) == WorldSet::full(vocab.world_count())) check("Nec", P(M::box(a)));
    check("Nec", P(M::box(PropFormula::disjunction(a, PropFormula::negation(a)))));
    check("D", P(M::implication(M::box(a), M::diamond(a))));
    for (const auto& b : prop_pool) {
      check("K", P(M::implication(M::box(PropFormula::implication(a, b)),
                                  M::implication(M::box(a), M::box(b)))));
      // B-level analogue of K.
      check("BK", L(LukOp::Implies, B(PropFormula::implication(a, b)),
                    L(LukOp::Implies, B(a), B(b))));
      check("BoxOr", L(LukOp::Implies, P(M::disjunction(M::box(a), M::box(b))),
                       P(M::box(PropFormula::disjunction(a, b)))));
      for (const auto& c : prop_pool) {
        check("BoxOr3",
              L(LukOp::Implies,
                P(M::disjunction(M::disjunction(M::box(a), M::box(b)), M::box(c))),
                P(M::box(PropFormula::disjunction(PropFormula::disjunction(a, b), c)))));
      }
    }
  }

  for (const auto& x : mel_pool) {
    check("FP2", L(LukOp::Iff, P(M::negation(x)), PFormula::negation(P(x))));
    for (const auto& y : mel_pool) {
      check("FP1", L(LukOp::Implies, P(M::implication(x, y)),
                     L(LukOp::Implies, P(x), P(y))));
      check("FP3", L(LukOp::Iff, P(M::disjunction(x, y)),
                     L(LukOp::Implies, L(LukOp::Implies, P(x), P(M::conjunction(x, y))), P(y))));
      check("FP3+", L(LukOp::Iff, P(M::disjunction(x, y)),
                      L(LukOp::StrongOr, P(x), L(LukOp::Minus, P(y), P(M::conjunction(x, y))))));
      // Both right-hand sides of FP3 agree.
      check("FP3=", L(LukOp::Iff,
                      L(LukOp::Implies, L(LukOp::Implies, P(x), P(M::conjunction(x, y))), P(y)),
                      L(LukOp::StrongOr, P(x), L(LukOp::Minus, P(y), P(M::conjunction(x, y))))));
    }
  }
  return report;
}

}  // namespace belfl
