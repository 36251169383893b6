#include "belfl/mel.hpp"

#include "belfl/error.hpp"

namespace belfl {

MelFormula MelFormula::box(PropFormula body) {
  return MelFormula(std::make_shared<const Node>(
      Node{MelOp::Box, std::make_shared<const PropFormula>(std::move(body)), nullptr, nullptr}));
}

MelFormula MelFormula::diamond(PropFormula body) {
  return negation(box(PropFormula::negation(std::move(body))));
}

MelFormula MelFormula::negation(MelFormula operand) {
  return MelFormula(std::make_shared<const Node>(
      Node{MelOp::Not, nullptr, std::make_shared<const MelFormula>(std::move(operand)), nullptr}));
}

MelFormula MelFormula::binary(MelOp op, MelFormula lhs, MelFormula rhs) {
  return MelFormula(std::make_shared<const Node>(
      Node{op, nullptr, std::make_shared<const MelFormula>(std::move(lhs)),
           std::make_shared<const MelFormula>(std::move(rhs))}));
}

MelFormula MelFormula::conjunction(MelFormula lhs, MelFormula rhs) {
  return binary(MelOp::And, std::move(lhs), std::move(rhs));
}
MelFormula MelFormula::disjunction(MelFormula lhs, MelFormula rhs) {
  return binary(MelOp::Or, std::move(lhs), std::move(rhs));
}
MelFormula MelFormula::implication(MelFormula lhs, MelFormula rhs) {
  return binary(MelOp::Implies, std::move(lhs), std::move(rhs));
}
MelFormula MelFormula::equivalence(MelFormula lhs, MelFormula rhs) {
  return binary(MelOp::Iff, std::move(lhs), std::move(rhs));
}

bool operator==(const MelFormula& a, const MelFormula& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op()) return false;
  switch (a.op()) {
    case MelOp::Box: return a.body() == b.body();
    case MelOp::Not: return a.operand() == b.operand();
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

EpistemicModel::EpistemicModel(WorldSet worlds) : worlds_(worlds) {
  if (worlds.empty()) throw Error("epistemic models must be non-empty");
}

void require_enumerable(const Vocabulary& vocab) {
  if (vocab.world_count() > 16) {
    throw CapExceededError("epistemic-model enumeration needs at most 4 variables");
  }
}

namespace {

bool sat(WorldSet e, const MelFormula& f, const Vocabulary& vocab) {
  switch (f.op()) {
    case MelOp::Box: return e.subset_of(mod_set(f.body(), vocab));
    case MelOp::Not: return !sat(e, f.operand(), vocab);
    case MelOp::And: return sat(e, f.lhs(), vocab) && sat(e, f.rhs(), vocab);
    case MelOp::Or: return sat(e, f.lhs(), vocab) || sat(e, f.rhs(), vocab);
    case MelOp::Implies: return !sat(e, f.lhs(), vocab) || sat(e, f.rhs(), vocab);
    case MelOp::Iff: return sat(e, f.lhs(), vocab) == sat(e, f.rhs(), vocab);
  }
  return false;
}

// Bottom-up over all models at once: each node becomes a membership vector.
std::vector<bool> models_of(const MelFormula& f, const Vocabulary& vocab, std::size_t count) {
  std::vector<bool> out(count, false);
  switch (f.op()) {
    case MelOp::Box: {
      const std::uint64_t mod = mod_set(f.body(), vocab).bits();
      // Non-empty subsets of Mod(phi).
      for (std::uint64_t s = mod; s != 0; s = (s - 1) & mod) out[s] = true;
      return out;
    }
    case MelOp::Not: {
      auto inner = models_of(f.operand(), vocab, count);
      for (std::size_t e = 1; e < count; ++e) out[e] = !inner[e];
      return out;
    }
    default: break;
  }
  auto l = models_of(f.lhs(), vocab, count);
  auto r = models_of(f.rhs(), vocab, count);
  for (std::size_t e = 1; e < count; ++e) {
    switch (f.op()) {
      case MelOp::And: out[e] = l[e] && r[e]; break;
      case MelOp::Or: out[e] = l[e] || r[e]; break;
      case MelOp::Implies: out[e] = !l[e] || r[e]; break;
      case MelOp::Iff: out[e] = l[e] == r[e]; break;
      default: break;
    }
  }
  return out;
}

}  // namespace

bool mel_sat(const EpistemicModel& model, const MelFormula& formula, const Vocabulary& vocab) {
  return sat(model.worlds(), formula, vocab);
}

std::vector<bool> mel_models(const MelFormula& formula, const Vocabulary& vocab) {
  require_enumerable(vocab);
  return models_of(formula, vocab, std::size_t{1} << vocab.world_count());
}

bool mel_valid(const MelFormula& formula, const Vocabulary& vocab) {
  return mel_consequence({}, formula, vocab).holds;
}

MelConsequence mel_consequence(const std::vector<MelFormula>& premises,
                               const MelFormula& conclusion, const Vocabulary& vocab) {
  require_enumerable(vocab);
  const std::uint64_t count = std::uint64_t{1} << vocab.world_count();
  for (std::uint64_t bits = 1; bits < count; ++bits) {
    const WorldSet e(bits);
    bool premises_hold = true;
    for (const auto& p : premises) {
      if (!sat(e, p, vocab)) {
        premises_hold = false;
        break;
      }
    }
    if (premises_hold && !sat(e, conclusion, vocab)) return {false, e};
  }
  return {true, std::nullopt};
}

MelFormula characteristic_formula(const EpistemicModel& model, const Vocabulary& vocab) {
  const WorldSet e = model.worlds();
  const PropFormula phi_e = formula_of_set(e, vocab);
  MelFormula result = MelFormula::box(phi_e);
  for (std::size_t w : e.worlds()) {
    // ![](phi_E & !sigma_w): E minus w does not already exhaust the state.
    auto excluded = PropFormula::conjunction(phi_e, PropFormula::negation(minterm(w, vocab)));
    result = MelFormula::conjunction(std::move(result),
                                     MelFormula::negation(MelFormula::box(std::move(excluded))));
  }
  return result;
}

namespace {

bool mel_binary(MelOp op) { return op != MelOp::Box && op != MelOp::Not; }

std::string mel_child(const MelFormula& f, const Vocabulary& vocab) {
  std::string s = to_string(f, vocab);
  return mel_binary(f.op()) ? "(" + s + ")" : s;
}

}  // namespace

std::string to_string(const MelFormula& f, const Vocabulary& vocab) {
  switch (f.op()) {
    case MelOp::Box: return "[](" + to_string(f.body(), vocab) + ")";
    case MelOp::Not:
      if (f.operand().op() == MelOp::Box && f.operand().body().op() == PropOp::Not) {
        return "<>(" + to_string(f.operand().body().operand(), vocab) + ")";
      }
      return "!" + mel_child(f.operand(), vocab);
    case MelOp::And: return mel_child(f.lhs(), vocab) + " & " + mel_child(f.rhs(), vocab);
    case MelOp::Or: return mel_child(f.lhs(), vocab) + " | " + mel_child(f.rhs(), vocab);
    case MelOp::Implies: return mel_child(f.lhs(), vocab) + " -> " + mel_child(f.rhs(), vocab);
    case MelOp::Iff: return mel_child(f.lhs(), vocab) + " <-> " + mel_child(f.rhs(), vocab);
  }
  return {};
}

}  // namespace belfl
