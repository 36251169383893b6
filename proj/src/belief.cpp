#include "belfl/belief.hpp"

#include "belfl/error.hpp"

namespace belfl {

namespace {

void require_frame(std::size_t world_count) {
  if (world_count == 0 || world_count > kMaxFrameWorlds) {
    throw CapExceededError("frames must have between 1 and " +
                           std::to_string(kMaxFrameWorlds) + " worlds");
  }
}

void require_same_frame(const MassFunction& mass, const Vocabulary& vocab) {
  if (mass.world_count() != vocab.world_count()) {
    throw Error("mass function frame has " + std::to_string(mass.world_count()) +
                " worlds but the vocabulary has " + std::to_string(vocab.world_count()));
  }
}

}  // namespace

MassFunction::MassFunction(std::size_t world_count, std::map<WorldSet, Rational> masses)
    : world_count_(world_count) {
  require_frame(world_count);
  const WorldSet omega = WorldSet::full(world_count);
  Rational total = 0;
  for (auto& [set, value] : masses) {
    if (set.empty()) {
      if (value != 0) throw InvalidMassError("the empty set cannot carry mass");
      continue;
    }
    if (!set.subset_of(omega)) throw InvalidMassError("focal set outside the frame");
    if (value < 0) throw InvalidMassError("negative mass " + to_string(value));
    if (value == 0) continue;
    total += value;
    masses_.emplace(set, value);
  }
  if (total != 1) throw InvalidMassError("masses sum to " + to_string(total) + ", not 1");
}

MassFunction MassFunction::vacuous(std::size_t world_count) {
  return MassFunction(world_count, {{WorldSet::full(world_count), Rational(1)}});
}

Rational MassFunction::mass(WorldSet set) const {
  auto it = masses_.find(set);
  return it == masses_.end() ? Rational(0) : it->second;
}

std::vector<WorldSet> MassFunction::focal_sets() const {
  std::vector<WorldSet> out;
  out.reserve(masses_.size());
  for (const auto& [set, value] : masses_) out.push_back(set);
  return out;
}

std::string to_string(ModelClass model_class) {
  switch (model_class) {
    case ModelClass::GeneralBelief: return "general";
    case ModelClass::Probability: return "probability";
    case ModelClass::Necessity: return "necessity";
  }
  return "general";
}

ModelClass parse_model_class(std::string_view text) {
  if (text == "general") return ModelClass::GeneralBelief;
  if (text == "probability") return ModelClass::Probability;
  if (text == "necessity") return ModelClass::Necessity;
  throw Error("unknown model class '" + std::string(text) +
              "' (expected general, probability or necessity)");
}

bool is_bayesian(const MassFunction& mass) {
  for (const auto& [set, value] : mass.masses()) {
    if (set.size() != 1) return false;
  }
  return true;
}

bool is_consonant(const MassFunction& mass) {
  const auto focal = mass.focal_sets();
  for (std::size_t i = 0; i < focal.size(); ++i) {
    for (std::size_t j = i + 1; j < focal.size(); ++j) {
      if (!focal[i].subset_of(focal[j]) && !focal[j].subset_of(focal[i])) return false;
    }
  }
  return true;
}

bool conforms(const MassFunction& mass, ModelClass model_class) {
  switch (model_class) {
    case ModelClass::GeneralBelief: return true;
    case ModelClass::Probability: return is_bayesian(mass);
    case ModelClass::Necessity: return is_consonant(mass);
  }
  return false;
}

Rational belief_of_set(const MassFunction& mass, WorldSet set) {
  Rational total = 0;
  for (const auto& [focal, value] : mass.masses()) {
    if (focal.subset_of(set)) total += value;
  }
  return total;
}

Rational plausibility_of_set(const MassFunction& mass, WorldSet set) {
  Rational total = 0;
  for (const auto& [focal, value] : mass.masses()) {
    if (focal.intersects(set)) total += value;
  }
  return total;
}

Rational bel(const MassFunction& mass, const PropFormula& formula, const Vocabulary& vocab) {
  require_same_frame(mass, vocab);
  return belief_of_set(mass, mod_set(formula, vocab));
}

Rational pl(const MassFunction& mass, const PropFormula& formula, const Vocabulary& vocab) {
  return 1 - bel(mass, PropFormula::negation(formula), vocab);
}

BeliefTable::BeliefTable(std::size_t world_count, std::vector<Rational> values)
    : world_count_(world_count), values_(std::move(values)) {
  require_frame(world_count);
  if (values_.size() != (std::size_t{1} << world_count)) {
    throw Error("belief table must have one entry per subset");
  }
}

BeliefTable belief_table(const MassFunction& mass) {
  const std::size_t n = mass.world_count();
  const std::size_t count = std::size_t{1} << n;
  std::vector<Rational> values(count);
  for (const auto& [set, value] : mass.masses()) values[set.bits()] = value;
  // Zeta transform over the subset lattice: values[A] = sum_{F subset A} m(F).
  for (std::size_t bit = 0; bit < n; ++bit) {
    for (std::size_t a = 0; a < count; ++a) {
      if (a & (std::size_t{1} << bit)) values[a] += values[a ^ (std::size_t{1} << bit)];
    }
  }
  return BeliefTable(n, std::move(values));
}

MassFunction mobius(const BeliefTable& table) {
  const std::size_t n = table.world_count();
  const std::size_t count = std::size_t{1} << n;
  if (table.values()[0] != 0) throw NotABeliefFunctionError("Bel(empty set) must be 0");
  if (table.values()[count - 1] != 1) throw NotABeliefFunctionError("Bel(Omega) must be 1");
  // Inverse zeta transform: m(E) = sum_{F subset E} (-1)^{|E\F|} Bel(F).
  std::vector<Rational> m = table.values();
  for (std::size_t bit = 0; bit < n; ++bit) {
    for (std::size_t a = 0; a < count; ++a) {
      if (a & (std::size_t{1} << bit)) m[a] -= m[a ^ (std::size_t{1} << bit)];
    }
  }
  std::map<WorldSet, Rational> masses;
  for (std::size_t a = 1; a < count; ++a) {
    if (m[a] < 0) {
      throw NotABeliefFunctionError("recovered mass " + to_string(m[a]) +
                                    " is negative on world set mask " + std::to_string(a));
    }
    if (m[a] != 0) masses.emplace(WorldSet(a), m[a]);
  }
  return MassFunction(n, std::move(masses));
}

Rational mu_of_mel(const MassFunction& mass, const MelFormula& formula,
                   const Vocabulary& vocab) {
  require_same_frame(mass, vocab);
  Rational total = 0;
  for (const auto& [focal, value] : mass.masses()) {
    if (mel_sat(EpistemicModel(focal), formula, vocab)) total += value;
  }
  return total;
}

MassFunction mass_from_mu(const MelProbability& mu, const Vocabulary& vocab) {
  require_enumerable(vocab);
  const std::uint64_t count = std::uint64_t{1} << vocab.world_count();
  std::map<WorldSet, Rational> masses;
  Rational total = 0;
  for (std::uint64_t bits = 1; bits < count; ++bits) {
    const WorldSet e(bits);
    Rational value = mu(characteristic_formula(EpistemicModel(e), vocab));
    if (!in_unit_interval(value)) {
      throw NotAProbabilityError("mu(Sigma_E) = " + to_string(value) + " outside [0,1]");
    }
    total += value;
    if (value != 0) masses.emplace(e, value);
  }
  if (total != 1) {
    throw NotAProbabilityError("characteristic-formula values sum to " + to_string(total));
  }
  return MassFunction(vocab.world_count(), std::move(masses));
}

}  // namespace belfl
