#pragma once

// Mass functions, belief and plausibility, Moebius inversion and the
// correspondence between mass functions and probabilities on MEL formulas.

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "belfl/mel.hpp"
#include "belfl/propcore.hpp"
#include "belfl/rational.hpp"

namespace belfl {

/// Largest frame (number of worlds) whose power set we tabulate.
inline constexpr std::size_t kMaxFrameWorlds = 16;

/// Basic probability assignment over non-empty subsets of a frame of
/// `world_count` worlds. Masses are exact, sum to 1, and zero entries are
/// dropped so the keys are exactly the focal sets.
class MassFunction {
 public:
  MassFunction() = default;
  /// Throws InvalidMassError on an empty or out-of-frame focal set, a
  /// negative mass, or masses that do not sum to 1.
  MassFunction(std::size_t world_count, std::map<WorldSet, Rational> masses);

  /// m(Omega) = 1.
  static MassFunction vacuous(std::size_t world_count);

  std::size_t world_count() const { return world_count_; }
  const std::map<WorldSet, Rational>& masses() const { return masses_; }
  Rational mass(WorldSet set) const;
  std::vector<WorldSet> focal_sets() const;

  bool operator==(const MassFunction&) const = default;

 private:
  std::size_t world_count_ = 0;
  std::map<WorldSet, Rational> masses_;
};

enum class ModelClass { GeneralBelief, Probability, Necessity };

std::string to_string(ModelClass model_class);
/// Accepts "general", "probability", "necessity".
ModelClass parse_model_class(std::string_view text);

/// All focal sets are singletons.
bool is_bayesian(const MassFunction& mass);
/// Focal sets are pairwise comparable under inclusion.
bool is_consonant(const MassFunction& mass);
bool conforms(const MassFunction& mass, ModelClass model_class);

/// Bel(A) = sum of m(E) over focal E contained in A.
Rational belief_of_set(const MassFunction& mass, WorldSet set);
Rational plausibility_of_set(const MassFunction& mass, WorldSet set);

/// bel(phi) = Bel(Mod(phi)).
Rational bel(const MassFunction& mass, const PropFormula& formula,
             const Vocabulary& vocab);
/// pl(phi) = 1 - bel(!phi).
Rational pl(const MassFunction& mass, const PropFormula& formula,
            const Vocabulary& vocab);

/// Bel tabulated on every subset of the frame, indexed by mask.
class BeliefTable {
 public:
  BeliefTable() = default;
  BeliefTable(std::size_t world_count, std::vector<Rational> values);

  std::size_t world_count() const { return world_count_; }
  const Rational& operator[](WorldSet set) const { return values_.at(set.bits()); }
  const std::vector<Rational>& values() const { return values_; }

  bool operator==(const BeliefTable&) const = default;

 private:
  std::size_t world_count_ = 0;
  std::vector<Rational> values_;
};

BeliefTable belief_table(const MassFunction& mass);

/// Recovers the unique m with Bel(E) = sum_{F subset of E} m(F). Throws
/// NotABeliefFunctionError if Bel(empty) != 0, Bel(Omega) != 1, or any
/// recovered mass is negative.
MassFunction mobius(const BeliefTable& table);

/// mu_m(Phi) = sum of m(E) over focal E with E |= Phi.
Rational mu_of_mel(const MassFunction& mass, const MelFormula& formula,
                   const Vocabulary& vocab);

using MelProbability = std::function<Rational(const MelFormula&)>;

/// m(E) = mu(Sigma_E) for every non-empty E. Throws NotAProbabilityError if
/// any value lies outside [0,1] or the values do not sum to 1.
MassFunction mass_from_mu(const MelProbability& mu, const Vocabulary& vocab);

}  // namespace belfl
