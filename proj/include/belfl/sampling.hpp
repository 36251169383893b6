#pragma once

// Seeded generators for mass functions and formulas, used by the sampled
// axiom suite and by the property tests.

#include <cstddef>
#include <random>

#include "belfl/belief.hpp"
#include "belfl/mel.hpp"
#include "belfl/propcore.hpp"

namespace belfl::sampling {

using Rng = std::mt19937_64;

/// Between 1 and `max_focal` distinct focal sets, masses with a common
/// denominator no larger than `max_denominator`.
MassFunction random_mass(std::size_t world_count, std::size_t max_focal,
                         unsigned max_denominator, Rng& rng);

/// Focal sets drawn from a random chain (a necessity measure).
MassFunction random_consonant_mass(std::size_t world_count, unsigned max_denominator,
                                   Rng& rng);

/// Singleton focal sets only (a probability).
MassFunction random_bayesian_mass(std::size_t world_count, unsigned max_denominator,
                                  Rng& rng);

PropFormula random_prop(const Vocabulary& vocab, int depth, Rng& rng);
MelFormula random_mel(const Vocabulary& vocab, int depth, Rng& rng);

}  // namespace belfl::sampling
