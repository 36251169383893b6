#include "belfl/sampling.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "belfl/error.hpp"

namespace belfl::sampling {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// `parts` positive integers summing to `total` (requires total >= parts).
std::vector<unsigned> composition(unsigned total, std::size_t parts, Rng& rng) {
  std::vector<unsigned> cuts;
  std::vector<unsigned> pool(total - 1);
  std::iota(pool.begin(), pool.end(), 1U);
  std::shuffle(pool.begin(), pool.end(), rng);
  cuts.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(parts - 1));
  std::sort(cuts.begin(), cuts.end());
  std::vector<unsigned> out;
  unsigned prev = 0;
  for (unsigned c : cuts) {
    out.push_back(c - prev);
    prev = c;
  }
  out.push_back(total - prev);
  return out;
}

MassFunction assemble(std::size_t world_count, const std::vector<WorldSet>& sets,
                      unsigned max_denominator, Rng& rng) {
  const unsigned den = static_cast<unsigned>(
      uniform(rng, std::max<std::size_t>(sets.size(), 1), std::max<unsigned>(max_denominator, 1)));
  const auto parts = composition(std::max<unsigned>(den, static_cast<unsigned>(sets.size())),
                                 sets.size(), rng);
  const unsigned total = std::accumulate(parts.begin(), parts.end(), 0U);
  std::map<WorldSet, Rational> masses;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    masses.emplace(sets[i], make_rational(parts[i], total));
  }
  return MassFunction(world_count, std::move(masses));
}

}  // namespace

MassFunction random_mass(std::size_t world_count, std::size_t max_focal,
                         unsigned max_denominator, Rng& rng) {
  const std::uint64_t nonempty = (std::uint64_t{1} << world_count) - 1;
  std::size_t focal = uniform(rng, 1, std::max<std::size_t>(1, std::min<std::uint64_t>(max_focal, nonempty)));
  focal = std::min<std::size_t>(focal, std::max(1U, max_denominator));
  std::vector<WorldSet> sets;
  while (sets.size() < focal) {
    const WorldSet e(uniform(rng, 1, nonempty));
    if (std::find(sets.begin(), sets.end(), e) == sets.end()) sets.push_back(e);
  }
  return assemble(world_count, sets, max_denominator, rng);
}

MassFunction random_consonant_mass(std::size_t world_count, unsigned max_denominator,
                                   Rng& rng) {
  std::vector<std::size_t> order(world_count);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<WorldSet> chain;
  WorldSet acc;
  for (std::size_t w : order) {
    acc = acc | WorldSet::singleton(w);
    chain.push_back(acc);
  }
  std::shuffle(chain.begin(), chain.end(), rng);
  const std::size_t focal = std::min<std::size_t>(uniform(rng, 1, chain.size()),
                                                  std::max(1U, max_denominator));
  chain.resize(focal);
  return assemble(world_count, chain, max_denominator, rng);
}

MassFunction random_bayesian_mass(std::size_t world_count, unsigned max_denominator,
                                  Rng& rng) {
  std::vector<WorldSet> singletons;
  for (std::size_t w = 0; w < world_count; ++w) singletons.push_back(WorldSet::singleton(w));
  std::shuffle(singletons.begin(), singletons.end(), rng);
  const std::size_t focal = std::min<std::size_t>(uniform(rng, 1, world_count),
                                                  std::max(1U, max_denominator));
  singletons.resize(focal);
  return assemble(world_count, singletons, max_denominator, rng);
}

PropFormula random_prop(const Vocabulary& vocab, int depth, Rng& rng) {
  if (vocab.size() == 0) throw Error("cannot sample formulas over an empty vocabulary");
  if (depth <= 0 || uniform(rng, 0, 3) == 0) {
    const std::size_t pick = uniform(rng, 0, vocab.size() + 1);
    if (pick == vocab.size()) return PropFormula::falsum();
    if (pick == vocab.size() + 1) return PropFormula::verum();
    return PropFormula::var(pick);
  }
  switch (uniform(rng, 0, 4)) {
    case 0: return PropFormula::negation(random_prop(vocab, depth - 1, rng));
    case 1: return PropFormula::conjunction(random_prop(vocab, depth - 1, rng),
                                            random_prop(vocab, depth - 1, rng));
    case 2: return PropFormula::disjunction(random_prop(vocab, depth - 1, rng),
                                            random_prop(vocab, depth - 1, rng));
    case 3: return PropFormula::implication(random_prop(vocab, depth - 1, rng),
                                            random_prop(vocab, depth - 1, rng));
    default: return PropFormula::equivalence(random_prop(vocab, depth - 1, rng),
                                             random_prop(vocab, depth - 1, rng));
  }
}

MelFormula random_mel(const Vocabulary& vocab, int depth, Rng& rng) {
  if (depth <= 0 || uniform(rng, 0, 2) == 0) {
    return MelFormula::box(random_prop(vocab, 2, rng));
  }
  switch (uniform(rng, 0, 4)) {
    case 0: return MelFormula::negation(random_mel(vocab, depth - 1, rng));
    case 1: return MelFormula::conjunction(random_mel(vocab, depth - 1, rng),
                                           random_mel(vocab, depth - 1, rng));
    case 2: return MelFormula::disjunction(random_mel(vocab, depth - 1, rng),
                                           random_mel(vocab, depth - 1, rng));
    case 3: return MelFormula::implication(random_mel(vocab, depth - 1, rng),
                                           random_mel(vocab, depth - 1, rng));
    default: return MelFormula::diamond(random_prop(vocab, 2, rng));
  }
}

}  // namespace belfl::sampling
