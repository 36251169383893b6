#include <doctest.h>

#include "belfl/error.hpp"
#include "belfl/mel.hpp"
#include "belfl/sampling.hpp"
#include "oracles.hpp"

using namespace belfl;

namespace {
const Vocabulary p1({"p"});
const Vocabulary pq({"p", "q"});
MelFormula M(std::string_view s, const Vocabulary& v = pq) { return parse_mel(s, v); }

Vocabulary vocab_of_size(std::size_t n) {
  std::vector<std::string> names{"a", "b", "c"};
  names.resize(n);
  return Vocabulary(names);
}
}  // namespace

TEST_CASE("epistemic models are non-empty") {
  CHECK_THROWS_AS(EpistemicModel{WorldSet{}}, Error);
}

TEST_CASE("mel_sat") {
  const EpistemicModel mod_p(mod_set(parse_prop("p", pq), pq));
  const EpistemicModel omega(WorldSet::full(4));
  CHECK(mel_sat(mod_p, M("[](p | q)"), pq));
  CHECK_FALSE(mel_sat(omega, M("[](p)"), pq));
  CHECK(mel_sat(omega, M("<>(p) & <>(!p)"), pq));
  CHECK_FALSE(mel_sat(mod_p, M("<>(!p)"), pq));
}

TEST_CASE("mel_valid") {
  CHECK(mel_valid(M("[](p) -> <>(p)"), pq));
  CHECK(mel_valid(M("[](p -> q) -> ([](p) -> [](q))"), pq));
  CHECK(mel_valid(M("[](p | !p)"), pq));
  CHECK_FALSE(mel_valid(M("[](p) | [](!p)"), pq));
  CHECK_FALSE(mel_valid(M("[](p) -> [](q)"), pq));
}

TEST_CASE("mel_consequence") {
  auto r = mel_consequence({M("[](p)"), M("[](p -> q)")}, M("[](q)"), pq);
  CHECK(r.holds);
  CHECK_FALSE(r.countermodel);

  r = mel_consequence({M("<>(p)")}, M("[](p)"), Vocabulary({"p"}));
  CHECK_FALSE(r.holds);
  REQUIRE(r.countermodel);
  CHECK(*r.countermodel == WorldSet::full(2));

  CHECK(mel_consequence({}, M("[](p -> p)"), pq).holds);

  // The smallest countermodel in mask order is reported.
  r = mel_consequence({}, M("[](p)"), pq);
  REQUIRE(r.countermodel);
  CHECK(*r.countermodel == WorldSet(0b0001));
}

TEST_CASE("characteristic formulas") {
  const MelFormula sigma_omega = characteristic_formula(EpistemicModel(WorldSet::full(2)), p1);
  for (std::uint64_t s = 1; s < 4; ++s) {
    CHECK(mel_sat(EpistemicModel(WorldSet(s)), sigma_omega, p1) == (s == 3));
  }
  const MelFormula sigma_11 = characteristic_formula(EpistemicModel(WorldSet(0b1000)), pq);
  CHECK(to_string(sigma_11, pq) == "[](p & q) & ![]((p & q) & !(p & q))");
  for (std::uint64_t s = 1; s < 16; ++s) {
    CHECK(mel_sat(EpistemicModel(WorldSet(s)), sigma_11, pq) == (s == 0b1000));
  }
}

TEST_CASE("characteristic formulas are pairwise incompatible and unique at n <= 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const Vocabulary v = vocab_of_size(n);
    const std::uint64_t count = std::uint64_t{1} << v.world_count();
    for (std::uint64_t e = 1; e < count; ++e) {
      const MelFormula sigma = characteristic_formula(EpistemicModel(WorldSet(e)), v);
      const auto models = mel_models(sigma, v);
      std::size_t hits = 0;
      for (std::uint64_t s = 1; s < count; ++s) hits += models[s];
      CHECK(hits == 1);
      CHECK(models[e]);
    }
  }
  const Vocabulary v = vocab_of_size(2);
  for (std::uint64_t e = 1; e < 16; ++e) {
    for (std::uint64_t f = e + 1; f < 16; ++f) {
      const MelFormula both =
          MelFormula::conjunction(characteristic_formula(EpistemicModel(WorldSet(e)), v),
                                  characteristic_formula(EpistemicModel(WorldSet(f)), v));
      CHECK(mel_valid(MelFormula::negation(both), v));
    }
  }
}

TEST_CASE("decomposition into characteristic formulas") {
  sampling::Rng rng(3);
  const Vocabulary v = vocab_of_size(2);
  for (int i = 0; i < 40; ++i) {
    const MelFormula phi = sampling::random_mel(v, 3, rng);
    const auto models = mel_models(phi, v);
    std::optional<MelFormula> disjunction;
    for (std::uint64_t e = 1; e < 16; ++e) {
      if (!models[e]) continue;
      const MelFormula sigma = characteristic_formula(EpistemicModel(WorldSet(e)), v);
      disjunction = disjunction ? MelFormula::disjunction(*disjunction, sigma) : sigma;
    }
    if (!disjunction) {
      CHECK(mel_valid(MelFormula::negation(phi), v));
      continue;
    }
    CHECK(mel_valid(MelFormula::equivalence(phi, *disjunction), v));
  }
}

TEST_CASE("mel_models matches the oracle and mel_sat") {
  sampling::Rng rng(9);
  const Vocabulary v = vocab_of_size(3);
  for (int i = 0; i < 60; ++i) {
    const MelFormula phi = sampling::random_mel(v, 3, rng);
    const auto models = mel_models(phi, v);
    for (std::uint64_t e = 1; e < 256; e += 7) {
      CHECK(models[e] == oracle::mel_true(e, phi));
      CHECK(models[e] == mel_sat(EpistemicModel(WorldSet(e)), phi, v));
    }
  }
}

TEST_CASE("axiom instances and atom monotonicity") {
  sampling::Rng rng(21);
  const Vocabulary v = vocab_of_size(3);
  for (int i = 0; i < 60; ++i) {
    const PropFormula a = sampling::random_prop(v, 3, rng);
    const PropFormula b = sampling::random_prop(v, 3, rng);
    using MF = MelFormula;
    CHECK(mel_valid(MF::implication(MF::box(PropFormula::implication(a, b)),
                                    MF::implication(MF::box(a), MF::box(b))),
                    v));
    CHECK(mel_valid(MF::implication(MF::box(a), MF::diamond(a)), v));
    CHECK(mel_valid(MF::box(PropFormula::disjunction(a, PropFormula::negation(a))), v));
    if (mod_set(a, v).subset_of(mod_set(b, v))) {
      CHECK(mel_valid(MF::implication(MF::box(a), MF::box(b)), v));
    }
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(mel_valid(MelFormula::box(PropFormula::var(0)),
                            Vocabulary({"a", "b", "c", "d", "e"}, 5)),
                  CapExceededError);
}
