#include <doctest.h>

#include "belfl/error.hpp"
#include "belfl/pformula.hpp"
#include "belfl/sampling.hpp"

using namespace belfl;

namespace {
const Vocabulary pq({"p", "q"});
const Vocabulary pqr({"p", "q", "r"});
}  // namespace

TEST_CASE("classical precedence") {
  const PropFormula f = parse_prop("p | q", pq);
  CHECK(f == PropFormula::disjunction(PropFormula::var(0), PropFormula::var(1)));

  const PropFormula g = parse_prop("!(p & q) -> r", pqr);
  CHECK(g == PropFormula::implication(
                 PropFormula::negation(PropFormula::conjunction(PropFormula::var(0),
                                                                PropFormula::var(1))),
                 PropFormula::var(2)));

  CHECK(parse_prop("p & q | r", pqr) == parse_prop("(p & q) | r", pqr));
  CHECK(parse_prop("!p & q", pqr) == parse_prop("(!p) & q", pqr));
  CHECK(parse_prop("p -> q -> r", pqr) == parse_prop("p -> (q -> r)", pqr));
  CHECK(parse_prop("p <-> q -> r", pqr) == parse_prop("p <-> (q -> r)", pqr));
}

TEST_CASE("unicode spellings") {
  CHECK(parse_prop("¬p ∧ q → p ∨ q", pq) == parse_prop("!p & q -> p | q", pq));
  CHECK(parse_prop("p ↔ q", pq) == parse_prop("p <-> q", pq));
  CHECK(parse_prop("⊤ ∧ ⊥", pq) == parse_prop("1 & 0", pq));
  CHECK(parse_mel("□(p) → ◇(p)", pq) == parse_mel("[](p) -> <>(p)", pq));
  CHECK(parse_p("B(p) ⊕ B(q) ⊖ 0.2", pq) == parse_p("B(p) (+) (B(q) (-) 0.2)", pq));
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_prop("p <-> s", pq);
    FAIL("expected an unknown-variable error");
  } catch (const UnknownVariableError& e) {
    CHECK(e.name() == "s");
    CHECK(e.position() == 6);
  }
  CHECK_THROWS_AS(parse_prop("p &", pq), ParseError);
  CHECK_THROWS_AS(parse_prop("(p", pq), ParseError);
  CHECK_THROWS_AS(parse_prop("p q", pq), ParseError);
  CHECK_THROWS_AS(parse_prop("2", pq), ParseError);
  CHECK_THROWS_AS(parse_prop("[](p)", pq), ParseError);
}

TEST_CASE("MEL parsing") {
  CHECK(parse_mel("<>(p)", pq) ==
        MelFormula::negation(MelFormula::box(PropFormula::negation(PropFormula::var(0)))));
  CHECK(parse_mel("[](p) | [](q) & ![](p)", pq) ==
        MelFormula::disjunction(MelFormula::box(PropFormula::var(0)),
                                MelFormula::conjunction(MelFormula::box(PropFormula::var(1)),
                                                        MelFormula::negation(MelFormula::box(
                                                            PropFormula::var(0))))));
  CHECK_THROWS_AS(parse_mel("p -> [](q)", pq), ParseError);
  CHECK_THROWS_AS(parse_mel("[]([](p))", pq), ParseError);
}

TEST_CASE("P-formula parsing") {
  const PFormula f = parse_p("0.8 -> B(p)", pq);
  CHECK(f == PFormula::implication(PFormula::constant(make_rational(4, 5)),
                                   PFormula::belief(PropFormula::var(0))));
  CHECK(parse_p("P([](p) | [](q))", pq) ==
        PFormula::atom(MelFormula::disjunction(MelFormula::box(PropFormula::var(0)),
                                               MelFormula::box(PropFormula::var(1)))));
  CHECK(parse_p("3/10", pq) == PFormula::constant(make_rational(3, 10)));
  CHECK(parse_p("B(p) && B(q) (+) B(p)", pq) == parse_p("(B(p) && B(q)) (+) B(p)", pq));
  CHECK(parse_p("B(p) /\\ B(q) \\/ 0", pq) == parse_p("(B(p) /\\ B(q)) \\/ 0", pq));
  CHECK(parse_p("!B(p) -> B(q) <-> 1", pq) == parse_p("(!B(p)) -> (B(q) <-> 1)", pq));

  CHECK_THROWS_AS(parse_p("1.2 -> B(p)", pq), ConstantRangeError);
  CHECK_THROWS_AS(parse_p("3/2", pq), ConstantRangeError);
  CHECK_THROWS_AS(parse_p("B(B(p))", pq), ParseError);
  CHECK_THROWS_AS(parse_p("P([](p)) & B(q)", pq), ParseError);
  CHECK_THROWS_AS(parse_p("p -> B(q)", pq), ParseError);
  CHECK_THROWS_AS(parse_p("[](p)", pq), ParseError);
}

TEST_CASE("rational literals") {
  CHECK(parse_rational("0.8") == make_rational(4, 5));
  CHECK(parse_rational("6/10") == make_rational(3, 5));
  CHECK(parse_rational("-1/3") == make_rational(-1, 3));
  CHECK(parse_rational("2") == 2);
  CHECK(to_string(make_rational(2, 4)) == "1/2");
  CHECK(to_string(Rational(1)) == "1/1");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("0."), ParseError);
}

TEST_CASE("scan_variables skips operator keywords") {
  CHECK(scan_variables("0.8 -> B(p & rain) (+) P([](q))") ==
        std::vector<std::string>{"p", "rain", "q"});
}

TEST_CASE("printers round-trip through the parsers") {
  sampling::Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    const PropFormula f = sampling::random_prop(pqr, 4, rng);
    CHECK(parse_prop(to_string(f, pqr), pqr) == f);
    const MelFormula m = sampling::random_mel(pqr, 3, rng);
    CHECK(parse_mel(to_string(m, pqr), pqr) == m);
  }
  const std::vector<std::string> pfs{
      "0.8 -> B(p)", "!B(p) (+) (B(q) && 1/3)", "(B(p) (-) B(q)) <-> P(<>(p) & <>(!p))",
      "B(p) /\\ (B(q) \\/ B(r))", "!!B(p -> q)", "P([](p) | [](q)) -> B(p | q)"};
  for (const auto& s : pfs) {
    const PFormula f = parse_p(s, pqr);
    CHECK(parse_p(to_string(f, pqr), pqr) == f);
  }
}
