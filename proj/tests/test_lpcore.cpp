#include <doctest.h>

#include <random>

#include "belfl/error.hpp"
#include "belfl/lpcore.hpp"

using namespace belfl;
using namespace belfl::lp;

namespace {
Rational R(long n, long d = 1) { return make_rational(n, d); }
}  // namespace

TEST_CASE("linear expressions stay canonical") {
  LinearExpr e = LinearExpr(VarId{0}) + LinearExpr(VarId{1}) - LinearExpr(VarId{0});
  CHECK(e.terms().size() == 1);
  e *= 0;
  CHECK(e.is_constant());
  const LinearExpr f = R(2) * LinearExpr(VarId{1}) + R(1, 2);
  CHECK(f.evaluate({R(5), R(3)}) == R(13, 2));
}

TEST_CASE("small LPs") {
  {
    RationalMILP p;
    VarId x = p.add_continuous("x", 0, std::nullopt);
    p.add_constraint(x, Sense::LessEq, R(2, 3));
    p.set_objective(x, Direction::Maximize);
    const SolveResult r = solve_lp(p);
    CHECK(r.status == Status::Optimal);
    CHECK(r.optimum == R(2, 3));
  }
  {
    RationalMILP p;
    VarId x = p.add_continuous("x", 0, R(1));
    VarId y = p.add_continuous("y", 0, R(1));
    p.add_constraint(LinearExpr(x) + y, Sense::GreaterEq, 1);
    p.set_objective(LinearExpr(x) + y, Direction::Minimize);
    const SolveResult r = solve_lp(p);
    CHECK(r.status == Status::Optimal);
    CHECK(r.optimum == 1);
    CHECK(p.satisfied_by(r.assignment));
  }
  {
    RationalMILP p;
    VarId x = p.add_continuous("x", 0, std::nullopt);
    p.add_constraint(x, Sense::GreaterEq, 2);
    p.add_constraint(x, Sense::LessEq, 1);
    CHECK(solve_lp(p).status == Status::Infeasible);
  }
  {
    RationalMILP p;
    VarId x = p.add_continuous("x", 0, std::nullopt);
    p.set_objective(x, Direction::Maximize);
    CHECK(solve_lp(p).status == Status::Unbounded);
  }
  {
    // Negative lower bounds, equality rows, a redundant row and an objective constant.
    RationalMILP p;
    VarId x = p.add_continuous("x", R(-1), R(1));
    VarId y = p.add_continuous("y", R(-1, 2), R(1));
    p.add_constraint(LinearExpr(x) + y, Sense::Equal, R(1, 4));
    p.add_constraint(R(2) * LinearExpr(x) + R(2) * LinearExpr(y), Sense::Equal, R(1, 2));
    p.set_objective(LinearExpr(x) - y + R(1), Direction::Minimize);
    const SolveResult r = solve_lp(p);
    CHECK(r.status == Status::Optimal);
    CHECK(r.optimum == R(-3, 4));
    CHECK(p.satisfied_by(r.assignment));
  }
}

TEST_CASE("milp: strong-disjunction gadget") {
  RationalMILP p;
  VarId x = p.add_continuous("x", 0, R(1));
  VarId y = p.add_continuous("y", 0, R(1));
  VarId t = p.add_continuous("t", 0, R(1));
  VarId b = p.add_binary("b");
  p.fix_variable(x, R(3, 5));
  p.fix_variable(y, R(3, 5));
  p.add_constraint(LinearExpr(t) - x - y + b, Sense::GreaterEq, 0);
  p.add_constraint(LinearExpr(t) - b, Sense::GreaterEq, 0);
  p.add_constraint(LinearExpr(t) - x - y, Sense::LessEq, 0);
  p.set_objective(t, Direction::Minimize);
  const SolveResult r = solve_milp(p);
  CHECK(r.status == Status::Optimal);
  CHECK(r.optimum == 1);
  CHECK(p.satisfied_by(r.assignment));
  CHECK(r.nodes >= 1);
}

TEST_CASE("milp: infeasible binaries, caps and budgets") {
  {
    RationalMILP p;
    VarId b1 = p.add_binary("b1");
    VarId b2 = p.add_binary("b2");
    p.add_constraint(LinearExpr(b1) + b2, Sense::LessEq, 0);
    p.add_constraint(b1, Sense::GreaterEq, 1);
    CHECK(solve_milp(p).status == Status::Infeasible);
  }
  {
    RationalMILP p;
    for (int i = 0; i < 3; ++i) p.add_binary("b" + std::to_string(i));
    CHECK_THROWS_AS(solve_milp(p, {2, 100}), CapExceededError);
  }
  {
    // Parity-style knapsack: the relaxation is fractional at every node.
    RationalMILP p;
    LinearExpr sum;
    for (int i = 0; i < 12; ++i) sum += p.add_binary("b" + std::to_string(i));
    p.add_constraint(R(2) * sum, Sense::Equal, 13);
    CHECK_THROWS_AS(solve_milp(p, {64, 50}), ResourceLimitError);
  }
}

TEST_CASE("milp equals lp when there are no binaries, and is deterministic") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-3, 4);
  for (int trial = 0; trial < 20; ++trial) {
    RationalMILP p;
    std::vector<VarId> xs;
    for (int j = 0; j < 4; ++j) xs.push_back(p.add_continuous("x" + std::to_string(j), 0, R(1)));
    VarId b = p.add_binary("b");
    for (int i = 0; i < 3; ++i) {
      LinearExpr row;
      for (auto x : xs) row.add_term(x, coeff(rng));
      row.add_term(b, coeff(rng));
      p.add_constraint(row, Sense::LessEq, R(coeff(rng) + 4, 3));
    }
    LinearExpr obj;
    for (auto x : xs) obj.add_term(x, coeff(rng));
    obj.add_term(b, R(1, 2));
    p.set_objective(obj, Direction::Maximize);
    const SolveResult first = solve_milp(p);
    const SolveResult second = solve_milp(p);
    CHECK(first.status == second.status);
    CHECK(first.assignment == second.assignment);
    if (first.status == Status::Optimal) {
      CHECK(p.satisfied_by(first.assignment));
      CHECK((first.assignment[b.index] == 0 || first.assignment[b.index] == 1));
      RationalMILP relaxed = p;
      CHECK(solve_lp(relaxed).optimum >= first.optimum);
    }
  }
}

TEST_CASE("lp duality on random bounded problems") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> entry(-3, 5);
  std::uniform_int_distribution<int> rhs(0, 9);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 3, n = 4;
    std::vector<std::vector<Rational>> a(m + n, std::vector<Rational>(n));
    std::vector<Rational> b(m + n), c(n);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = make_rational(entry(rng), 2);
      b[i] = make_rational(rhs(rng), 3);
    }
    for (int j = 0; j < n; ++j) {
      a[m + j][j] = 1;
      b[m + j] = make_rational(rhs(rng) + 1, 4);
      c[j] = make_rational(entry(rng), 5);
    }
    // Primal: max c.x, A x <= b, x >= 0.
    RationalMILP primal;
    std::vector<VarId> x;
    for (int j = 0; j < n; ++j) x.push_back(primal.add_continuous("x", 0, std::nullopt));
    for (int i = 0; i < m + n; ++i) {
      LinearExpr row;
      for (int j = 0; j < n; ++j) row.add_term(x[j], a[i][j]);
      primal.add_constraint(row, Sense::LessEq, b[i]);
    }
    LinearExpr pobj;
    for (int j = 0; j < n; ++j) pobj.add_term(x[j], c[j]);
    primal.set_objective(pobj, Direction::Maximize);
    // Dual: min b.y, A^T y >= c, y >= 0.
    RationalMILP dual;
    std::vector<VarId> y;
    for (int i = 0; i < m + n; ++i) y.push_back(dual.add_continuous("y", 0, std::nullopt));
    for (int j = 0; j < n; ++j) {
      LinearExpr row;
      for (int i = 0; i < m + n; ++i) row.add_term(y[i], a[i][j]);
      dual.add_constraint(row, Sense::GreaterEq, c[j]);
    }
    LinearExpr dobj;
    for (int i = 0; i < m + n; ++i) dobj.add_term(y[i], b[i]);
    dual.set_objective(dobj, Direction::Minimize);

    const SolveResult pr = solve_lp(primal);
    const SolveResult dr = solve_lp(dual);
    REQUIRE(pr.status == Status::Optimal);
    REQUIRE(dr.status == Status::Optimal);
    CHECK(pr.optimum == dr.optimum);
    CHECK(primal.satisfied_by(pr.assignment));
    CHECK(dual.satisfied_by(dr.assignment));
  }
}

TEST_CASE("lp text dump") {
  RationalMILP p;
  VarId x = p.add_continuous("x", 0, R(1));
  VarId b = p.add_binary("b");
  p.add_constraint(LinearExpr(x) - b, Sense::GreaterEq, R(-1, 2), "row");
  p.set_objective(x, Direction::Minimize);
  const std::string text = p.to_lp_text();
  CHECK(text.find("Minimize") != std::string::npos);
  CHECK(text.find("row:") != std::string::npos);
  CHECK(text.find("Binaries") != std::string::npos);
  CHECK(text.find("-1/2") != std::string::npos);
}
