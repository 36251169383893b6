#pragma once

// Exact rational simplex and branch-and-bound over binary variables.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "belfl/rational.hpp"

namespace belfl::lp {

struct VarId {
  std::size_t index = 0;
  auto operator<=>(const VarId&) const = default;
};

/// sum_i c_i x_i + constant, with no zero coefficients stored.
class LinearExpr {
 public:
  LinearExpr() = default;
  LinearExpr(Rational constant) : constant_(std::move(constant)) {}  // NOLINT
  LinearExpr(VarId var) { add_term(var, 1); }                      // NOLINT

  LinearExpr& add_term(VarId var, const Rational& coeff);
  LinearExpr& operator+=(const LinearExpr& other);
  LinearExpr& operator-=(const LinearExpr& other);
  LinearExpr& operator*=(const Rational& factor);

  const std::map<std::size_t, Rational>& terms() const { return terms_; }
  const Rational& constant() const { return constant_; }
  bool is_constant() const { return terms_.empty(); }
  Rational evaluate(const std::vector<Rational>& assignment) const;

  friend LinearExpr operator+(LinearExpr a, const LinearExpr& b) { return a += b; }
  friend LinearExpr operator-(LinearExpr a, const LinearExpr& b) { return a -= b; }
  friend LinearExpr operator*(LinearExpr a, const Rational& f) { return a *= f; }
  friend LinearExpr operator*(const Rational& f, LinearExpr a) { return a *= f; }
  bool operator==(const LinearExpr&) const = default;

 private:
  std::map<std::size_t, Rational> terms_;
  Rational constant_;
};

enum class Sense { LessEq, Equal, GreaterEq };
enum class VarKind { Continuous, Binary };
enum class Direction { Minimize, Maximize };

struct Variable {
  std::string name;
  VarKind kind = VarKind::Continuous;
  Rational lower;
  /// Absent means unbounded above.
  std::optional<Rational> upper;
};

struct Constraint {
  LinearExpr expr;
  Sense sense = Sense::LessEq;
  Rational rhs;
  std::string name;
};

class RationalMILP {
 public:
  VarId add_continuous(std::string name, Rational lower,
                       std::optional<Rational> upper);
  VarId add_binary(std::string name);
  void add_constraint(LinearExpr expr, Sense sense, Rational rhs,
                      std::string name = {});
  void set_objective(LinearExpr objective, Direction direction);

  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const LinearExpr& objective() const { return objective_; }
  Direction direction() const { return direction_; }
  std::size_t binary_count() const;

  /// Tightens the bounds of an existing variable (used for branching).
  void fix_variable(VarId var, const Rational& value);

  /// True iff the assignment meets every bound and constraint exactly.
  bool satisfied_by(const std::vector<Rational>& assignment) const;

  /// LP-format-like text dump for cross-checking with external solvers.
  std::string to_lp_text() const;

 private:
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  LinearExpr objective_;
  Direction direction_ = Direction::Minimize;
};

enum class Status { Optimal, Infeasible, Unbounded };

std::string to_string(Status status);

struct SolveResult {
  Status status = Status::Infeasible;
  Rational optimum;
  std::vector<Rational> assignment;
  std::size_t nodes = 0;
};

struct SolverOptions {
  std::size_t max_binaries = 64;
  std::size_t node_budget = 1'000'000;
};

/// Two-phase primal simplex with Bland's rule. Binary variables, if any, are
/// relaxed to [0,1].
SolveResult solve_lp(const RationalMILP& problem);

/// Depth-first branch and bound: branches on the lowest-index fractional
/// binary, 0-branch first. Throws CapExceededError over the binary cap and
/// ResourceLimitError once the node budget is spent.
SolveResult solve_milp(const RationalMILP& problem, const SolverOptions& options = {});

}  // namespace belfl::lp
