#include "belfl/lpcore.hpp"

#include <sstream>

#include "belfl/error.hpp"

namespace belfl::lp {

// --- LinearExpr --------------------------------------------------------------

LinearExpr& LinearExpr::add_term(VarId var, const Rational& coeff) {
  if (coeff == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(var.index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

LinearExpr& LinearExpr::operator+=(const LinearExpr& other) {
  for (const auto& [var, coeff] : other.terms_) add_term(VarId{var}, coeff);
  constant_ += other.constant_;
  return *this;
}

LinearExpr& LinearExpr::operator-=(const LinearExpr& other) {
  for (const auto& [var, coeff] : other.terms_) add_term(VarId{var}, -coeff);
  constant_ -= other.constant_;
  return *this;
}

LinearExpr& LinearExpr::operator*=(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
    constant_ = 0;
    return *this;
  }
  for (auto& [var, coeff] : terms_) coeff *= factor;
  constant_ *= factor;
  return *this;
}

Rational LinearExpr::evaluate(const std::vector<Rational>& assignment) const {
  Rational total = constant_;
  for (const auto& [var, coeff] : terms_) total += coeff * assignment.at(var);
  return total;
}

// --- RationalMILP ------------------------------------------------------------

VarId RationalMILP::add_continuous(std::string name, Rational lower,
                                   std::optional<Rational> upper) {
  variables_.push_back({std::move(name), VarKind::Continuous, std::move(lower), std::move(upper)});
  return VarId{variables_.size() - 1};
}

VarId RationalMILP::add_binary(std::string name) {
  variables_.push_back({std::move(name), VarKind::Binary, Rational(0), Rational(1)});
  return VarId{variables_.size() - 1};
}

void RationalMILP::add_constraint(LinearExpr expr, Sense sense, Rational rhs, std::string name) {
  for (const auto& [var, coeff] : expr.terms()) {
    if (var >= variables_.size()) throw Error("constraint references an unknown variable");
  }
  constraints_.push_back({std::move(expr), sense, std::move(rhs), std::move(name)});
}

void RationalMILP::set_objective(LinearExpr objective, Direction direction) {
  objective_ = std::move(objective);
  direction_ = direction;
}

std::size_t RationalMILP::binary_count() const {
  std::size_t n = 0;
  for (const auto& v : variables_) n += v.kind == VarKind::Binary;
  return n;
}

void RationalMILP::fix_variable(VarId var, const Rational& value) {
  auto& v = variables_.at(var.index);
  v.lower = value;
  v.upper = value;
}

bool RationalMILP::satisfied_by(const std::vector<Rational>& x) const {
  if (x.size() != variables_.size()) return false;
  for (std::size_t j = 0; j < variables_.size(); ++j) {
    const auto& v = variables_[j];
    if (x[j] < v.lower || (v.upper && x[j] > *v.upper)) return false;
    if (v.kind == VarKind::Binary && x[j] != 0 && x[j] != 1) return false;
  }
  for (const auto& c : constraints_) {
    const Rational lhs = c.expr.evaluate(x);
    switch (c.sense) {
      case Sense::LessEq: if (lhs > c.rhs) return false; break;
      case Sense::Equal: if (lhs != c.rhs) return false; break;
      case Sense::GreaterEq: if (lhs < c.rhs) return false; break;
    }
  }
  return true;
}

namespace {

void write_expr(std::ostringstream& out, const LinearExpr& e, const std::vector<Variable>& vars) {
  bool first = true;
  for (const auto& [var, coeff] : e.terms()) {
    out << (first ? " " : (coeff < 0 ? " - " : " + "));
    if (first && coeff < 0) out << "- ";
    out << belfl::to_string(Rational(abs(coeff))) << " " << vars[var].name;
    first = false;
  }
  if (e.constant() != 0 || first) out << " + " << belfl::to_string(e.constant());
}

}  // namespace

std::string RationalMILP::to_lp_text() const {
  std::ostringstream out;
  out << (direction_ == Direction::Minimize ? "Minimize\n" : "Maximize\n") << " obj:";
  write_expr(out, objective_, variables_);
  out << "\nSubject To\n";
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    const auto& c = constraints_[i];
    out << " " << (c.name.empty() ? "c" + std::to_string(i) : c.name) << ":";
    write_expr(out, c.expr, variables_);
    out << (c.sense == Sense::LessEq ? " <= " : c.sense == Sense::Equal ? " = " : " >= ")
        << belfl::to_string(c.rhs) << "\n";
  }
  out << "Bounds\n";
  for (const auto& v : variables_) {
    if (v.kind == VarKind::Binary) continue;
    out << " " << belfl::to_string(v.lower) << " <= " << v.name;
    if (v.upper) out << " <= " << belfl::to_string(*v.upper);
    out << "\n";
  }
  out << "Binaries\n";
  for (const auto& v : variables_) {
    if (v.kind == VarKind::Binary) out << " " << v.name << "\n";
  }
  out << "End\n";
  return out.str();
}

std::string to_string(Status status) {
  switch (status) {
    case Status::Optimal: return "optimal";
    case Status::Infeasible: return "infeasible";
    case Status::Unbounded: return "unbounded";
  }
  return "?";
}

// --- Simplex -------------------------------------------------------------------

namespace {

struct Bounds {
  std::vector<Rational> lower;
  std::vector<std::optional<Rational>> upper;
};

/// Dense tableau for min c.x, A x = b, x >= 0 with b >= 0.
class Tableau {
 public:
  std::vector<std::vector<Rational>> rows;  // m x n
  std::vector<Rational> rhs;                // m
  std::vector<std::size_t> basis;           // m
  std::vector<Rational> reduced;            // n
  Rational objective;                       // current c_B . b
  std::size_t columns = 0;

  void pivot(std::size_t r, std::size_t col) {
    const Rational p = rows[r][col];
    for (auto& v : rows[r]) {
      if (v != 0) v /= p;
    }
    rhs[r] /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = 0; j < columns; ++j) {
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
      }
      rhs[i] -= f * rhs[r];
    }
    if (reduced[col] != 0) {
      const Rational f = reduced[col];
      for (std::size_t j = 0; j < columns; ++j) {
        if (rows[r][j] != 0) reduced[j] -= f * rows[r][j];
      }
      objective += f * rhs[r];
    }
    basis[r] = col;
  }

  void price(const std::vector<Rational>& cost) {
    reduced = cost;
    objective = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational& cb = cost[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < columns; ++j) {
        if (rows[i][j] != 0) reduced[j] -= cb * rows[i][j];
      }
      objective += cb * rhs[i];
    }
  }

  /// Bland's rule; columns at or beyond `allowed` never enter.
  /// Returns false if unbounded.
  bool optimize(std::size_t allowed) {
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (reduced[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rational ratio = rhs[i] / rows[i][enter];
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (!leave) return false;
      pivot(*leave, enter);
    }
  }
};

SolveResult solve_with_bounds(const RationalMILP& problem, const Bounds& bounds) {
  const auto& vars = problem.variables();
  const std::size_t nv = vars.size();
  SolveResult result;

  // Shift x = lower + x'; fixed variables get no column.
  std::vector<std::optional<std::size_t>> column(nv);
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < nv; ++j) {
    if (bounds.upper[j] && *bounds.upper[j] < bounds.lower[j]) return result;
    if (bounds.upper[j] && *bounds.upper[j] == bounds.lower[j]) continue;
    column[j] = ncols++;
  }
  const std::size_t structural = ncols;

  struct Row {
    std::vector<std::pair<std::size_t, Rational>> coeffs;
    Sense sense;
    Rational rhs;
  };
  std::vector<Row> rows;
  for (const auto& c : problem.constraints()) {
    Row row{{}, c.sense, c.rhs - c.expr.constant()};
    for (const auto& [var, coeff] : c.expr.terms()) {
      row.rhs -= coeff * bounds.lower[var];
      if (column[var]) row.coeffs.emplace_back(*column[var], coeff);
    }
    if (row.coeffs.empty()) {
      const bool ok = row.sense == Sense::LessEq    ? 0 <= row.rhs
                      : row.sense == Sense::Equal   ? row.rhs == 0
                                                    : 0 >= row.rhs;
      if (!ok) return result;
      continue;
    }
    rows.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < nv; ++j) {
    if (column[j] && bounds.upper[j]) {
      rows.push_back({{{*column[j], Rational(1)}}, Sense::LessEq, *bounds.upper[j] - bounds.lower[j]});
    }
  }
  for (auto& row : rows) {
    if (row.rhs < 0) {
      row.rhs = -row.rhs;
      for (auto& [col, coeff] : row.coeffs) coeff = -coeff;
      if (row.sense == Sense::LessEq) row.sense = Sense::GreaterEq;
      else if (row.sense == Sense::GreaterEq) row.sense = Sense::LessEq;
    }
  }

  // Column layout: structural | slack/surplus | artificial.
  std::size_t slacks = 0, artificials = 0;
  for (const auto& row : rows) {
    if (row.sense != Sense::Equal) ++slacks;
    if (row.sense != Sense::LessEq) ++artificials;
  }
  const std::size_t first_art = structural + slacks;
  Tableau t;
  t.columns = first_art + artificials;
  t.rows.assign(rows.size(), std::vector<Rational>(t.columns));
  t.rhs.resize(rows.size());
  t.basis.resize(rows.size());
  std::size_t next_slack = structural, next_art = first_art;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [col, coeff] : rows[i].coeffs) t.rows[i][col] += coeff;
    t.rhs[i] = rows[i].rhs;
    switch (rows[i].sense) {
      case Sense::LessEq:
        t.rows[i][next_slack] = 1;
        t.basis[i] = next_slack++;
        break;
      case Sense::GreaterEq:
        t.rows[i][next_slack++] = -1;
        t.rows[i][next_art] = 1;
        t.basis[i] = next_art++;
        break;
      case Sense::Equal:
        t.rows[i][next_art] = 1;
        t.basis[i] = next_art++;
        break;
    }
  }

  if (artificials > 0) {
    std::vector<Rational> phase1(t.columns);
    for (std::size_t j = first_art; j < t.columns; ++j) phase1[j] = 1;
    t.price(phase1);
    t.optimize(t.columns);
    if (t.objective != 0) return result;  // Infeasible
    // Drive zero-level artificials out of the basis, dropping redundant rows.
    for (std::size_t i = 0; i < t.rows.size();) {
      if (t.basis[i] < first_art) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < first_art; ++j) {
        if (t.rows[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col) {
        t.pivot(i, *col);
        ++i;
      } else {
        t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
        t.rhs.erase(t.rhs.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  const Rational sign = problem.direction() == Direction::Minimize ? 1 : -1;
  std::vector<Rational> cost(t.columns);
  for (const auto& [var, coeff] : problem.objective().terms()) {
    if (column[var]) cost[*column[var]] = sign * coeff;
  }
  t.price(cost);
  if (!t.optimize(first_art)) {
    result.status = Status::Unbounded;
    return result;
  }

  result.assignment = bounds.lower;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.basis[i] >= structural) continue;
    for (std::size_t j = 0; j < nv; ++j) {
      if (column[j] == t.basis[i]) {
        result.assignment[j] += t.rhs[i];
        break;
      }
    }
  }
  result.status = Status::Optimal;
  result.optimum = problem.objective().evaluate(result.assignment);
  return result;
}

Bounds initial_bounds(const RationalMILP& problem) {
  Bounds b;
  for (const auto& v : problem.variables()) {
    b.lower.push_back(v.lower);
    b.upper.push_back(v.upper);
  }
  return b;
}

}  // namespace

SolveResult solve_lp(const RationalMILP& problem) {
  SolveResult r = solve_with_bounds(problem, initial_bounds(problem));
  r.nodes = 1;
  return r;
}

SolveResult solve_milp(const RationalMILP& problem, const SolverOptions& options) {
  const auto& vars = problem.variables();
  std::vector<std::size_t> binaries;
  for (std::size_t j = 0; j < vars.size(); ++j) {
    if (vars[j].kind == VarKind::Binary) binaries.push_back(j);
  }
  if (binaries.size() > options.max_binaries) {
    throw CapExceededError("MILP has " + std::to_string(binaries.size()) +
                           " binary variables; the cap is " +
                           std::to_string(options.max_binaries));
  }
  const bool minimize = problem.direction() == Direction::Minimize;
  auto better = [&](const Rational& a, const Rational& b) { return minimize ? a < b : a > b; };

  std::optional<SolveResult> incumbent;
  std::size_t nodes = 0;
  std::vector<Bounds> stack{initial_bounds(problem)};
  while (!stack.empty()) {
    Bounds node = std::move(stack.back());
    stack.pop_back();
    if (++nodes > options.node_budget) {
      throw ResourceLimitError("branch-and-bound node budget of " +
                               std::to_string(options.node_budget) + " exhausted");
    }
    SolveResult relax = solve_with_bounds(problem, node);
    if (relax.status == Status::Infeasible) continue;
    if (relax.status == Status::Unbounded) {
      relax.nodes = nodes;
      return relax;
    }
    if (incumbent && !better(relax.optimum, incumbent->optimum)) continue;
    std::optional<std::size_t> branch;
    for (std::size_t j : binaries) {
      const Rational& v = relax.assignment[j];
      if (v != 0 && v != 1) {
        branch = j;
        break;
      }
    }
    if (!branch) {
      incumbent = std::move(relax);
      continue;
    }
    Bounds one = node;
    one.lower[*branch] = 1;
    one.upper[*branch] = Rational(1);
    node.lower[*branch] = 0;
    node.upper[*branch] = Rational(0);
    stack.push_back(std::move(one));
    stack.push_back(std::move(node));
  }
  SolveResult out = incumbent ? std::move(*incumbent) : SolveResult{};
  out.nodes = nodes;
  return out;
}

}  // namespace belfl::lp
