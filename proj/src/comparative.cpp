#include "belfl/comparative.hpp"

#include <algorithm>
#include <stdexcept>

#include "belfl/error.hpp"
#include "belfl/lpcore.hpp"

namespace belfl {

ComparativeRelation::ComparativeRelation(std::size_t world_count) : world_count_(world_count) {
  if (world_count == 0 || world_count > kMaxRelationWorlds) {
    throw CapExceededError("comparative relations need a frame of 1 to " +
                           std::to_string(kMaxRelationWorlds) + " elements");
  }
  ge_.assign(subset_count() * subset_count(), false);
}

bool ComparativeRelation::ge(WorldSet a, WorldSet b) const {
  return ge_.at(a.bits() * subset_count() + b.bits());
}

void ComparativeRelation::set_ge(WorldSet a, WorldSet b, bool value) {
  ge_.at(a.bits() * subset_count() + b.bits()) = value;
}

bool ComparativeRelation::is_total_preorder() const {
  const std::size_t n = subset_count();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!ge(WorldSet(a), WorldSet(b)) && !ge(WorldSet(b), WorldSet(a))) return false;
      if (!ge(WorldSet(a), WorldSet(b))) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (ge(WorldSet(b), WorldSet(c)) && !ge(WorldSet(a), WorldSet(c))) return false;
      }
    }
  }
  return true;
}

ComparativeRelation ComparativeRelation::from_ranks(
    std::size_t world_count, const std::vector<std::vector<WorldSet>>& ranks) {
  ComparativeRelation rel(world_count);
  std::vector<int> level(rel.subset_count(), -1);
  for (std::size_t r = 0; r < ranks.size(); ++r) {
    for (WorldSet s : ranks[r]) {
      if (s.bits() >= rel.subset_count()) throw Error("subset outside the frame");
      if (level[s.bits()] != -1) throw Error("subset listed in more than one rank");
      level[s.bits()] = static_cast<int>(r);
    }
  }
  for (std::size_t a = 0; a < rel.subset_count(); ++a) {
    if (level[a] == -1) throw NotATotalPreorderError("subset missing from the ranking");
  }
  for (std::size_t a = 0; a < rel.subset_count(); ++a) {
    for (std::size_t b = 0; b < rel.subset_count(); ++b) {
      rel.set_ge(WorldSet(a), WorldSet(b), level[a] <= level[b]);
    }
  }
  return rel;
}

std::vector<std::vector<WorldSet>> ComparativeRelation::ranks() const {
  if (!is_total_preorder()) throw NotATotalPreorderError("relation is not a total preorder");
  std::vector<WorldSet> order;
  for (std::size_t a = 0; a < subset_count(); ++a) order.emplace_back(a);
  std::stable_sort(order.begin(), order.end(),
                   [&](WorldSet a, WorldSet b) { return strictly_greater(a, b); });
  std::vector<std::vector<WorldSet>> out;
  for (WorldSet s : order) {
    if (out.empty() || !equivalent(out.back().front(), s)) out.emplace_back();
    out.back().push_back(s);
  }
  return out;
}

ComparativeRelation induced_relation(const MassFunction& mass) {
  ComparativeRelation rel(mass.world_count());
  const BeliefTable table = belief_table(mass);
  for (std::size_t a = 0; a < rel.subset_count(); ++a) {
    for (std::size_t b = 0; b < rel.subset_count(); ++b) {
      rel.set_ge(WorldSet(a), WorldSet(b), table[WorldSet(a)] >= table[WorldSet(b)]);
    }
  }
  return rel;
}

bool BwReport::holds(const std::string& postulate) const {
  return std::none_of(violations.begin(), violations.end(),
                      [&](const BwViolation& v) { return v.postulate == postulate; });
}

BwReport check_bw(const ComparativeRelation& rel) {
  BwReport report;
  const std::size_t n = rel.subset_count();
  const WorldSet empty{};
  const WorldSet top = WorldSet::full(rel.world_count());
  for (std::size_t ai = 0; ai < n; ++ai) {
    const WorldSet a(ai);
    if (!rel.ge(a, a)) report.violations.push_back({"BW1", "not reflexive", {a}});
    for (std::size_t bi = 0; bi < n; ++bi) {
      const WorldSet b(bi);
      if (ai < bi && !rel.ge(a, b) && !rel.ge(b, a)) {
        report.violations.push_back({"BW1", "incomparable pair", {a, b}});
      }
      if (rel.ge(a, b)) {
        for (std::size_t ci = 0; ci < n; ++ci) {
          const WorldSet c(ci);
          if (rel.ge(b, c) && !rel.ge(a, c)) {
            report.violations.push_back({"BW1", "not transitive", {a, b, c}});
          }
        }
      }
      if (b.subset_of(a) && !rel.ge(a, b)) {
        report.violations.push_back({"BW2", "superset not ranked at least as high", {a, b}});
      }
      if (!b.subset_of(a)) continue;
      for (std::size_t ci = 0; ci < n; ++ci) {
        const WorldSet c(ci);
        if (a.intersects(c)) continue;
        if (rel.ge(b | c, a | c) && !rel.ge(b, a)) {
          report.violations.push_back({"BW3", "equivalence not preserved", {a, b, c}});
        }
      }
    }
  }
  if (rel.ge(empty, top)) {
    report.violations.push_back({"BW4", "empty set ranked at least as high as the frame", {empty, top}});
  }
  return report;
}

std::optional<MassFunction> representable(const ComparativeRelation& rel) {
  const auto levels = rel.ranks();  // throws unless a total preorder
  lp::RationalMILP milp;
  std::vector<lp::VarId> mass(rel.subset_count());
  lp::LinearExpr total;
  for (std::size_t e = 1; e < rel.subset_count(); ++e) {
    mass[e] = milp.add_continuous("m_" + std::to_string(e), 0, std::nullopt);
    total += mass[e];
  }
  milp.add_constraint(total, lp::Sense::Equal, 1, "normalization");
  const lp::VarId eps = milp.add_continuous("eps", 0, Rational(1));
  auto belief = [&](WorldSet a) {
    lp::LinearExpr expr;
    for (std::uint64_t e = a.bits(); e != 0; e = (e - 1) & a.bits()) expr += mass[e];
    return expr;
  };
  // Ties within a level, strict gaps between consecutive levels.
  for (std::size_t r = 0; r < levels.size(); ++r) {
    for (std::size_t i = 1; i < levels[r].size(); ++i) {
      milp.add_constraint(belief(levels[r][0]) - belief(levels[r][i]), lp::Sense::Equal, 0);
    }
    if (r + 1 < levels.size()) {
      milp.add_constraint(belief(levels[r][0]) - belief(levels[r + 1][0]) - eps,
                          lp::Sense::GreaterEq, 0);
    }
  }
  milp.set_objective(lp::LinearExpr(eps), lp::Direction::Maximize);
  const lp::SolveResult result = lp::solve_lp(milp);
  if (result.status != lp::Status::Optimal || result.optimum <= 0) return std::nullopt;

  std::map<WorldSet, Rational> masses;
  for (std::size_t e = 1; e < rel.subset_count(); ++e) {
    const Rational& v = result.assignment[mass[e].index];
    if (v != 0) masses.emplace(WorldSet(e), v);
  }
  MassFunction witness(rel.world_count(), std::move(masses));
  if (!(induced_relation(witness) == rel)) {
    throw std::logic_error("representation witness does not induce the relation");
  }
  return witness;
}

std::vector<ComparativeRelation> enumerate_total_preorders(std::size_t world_count) {
  if (world_count > 2) {
    throw CapExceededError("exhaustive preorder enumeration is limited to frames of 2 elements");
  }
  const std::size_t k = std::size_t{1} << world_count;
  std::vector<ComparativeRelation> out;
  // Ordered set partitions of the subsets are exactly the surjections onto
  // an initial segment of levels; enumerate all level maps and keep those.
  auto emit = [&](const std::vector<std::size_t>& lv) {
    std::size_t used = *std::max_element(lv.begin(), lv.end()) + 1;
    std::vector<std::vector<WorldSet>> ranks(used);
    for (std::size_t s = 0; s < k; ++s) ranks[lv[s]].push_back(WorldSet(s));
    out.push_back(ComparativeRelation::from_ranks(world_count, ranks));
  };
  std::vector<std::size_t> digits(k, 0);
  for (;;) {
    const std::size_t used = *std::max_element(digits.begin(), digits.end()) + 1;
    bool surjective = true;
    for (std::size_t r = 0; r < used && surjective; ++r) {
      surjective = std::find(digits.begin(), digits.end(), r) != digits.end();
    }
    if (surjective) emit(digits);
    std::size_t i = 0;
    while (i < k && ++digits[i] == k) digits[i++] = 0;
    if (i == k) break;
  }
  return out;
}

PFormula at_least_as_believed(const PropFormula& phi, const PropFormula& psi) {
  return PFormula::implication(PFormula::belief(psi), PFormula::belief(phi));
}

PFormula at_least_twice_as_believed(const PropFormula& phi, const PropFormula& psi) {
  return PFormula::implication(
      PFormula::binary(LukOp::StrongOr, PFormula::belief(psi), PFormula::belief(psi)),
      PFormula::belief(phi));
}

EntailmentVerdict compare_query(const Theory& theory, const PropFormula& phi,
                                const PropFormula& psi, const Vocabulary& vocab, bool twice,
                                const EntailOptions& options) {
  return entails(theory,
                 twice ? at_least_twice_as_believed(phi, psi) : at_least_as_believed(phi, psi),
                 vocab, options);
}

std::string describe_subset(WorldSet set, const std::vector<std::string>& elements) {
  std::string out = "{";
  bool first = true;
  for (std::size_t w : set.worlds()) {
    if (!first) out += ",";
    out += w < elements.size() ? elements[w] : "w" + std::to_string(w);
    first = false;
  }
  return out + "}";
}

}  // namespace belfl
