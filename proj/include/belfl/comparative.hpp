#pragma once

// Comparative belief: relations on the power set of a finite frame, the
// BW1-BW4 postulates, and representability by a belief function.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "belfl/belief.hpp"
#include "belfl/entail.hpp"

namespace belfl {

/// Largest frame accepted for relation queries (16 subsets).
inline constexpr std::size_t kMaxRelationWorlds = 4;

/// A >= B matrix over all subsets of a frame of `world_count` elements.
class ComparativeRelation {
 public:
  explicit ComparativeRelation(std::size_t world_count);

  std::size_t world_count() const { return world_count_; }
  std::size_t subset_count() const { return std::size_t{1} << world_count_; }
  bool ge(WorldSet a, WorldSet b) const;
  void set_ge(WorldSet a, WorldSet b, bool value);
  bool strictly_greater(WorldSet a, WorldSet b) const { return ge(a, b) && !ge(b, a); }
  bool equivalent(WorldSet a, WorldSet b) const { return ge(a, b) && ge(b, a); }

  bool is_total_preorder() const;

  /// Total preorder from ranked levels; level 0 is the top. Every subset
  /// must appear exactly once.
  static ComparativeRelation from_ranks(std::size_t world_count,
                                        const std::vector<std::vector<WorldSet>>& ranks);
  /// Inverse of from_ranks; requires a total preorder.
  std::vector<std::vector<WorldSet>> ranks() const;

  bool operator==(const ComparativeRelation&) const = default;

 private:
  std::size_t world_count_;
  std::vector<bool> ge_;
};

/// A >= B iff Bel(A) >= Bel(B).
ComparativeRelation induced_relation(const MassFunction& mass);

struct BwViolation {
  std::string postulate;  // "BW1", ...
  std::string detail;
  std::vector<WorldSet> witness;
};

struct BwReport {
  std::vector<BwViolation> violations;
  bool holds(const std::string& postulate) const;
  bool all_hold() const { return violations.empty(); }
};

BwReport check_bw(const ComparativeRelation& relation);

/// Maximises eps subject to Bel(A) = Bel(B) on ties and
/// Bel(A) >= Bel(B) + eps on strict pairs. Returns the witness iff eps > 0.
/// Throws NotATotalPreorderError otherwise.
std::optional<MassFunction> representable(const ComparativeRelation& relation);

/// Every total preorder on the subsets of a frame (the count is the
/// ordered Bell number of 2^world_count).
std::vector<ComparativeRelation> enumerate_total_preorders(std::size_t world_count);

/// B(psi) -> B(phi): "phi is at least as believed as psi".
PFormula at_least_as_believed(const PropFormula& phi, const PropFormula& psi);
/// B(psi) (+) B(psi) -> B(phi): bel(phi) >= min(2 bel(psi), 1).
PFormula at_least_twice_as_believed(const PropFormula& phi, const PropFormula& psi);

/// Decides whether phi is at least as believed as psi in every model of T.
EntailmentVerdict compare_query(const Theory& theory, const PropFormula& phi,
                                const PropFormula& psi, const Vocabulary& vocab,
                                bool twice = false, const EntailOptions& options = {});

/// {a,b} style rendering of a subset using element names.
std::string describe_subset(WorldSet set, const std::vector<std::string>& elements);

}  // namespace belfl
