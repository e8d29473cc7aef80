#pragma once

#include <optional>
#include <vector>

#include "posetlab/poset.hpp"

namespace posetlab {

/// Outcome of classifying a cover-sign labeling.
///
/// `rank_function` is present whenever the labeling is consistent (every
/// principal ideal has all of its saturated chains into the top element of
/// equal signed length), even if the poset is not graded. `rank` is present
/// only when graded, i.e. when the rank function is constant on maximal
/// elements.
struct GradingReport {
  bool consistent = false;
  bool graded = false;
  bool dual_consistent = false;
  std::optional<std::vector<int>> rank_function;
  std::optional<int> rank;
};

/// Extremal signed chain lengths.
///   delta(x)      max over saturated chains from x up to a maximal element
///   delta_star(x) max over saturated chains from a minimal element up to x
///   r_max         max over maximal chains
struct DeltaStatistics {
  std::vector<int> delta;
  std::vector<int> delta_star;
  int r_max = 0;
  bool lambda_chain = false;
};

struct ParityReport {
  bool parity_graded = false;
  bool parity_consistent = false;
  /// Signs (-1)^l(x) on each cover (x, y), where l(x) is the length of any
  /// saturated chain from a minimal element to x. Present iff parity consistent.
  std::optional<EdgeSigns> witness;
};

/// Re-expresses an omega labeling by its induced cover signs.
LabeledPoset edge_signs_from_omega(const LabeledPoset& lp);

/// Consistency check alone; returns the rank function when consistent.
std::optional<std::vector<int>> rank_function(const LabeledPoset& lp);

GradingReport classify(const LabeledPoset& lp);

ParityReport parity_classification(const Poset& poset);

/// Omega with rank function in {0, 1}: rank-0 elements get 1..k and rank-1
/// elements get k+1..p, each block in element order.
/// Throws NotConsistent or NotParityConsistent.
LabeledPoset canonical_labeling(const LabeledPoset& lp);

/// True when lp carries an omega whose induced rank function takes values in
/// {0, 1} and omega increases with rank.
bool is_canonical(const LabeledPoset& lp);

/// An omega inducing the same signs, ordered by (rank, element index), so that
/// rho(x) < rho(y) implies omega(x) < omega(y). Throws NotConsistent.
LabeledPoset rank_sorted_omega(const LabeledPoset& lp);

DeltaStatistics delta_statistics(const LabeledPoset& lp);

}  // namespace posetlab
