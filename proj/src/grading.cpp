#include "posetlab/grading.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace posetlab {

LabeledPoset edge_signs_from_omega(const LabeledPoset& lp) {
  (void)lp.omega();
  return LabeledPoset(lp.poset(), lp.edge_signs());
}

std::optional<std::vector<int>> rank_function(const LabeledPoset& lp) {
  const Poset& poset = lp.poset();
  const std::size_t p = poset.size();
  std::vector<int> rho(p, 0);
  for (std::size_t y : poset.topological_order()) {
    bool first = true;
    bool clash = false;
    for_each_bit(poset.lower_covers(y), [&](std::size_t x) {
      const int via = rho[x] + lp.sign(x, y);
      if (first) {
        rho[y] = via;
        first = false;
      } else if (via != rho[y]) {
        clash = true;
      }
    });
    if (clash) return std::nullopt;
  }
  return rho;
}

GradingReport classify(const LabeledPoset& lp) {
  GradingReport report;
  report.rank_function = rank_function(lp);
  report.consistent = report.rank_function.has_value();
  if (report.consistent) {
    const auto& rho = *report.rank_function;
    std::optional<int> common;
    bool constant = true;
    for_each_bit(lp.poset().maximal(), [&](std::size_t z) {
      if (!common) common = rho[z];
      else if (*common != rho[z]) constant = false;
    });
    report.graded = constant;
    if (constant) report.rank = common;
  }
  report.dual_consistent = rank_function(dual(lp)).has_value();
  return report;
}

ParityReport parity_classification(const Poset& poset) {
  const std::size_t p = poset.size();
  // Bit 0: some chain of even length reaches x; bit 1: some chain of odd length.
  std::vector<unsigned> parities(p, 0);
  for (std::size_t y : poset.topological_order()) {
    if (poset.lower_covers(y) == 0) {
      parities[y] = 1U;
      continue;
    }
    unsigned acc = 0;
    for_each_bit(poset.lower_covers(y), [&](std::size_t x) {
      acc |= ((parities[x] & 1U) << 1) | ((parities[x] >> 1) & 1U);
    });
    parities[y] = acc;
  }
  ParityReport report;
  report.parity_consistent = std::all_of(parities.begin(), parities.end(), [](unsigned s) { return s != 3U; });
  unsigned at_top = 0;
  for_each_bit(poset.maximal(), [&](std::size_t z) { at_top |= parities[z]; });
  report.parity_graded = report.parity_consistent && at_top != 3U;
  if (report.parity_consistent) {
    EdgeSigns witness;
    for (const auto& e : poset.covers()) witness.signs.push_back(parities[e.lower] == 1U ? 1 : -1);
    report.witness = std::move(witness);
  }
  return report;
}

LabeledPoset canonical_labeling(const LabeledPoset& lp) {
  if (!rank_function(lp)) throw Error(ErrorCode::NotConsistent, "labeling is not consistent");
  const auto parity = parity_classification(lp.poset());
  if (!parity.parity_consistent) throw Error(ErrorCode::NotParityConsistent, "poset is not parity consistent");
  const LabeledPoset witnessed(lp.poset(), *parity.witness);
  return rank_sorted_omega(witnessed);
}

bool is_canonical(const LabeledPoset& lp) {
  if (!lp.has_omega()) return false;
  const auto rho = rank_function(lp);
  if (!rho) return false;
  const auto& labels = lp.omega().labels;
  for (std::size_t x = 0; x < rho->size(); ++x) {
    if ((*rho)[x] != 0 && (*rho)[x] != 1) return false;
    for (std::size_t y = 0; y < rho->size(); ++y) {
      if ((*rho)[x] < (*rho)[y] && labels[x] > labels[y]) return false;
    }
  }
  return true;
}

LabeledPoset rank_sorted_omega(const LabeledPoset& lp) {
  const auto rho = rank_function(lp);
  if (!rho) throw Error(ErrorCode::NotConsistent, "labeling is not consistent");
  std::vector<std::size_t> order(lp.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return (*rho)[a] < (*rho)[b]; });
  Omega omega;
  omega.labels.assign(lp.size(), 0);
  for (std::size_t k = 0; k < order.size(); ++k) omega.labels[order[k]] = static_cast<int>(k + 1);
  return LabeledPoset(lp.poset(), std::move(omega));
}

DeltaStatistics delta_statistics(const LabeledPoset& lp) {
  const Poset& poset = lp.poset();
  const std::size_t p = poset.size();
  const auto order = poset.topological_order();
  constexpr int kUnset = std::numeric_limits<int>::min();

  DeltaStatistics stats;
  stats.delta.assign(p, kUnset);
  stats.delta_star.assign(p, kUnset);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t x = *it;
    if (poset.upper_covers(x) == 0) {
      stats.delta[x] = 0;
      continue;
    }
    for_each_bit(poset.upper_covers(x), [&](std::size_t y) {
      stats.delta[x] = std::max(stats.delta[x], stats.delta[y] + lp.sign(x, y));
    });
  }
  for (std::size_t y : order) {
    if (poset.lower_covers(y) == 0) {
      stats.delta_star[y] = 0;
      continue;
    }
    for_each_bit(poset.lower_covers(y), [&](std::size_t x) {
      stats.delta_star[y] = std::max(stats.delta_star[y], stats.delta_star[x] + lp.sign(x, y));
    });
  }
  stats.r_max = kUnset;
  for_each_bit(poset.minimal(), [&](std::size_t x) { stats.r_max = std::max(stats.r_max, stats.delta[x]); });
  stats.lambda_chain = true;
  for (std::size_t x = 0; x < p; ++x) {
    if (stats.delta[x] + stats.delta_star[x] != stats.r_max) stats.lambda_chain = false;
  }
  return stats;
}

}  // namespace posetlab
