#include "posetlab/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <tuple>

#include "posetlab/grading.hpp"

namespace posetlab {

namespace {

std::vector<std::string> numbered_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return names;
}

/// Strict-order bits of `less` read through `perm`, row-major over ordered pairs.
std::uint64_t relation_bits(const std::vector<Mask>& above, const std::vector<std::size_t>& perm) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = 0; j < perm.size(); ++j) {
      if (i == j) continue;
      code = (code << 1) | (has(above[perm[i]], perm[j]) ? 1U : 0U);
    }
  }
  return code;
}

/// Minimises relation_bits over orderings that sort elements by a refined
/// invariant and permute freely inside each invariant class. Returns the
/// minimising order.
std::pair<std::uint64_t, std::vector<std::size_t>> canonical_order(const Poset& poset) {
  const std::size_t n = poset.size();
  using Invariant = std::vector<std::size_t>;
  std::vector<Invariant> inv(n);
  for (std::size_t x = 0; x < n; ++x) {
    inv[x] = {popcount(poset.below(x)), popcount(poset.above(x)), popcount(poset.lower_covers(x)),
              popcount(poset.upper_covers(x))};
  }
  // Two refinement rounds: append the sorted class ids of lower and upper covers.
  for (int round = 0; round < 2; ++round) {
    std::vector<Invariant> distinct(inv.begin(), inv.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    auto id = [&](std::size_t x) {
      return static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), inv[x]) - distinct.begin());
    };
    std::vector<Invariant> next(n);
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<std::size_t> down, up;
      for_each_bit(poset.lower_covers(x), [&](std::size_t y) { down.push_back(id(y)); });
      for_each_bit(poset.upper_covers(x), [&](std::size_t y) { up.push_back(id(y)); });
      std::sort(down.begin(), down.end());
      std::sort(up.begin(), up.end());
      next[x] = {id(x), 1000};
      next[x].insert(next[x].end(), down.begin(), down.end());
      next[x].push_back(1001);
      next[x].insert(next[x].end(), up.begin(), up.end());
    }
    inv = std::move(next);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return inv[a] < inv[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> classes;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && inv[order[j]] == inv[order[i]]) ++j;
    classes.emplace_back(i, j);
    i = j;
  }

  std::vector<Mask> above(n);
  for (std::size_t x = 0; x < n; ++x) above[x] = poset.above(x);

  std::uint64_t best = ~std::uint64_t{0};
  std::vector<std::size_t> best_order = order;
  // Odometer over the within-class permutations.
  for (auto& [lo, hi] : classes) std::sort(order.begin() + static_cast<long>(lo), order.begin() + static_cast<long>(hi));
  while (true) {
    const std::uint64_t code = relation_bits(above, order);
    if (code < best) {
      best = code;
      best_order = order;
    }
    std::size_t c = classes.size();
    while (c > 0) {
      auto [lo, hi] = classes[c - 1];
      if (std::next_permutation(order.begin() + static_cast<long>(lo), order.begin() + static_cast<long>(hi))) break;
      --c;
    }
    if (c == 0) break;
  }
  return {best, best_order};
}

Poset relabeled(const Poset& poset, const std::vector<std::size_t>& order) {
  std::vector<std::size_t> position(poset.size());
  for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = k;
  std::vector<std::pair<std::size_t, std::size_t>> relations;
  for (const auto& c : poset.covers()) relations.emplace_back(position[c.lower], position[c.upper]);
  return Poset::from_indexed(numbered_names(poset.size()), relations);
}

}  // namespace

std::uint64_t isomorphism_code(const Poset& poset) {
  if (poset.size() > 8) throw Error(ErrorCode::TooLarge, "isomorphism codes support at most 8 elements");
  return canonical_order(poset).first;
}

std::vector<Poset> exhaustive_posets(std::size_t size) {
  if (size > 7) throw Error(ErrorCode::TooLarge, "exhaustive generation supports at most 7 elements");
  if (size == 0) return {};
  std::vector<std::pair<std::uint64_t, Poset>> level;
  level.emplace_back(0, Poset::from_indexed({"1"}, {}));
  for (std::size_t n = 2; n <= size; ++n) {
    std::set<std::uint64_t> seen;
    std::vector<std::pair<std::uint64_t, Poset>> next;
    for (const auto& [code, base] : level) {
      // The new element sits above exactly the down-set generated by `gens`,
      // where gens ranges over antichains.
      const std::size_t m = base.size();
      for (Mask gens = 0; gens < bit(m); ++gens) {
        bool antichain = true;
        for_each_bit(gens, [&](std::size_t x) {
          if ((base.above(x) & gens) != 0) antichain = false;
        });
        if (!antichain) continue;
        std::vector<std::pair<std::size_t, std::size_t>> relations;
        for (const auto& c : base.covers()) relations.emplace_back(c.lower, c.upper);
        for_each_bit(gens, [&](std::size_t x) { relations.emplace_back(x, m); });
        Poset grown = Poset::from_indexed(numbered_names(n), relations);
        auto [grown_code, order] = canonical_order(grown);
        if (seen.insert(grown_code).second) next.emplace_back(grown_code, relabeled(grown, order));
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    level = std::move(next);
  }
  std::vector<Poset> out;
  for (auto& entry : level) out.push_back(std::move(entry.second));
  return out;
}

std::vector<Poset> random_posets(std::size_t size, std::uint64_t seed, std::size_t count) {
  if (size == 0) return {};
  if (size > kMaxElements) throw Error(ErrorCode::TooLarge, "at most 64 elements");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Poset> out;
  for (std::size_t k = 0; k < count; ++k) {
    const double q = density(rng);
    std::vector<std::pair<std::size_t, std::size_t>> relations;
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) {
        if (coin(rng) < q) relations.emplace_back(i, j);
      }
    }
    out.push_back(Poset::from_indexed(numbered_names(size), relations));
  }
  return out;
}

std::vector<LabeledPoset> labelings_for(const Poset& poset, LabelingScope scope) {
  std::vector<LabeledPoset> out;
  if (scope == LabelingScope::Canonical) {
    const auto parity = parity_classification(poset);
    if (parity.parity_consistent) out.push_back(rank_sorted_omega(LabeledPoset(poset, *parity.witness)));
    return out;
  }
  const std::size_t edges = poset.edge_count();
  if (edges > kMaxEpsilonEdges) {
    throw Error(ErrorCode::TooManyEdges, std::to_string(edges) + " covers exceed the limit of 12");
  }
  for (std::uint64_t counter = 0; counter < (std::uint64_t{1} << edges); ++counter) {
    EdgeSigns signs;
    for (std::size_t e = 0; e < edges; ++e) signs.signs.push_back(((counter >> e) & 1U) != 0 ? -1 : 1);
    out.emplace_back(poset, std::move(signs));
  }
  return out;
}

}  // namespace posetlab
