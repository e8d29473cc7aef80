#pragma once

// Splitting at rank-adjacent incomparable pairs, saturated decompositions,
// ordinal sums with signed glue, and the Charney-Davis quantity.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "posetlab/polynomial.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

/// Name-keyed description of a labeled poset: element names in order plus the
/// sorted list of (lower, upper, sign) covers. Two labeled posets with the same
/// key have the same order and the same cover signs.
std::string structure_key(const LabeledPoset& lp);

/// Same element set, same covers and same signs, ignoring element order and the
/// particular omega.
bool same_structure(const LabeledPoset& a, const LabeledPoset& b);

/// Closes the order with x < y and with y < x respectively. Omega labelings
/// are kept as given and must satisfy omega(x) < omega(y); sign labelings give
/// the new cover the sign rho(upper) - rho(lower).
/// Throws NotConsistent, BadRankGap, Comparable, NotCanonical.
std::pair<LabeledPoset, LabeledPoset> split_at_pair(const LabeledPoset& lp, std::size_t x, std::size_t y);

/// Throws NotConsistent.
bool is_saturated(const LabeledPoset& lp);

enum class SplitPolicy { LowestRankFirst, HighestRankFirst };

struct SaturatedDecomposition {
  /// Sorted by structure_key.
  std::vector<LabeledPoset> parts;
};

/// Splits until every part is saturated. Inputs whose omega is not monotone in
/// the rank function (or that carry bare signs) are first relabeled with
/// rank_sorted_omega, which induces the same signs. Throws NotConsistent.
SaturatedDecomposition saturated_decomposition(const LabeledPoset& lp,
                                               SplitPolicy policy = SplitPolicy::LowestRankFirst);

/// Every element of `a` below every element of `b`; the covers from maximal(a)
/// to minimal(b) carry `sign`. Colliding names in `b` get a "'" suffix.
/// Two omega labelings combine into an omega (b shifted up for +1, a shifted up
/// for -1); otherwise the result carries signs.
LabeledPoset ordinal_sum(const LabeledPoset& a, const LabeledPoset& b, int sign);

/// W of the sum against W(a) W(b), times t for sign -1, all by descent counts.
bool ordinal_sum_w_check(const LabeledPoset& a, const LabeledPoset& b, int sign);

struct OrdinalSumSpec {
  std::vector<LabeledPoset> blocks;
  /// glue[i] joins blocks[i] and blocks[i + 1].
  std::vector<int> glue;

  std::vector<std::size_t> block_sizes() const;
  LabeledPoset reconstruct() const;
};

/// Antichain blocks A_0, A_1, ... with glue +1, -1, +1, ...
/// Throws NotSaturated, NotCanonical.
OrdinalSumSpec antichain_decomposition(const LabeledPoset& lp);

/// (-1)^{(p-1-r)/2} W(-1), and 0 when p - 1 - r is odd. Throws NotGraded.
BigInt charney_davis(const LabeledPoset& lp);

/// Reverse alternating members of the Jordan-Hoelder set whose maximal
/// constant-rank factors all have odd length. Throws NotCanonical, NotGraded.
BigInt reverse_alternating_count(const LabeledPoset& lp);

bool is_reverse_alternating(const Permutation& pi);

/// (-1)^{(n-1)/2} A_n(-1) against a scan of all permutations of n letters.
bool eulerian_cd_check(std::size_t n);

}  // namespace posetlab
