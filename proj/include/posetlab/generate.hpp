#pragma once

// Poset corpora for the verification suites, and the labelings attached to
// each poset.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "posetlab/poset.hpp"

namespace posetlab {

/// Isomorphism-invariant code: equal for two posets iff they are isomorphic.
/// Supports up to 8 elements; throws TooLarge beyond.
std::uint64_t isomorphism_code(const Poset& poset);

/// One representative per isomorphism class with exactly `size` elements,
/// named "1".."size" so that index order is a linear extension. Sorted by
/// isomorphism_code. Throws TooLarge above 7.
std::vector<Poset> exhaustive_posets(std::size_t size);

/// `count` pseudorandom posets with exactly `size` elements: a random DAG on
/// index order with a per-poset edge density, then transitive reduction.
/// Deterministic in `seed`.
std::vector<Poset> random_posets(std::size_t size, std::uint64_t seed, std::size_t count);

enum class LabelingScope { Canonical, AllEpsilon };

inline constexpr std::size_t kMaxEpsilonEdges = 12;

/// Canonical scope: the rank-sorted omega of the parity witness, when the
/// poset is parity consistent (zero or one labeling). AllEpsilon: every sign
/// assignment, with bit e of the counter set meaning cover e gets -1.
/// Throws TooManyEdges for AllEpsilon above 12 covers.
std::vector<LabeledPoset> labelings_for(const Poset& poset, LabelingScope scope);

}  // namespace posetlab
