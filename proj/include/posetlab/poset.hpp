#pragma once

// Finite posets stored as Hasse diagrams over dense indices, plus the two
// labeling forms (a vertex bijection omega or a sign on every cover).

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "posetlab/error.hpp"

namespace posetlab {

/// Subset of elements, bit i = element with index i.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxElements = 64;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }
constexpr bool has(Mask m, std::size_t i) { return (m >> i) & 1U; }
constexpr std::size_t popcount(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

/// Calls f(i) for every set bit, ascending.
template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    const auto i = static_cast<std::size_t>(std::countr_zero(m));
    f(i);
    m &= m - 1;
  }
}

/// A cover relation lower < upper with nothing in between.
struct Edge {
  std::size_t lower = 0;
  std::size_t upper = 0;
  auto operator<=>(const Edge&) const = default;
};

class Poset {
 public:
  /// Builds the poset generated by `relations` (any pairs x < y, redundant
  /// transitive pairs allowed). The stored covers are the transitive reduction.
  static Poset from_cover_relations(std::vector<std::string> elements,
                                    const std::vector<std::pair<std::string, std::string>>& relations);

  /// Same as above with relations given by index into `elements`.
  static Poset from_indexed(std::vector<std::string> elements,
                            const std::vector<std::pair<std::size_t, std::size_t>>& relations);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws UnknownElement.
  std::size_t index_of(std::string_view name) const;

  /// Covers sorted lexicographically by (lower, upper); the position in this
  /// list is the edge index used by EdgeSigns.
  const std::vector<Edge>& covers() const { return covers_; }
  std::size_t edge_count() const { return covers_.size(); }
  std::optional<std::size_t> edge_index(std::size_t lower, std::size_t upper) const;

  bool less(std::size_t x, std::size_t y) const { return has(above_[x], y); }
  bool leq(std::size_t x, std::size_t y) const { return x == y || less(x, y); }
  bool comparable(std::size_t x, std::size_t y) const { return leq(x, y) || leq(y, x); }

  Mask above(std::size_t x) const { return above_[x]; }
  Mask below(std::size_t x) const { return below_[x]; }
  Mask upper_covers(std::size_t x) const { return upper_covers_[x]; }
  Mask lower_covers(std::size_t x) const { return lower_covers_[x]; }

  Mask all() const { return size() == 64 ? ~Mask{0} : bit(size()) - 1; }
  Mask minimal() const;
  Mask maximal() const;

  /// Indices in an order compatible with the poset (ascending index among
  /// currently minimal elements).
  std::vector<std::size_t> topological_order() const;

  /// Same names in the same order and the same covers.
  bool operator==(const Poset& other) const {
    return names_ == other.names_ && covers_ == other.covers_;
  }

 private:
  Poset() = default;

  std::vector<std::string> names_;
  std::vector<Edge> covers_;
  std::vector<Mask> above_;
  std::vector<Mask> below_;
  std::vector<Mask> upper_covers_;
  std::vector<Mask> lower_covers_;
};

/// A bijection element -> {1, ..., p}, indexed by element.
struct Omega {
  std::vector<int> labels;
  bool operator==(const Omega&) const = default;
};

/// A sign in {-1, +1} per cover, indexed like Poset::covers().
struct EdgeSigns {
  std::vector<int> signs;
  bool operator==(const EdgeSigns&) const = default;
};

class LabeledPoset {
 public:
  /// Throws InvalidLabeling unless labels are a bijection onto 1..p.
  LabeledPoset(Poset poset, Omega omega);
  /// Throws InvalidLabeling unless there is one sign in {-1,+1} per cover.
  LabeledPoset(Poset poset, EdgeSigns signs);

  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }

  bool has_omega() const { return std::holds_alternative<Omega>(labeling_); }
  /// Throws MissingOmega for the EdgeSigns form.
  const Omega& omega() const;
  /// The induced cover signs (computed from omega when needed).
  const EdgeSigns& edge_signs() const { return signs_; }
  int sign(std::size_t edge) const { return signs_.signs[edge]; }
  int sign(std::size_t lower, std::size_t upper) const;

  /// Same poset and same labeling form/values.
  bool operator==(const LabeledPoset& other) const {
    return poset_ == other.poset_ && labeling_ == other.labeling_;
  }

 private:
  Poset poset_;
  std::variant<Omega, EdgeSigns> labeling_;
  EdgeSigns signs_;
};

using LinearExtension = std::vector<std::size_t>;
using Permutation = std::vector<int>;

/// Lazily yields the linear extensions of a poset in lexicographic order of
/// index sequences. The poset must outlive the stream.
class LinearExtensionStream {
 public:
  explicit LinearExtensionStream(const Poset& poset) : poset_(&poset) {}
  explicit LinearExtensionStream(Poset&&) = delete;

  std::optional<LinearExtension> next();

 private:
  std::optional<std::size_t> first_available(std::size_t from) const;
  void fill();

  const Poset* poset_;
  LinearExtension seq_;
  Mask placed_ = 0;
  bool started_ = false;
  bool done_ = false;
};

/// Jordan-Hoelder set: omega(x_1)...omega(x_p) over linear extensions, in the
/// same order as LinearExtensionStream.
class JordanHolderStream {
 public:
  /// Throws MissingOmega.
  explicit JordanHolderStream(const LabeledPoset& lp);
  explicit JordanHolderStream(LabeledPoset&&) = delete;

  std::optional<Permutation> next();

 private:
  const LabeledPoset* lp_;
  LinearExtensionStream extensions_;
};

inline LinearExtensionStream linear_extensions(const Poset& poset) { return LinearExtensionStream(poset); }
inline JordanHolderStream jordan_holder_set(const LabeledPoset& lp) { return JordanHolderStream(lp); }

std::size_t count_linear_extensions(const Poset& poset);

/// Every saturated chain from a minimal to a maximal element.
std::vector<std::vector<std::size_t>> maximal_chains(const Poset& poset);

/// Induced subposet on `members` (names and relative order preserved).
Poset induced_subposet(const Poset& poset, Mask members);

/// The induced subposet on {x : x <= y}.
Poset principal_ideal(const Poset& poset, std::size_t y);

/// Order generated by the old order plus x < y. Throws AlreadyComparable.
Poset extend_with_relation(const Poset& poset, std::size_t x, std::size_t y);

/// Order reversed, every cover sign negated. Omega labels are kept as is,
/// since the same omega induces exactly the negated signs on reversed covers.
LabeledPoset dual(const LabeledPoset& lp);

/// The labeling -epsilon on the same poset. Omega becomes p + 1 - omega.
LabeledPoset negated(const LabeledPoset& lp);

/// Disjoint union; names of `b` that collide with `a` get a "'" suffix.
Poset disjoint_union(const Poset& a, const Poset& b);

}  // namespace posetlab
