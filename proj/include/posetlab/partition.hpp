#pragma once

// (P, epsilon)-partitions: order-reversing maps P -> {1, 2, ...} that are
// strict across every cover with sign -1. Everything here depends on the
// labeling only through its cover signs.

#include <compare>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "posetlab/poset.hpp"
#include "posetlab/polynomial.hpp"

namespace posetlab {

struct PPartition {
  std::vector<int> values;
  auto operator<=>(const PPartition&) const = default;
};

/// Default 10^6, overridden by the POSETLAB_CAP environment variable.
std::size_t enumeration_cap();

/// Order-reversing, strict on negative covers, all values >= 1.
bool is_partition(const LabeledPoset& lp, const std::vector<int>& values);

/// Omega(n) = sum_i w_i C(n + p - 1 - i, p).
class OrderPolynomial {
 public:
  OrderPolynomial(IntPolynomial w, std::size_t p) : w_(std::move(w)), p_(p) {}

  const IntPolynomial& w() const { return w_; }
  std::size_t p() const { return p_; }

  BigInt operator()(long n) const;
  /// The same polynomial in Q[t].
  RatPolynomial as_polynomial() const;

 private:
  IntPolynomial w_;
  std::size_t p_;
};

/// Some omega inducing the labeling's signs, by greedy smallest-index
/// topological sort of the constraint digraph; nullopt if the signs are not
/// induced by any bijection (the constraint digraph has a cycle).
std::optional<Omega> realizing_omega(const LabeledPoset& lp);

/// Descent generating polynomial of the Jordan-Hoelder set. Sign labelings that
/// no omega induces fall back to the e-vector computed over order ideals.
IntPolynomial w_polynomial(const LabeledPoset& lp);

OrderPolynomial order_polynomial(const LabeledPoset& lp);

/// Direct count of partitions with largest part <= n, by backtracking from the
/// maximal elements down with memoisation on the assigned frontier.
BigInt count_partitions(const LabeledPoset& lp, long n);

/// Lazy enumeration in lexicographic order of values along the processing
/// order (maximal elements first). The labeled poset must outlive the stream.
class PartitionStream {
 public:
  PartitionStream(const LabeledPoset& lp, long n);
  PartitionStream(LabeledPoset&&, long) = delete;

  std::optional<PPartition> next();

 private:
  int lower_bound(std::size_t level) const;
  bool descend(std::size_t level);

  const LabeledPoset* lp_;
  int n_;
  std::vector<std::size_t> order_;
  std::vector<int> values_;
  bool started_ = false;
  bool done_ = false;
};

/// Throws CapExceeded if more than `cap` partitions would be produced.
PartitionStream enumerate_partitions(const LabeledPoset& lp, long n, std::size_t cap = enumeration_cap());

/// e_i = number of partitions whose image is exactly {1, ..., i}, by explicit
/// enumeration. Throws CapExceeded.
EVector e_vector_direct(const LabeledPoset& lp, std::size_t cap = enumeration_cap());

/// e_i counted as chains of order ideals whose layers contain no negative
/// cover. Throws CapExceeded when the poset has more than `cap` ideals.
EVector e_vector_by_ideals(const LabeledPoset& lp, std::size_t cap = enumeration_cap());

/// For two gradings of one poset: Omega(eps; t) == Omega(mu; t + (r(eps) - r(mu))/2)
/// in Q[t], and the shift map xi is a bijection A_n(eps) -> A_{n+(r(eps)-r(mu))/2}(mu)
/// for n <= xi_bound, respecting the four cover cases.
/// Throws DifferentPoset or NotGraded.
bool grading_shift_check(const LabeledPoset& eps, const LabeledPoset& mu, int xi_bound = 3);

struct ReciprocityVerdict {
  bool holds_at_r = false;
  bool graded = false;
  int r = 0;
  /// holds_at_r must agree with graded.
  bool consistent_with_theorem() const { return holds_at_r == graded; }
};

/// Tests Omega(t) == (-1)^p Omega(-t - r) in Q[t] with r the maximal signed
/// length of a maximal chain.
ReciprocityVerdict reciprocity_verdict(const LabeledPoset& lp);

/// Phi(sigma) = sigma + delta applied to every member of A_n(eps).
struct PhiTable {
  long n = 0;
  int r = 0;
  std::vector<std::pair<PPartition, PPartition>> entries;
  /// Every image is a (-eps)-partition with largest part <= n + r.
  bool images_valid = false;
  bool injective = false;
  /// |A_{n+r}(-eps)|.
  BigInt target_size = 0;
  /// Injective with image size equal to target_size.
  bool bijective_onto_bound = false;
  /// Every tau in A_m(-eps), m = max(n + r, p), has tau - delta in A(eps),
  /// without a bound on the preimage's largest part.
  bool every_target_has_preimage = false;
};

/// Throws CapExceeded.
PhiTable phi_table(const LabeledPoset& lp, long n, std::size_t cap = enumeration_cap());

/// 2 e_{p-1} == (p + r - 1) e_p and W'(1)/W(1) == p - 1 - e_{p-1}/e_p.
/// Throws NotGraded.
bool rank_identity_check(const LabeledPoset& lp);

}  // namespace posetlab
