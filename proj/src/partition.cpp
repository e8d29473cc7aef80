#include "posetlab/partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>

#include "posetlab/grading.hpp"

namespace posetlab {

std::size_t enumeration_cap() {
  if (const char* env = std::getenv("POSETLAB_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return 1'000'000;
}

bool is_partition(const LabeledPoset& lp, const std::vector<int>& values) {
  const Poset& poset = lp.poset();
  if (values.size() != poset.size()) return false;
  if (std::any_of(values.begin(), values.end(), [](int v) { return v < 1; })) return false;
  for (std::size_t e = 0; e < poset.edge_count(); ++e) {
    const auto& c = poset.covers()[e];
    const int lo = values[c.lower];
    const int hi = values[c.upper];
    if (lp.sign(e) == 1 ? lo < hi : lo <= hi) return false;
  }
  return true;
}

BigInt OrderPolynomial::operator()(long n) const {
  BigInt total = 0;
  const auto& w = w_.coefficients();
  for (std::size_t i = 0; i < w.size(); ++i) {
    total += w[i] * binomial(BigInt(n + static_cast<long>(p_) - 1 - static_cast<long>(i)), static_cast<long>(p_));
  }
  return total;
}

RatPolynomial OrderPolynomial::as_polynomial() const {
  RatPolynomial total;
  const auto& w = w_.coefficients();
  for (std::size_t i = 0; i < w.size(); ++i) {
    total += binomial_polynomial(static_cast<long>(p_) - 1 - static_cast<long>(i), p_) * Rational(w[i]);
  }
  return total;
}

std::optional<Omega> realizing_omega(const LabeledPoset& lp) {
  const Poset& poset = lp.poset();
  const std::size_t p = poset.size();
  // before[y] = elements whose label must be smaller than y's.
  std::vector<Mask> before(p, 0);
  for (std::size_t e = 0; e < poset.edge_count(); ++e) {
    const auto& c = poset.covers()[e];
    if (lp.sign(e) == 1) before[c.upper] |= bit(c.lower);
    else before[c.lower] |= bit(c.upper);
  }
  Omega omega;
  omega.labels.assign(p, 0);
  Mask done = 0;
  for (int label = 1; label <= static_cast<int>(p); ++label) {
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < p && !pick; ++i) {
      if (!has(done, i) && (before[i] & ~done) == 0) pick = i;
    }
    if (!pick) return std::nullopt;
    omega.labels[*pick] = label;
    done |= bit(*pick);
  }
  return omega;
}

namespace {

IntPolynomial descent_polynomial(const LabeledPoset& lp) {
  std::vector<BigInt> counts(lp.size(), BigInt(0));
  JordanHolderStream stream(lp);
  while (auto pi = stream.next()) {
    std::size_t des = 0;
    for (std::size_t i = 0; i + 1 < pi->size(); ++i) {
      if ((*pi)[i] > (*pi)[i + 1]) ++des;
    }
    counts[des] += 1;
  }
  return IntPolynomial(std::move(counts));
}

}  // namespace

IntPolynomial w_polynomial(const LabeledPoset& lp) {
  if (lp.has_omega()) return descent_polynomial(lp);
  if (auto omega = realizing_omega(lp)) return descent_polynomial(LabeledPoset(lp.poset(), std::move(*omega)));
  return e_vector_by_ideals(lp).to_w();
}

OrderPolynomial order_polynomial(const LabeledPoset& lp) { return OrderPolynomial(w_polynomial(lp), lp.size()); }

namespace {

/// Elements ordered maximal-first so each element's upper covers are assigned
/// before it.
std::vector<std::size_t> top_down_order(const Poset& poset) {
  auto order = poset.topological_order();
  std::reverse(order.begin(), order.end());
  return order;
}

int required_minimum(const LabeledPoset& lp, std::size_t x, const std::vector<int>& values) {
  int lb = 1;
  for_each_bit(lp.poset().upper_covers(x), [&](std::size_t y) {
    lb = std::max(lb, values[y] + (lp.sign(x, y) == -1 ? 1 : 0));
  });
  return lb;
}

class PartitionCounter {
 public:
  PartitionCounter(const LabeledPoset& lp, int n) : lp_(lp), n_(n), order_(top_down_order(lp.poset())) {
    const std::size_t p = order_.size();
    values_.assign(p, 0);
    frontier_.resize(p + 1);
    memo_.resize(p + 1);
    Mask assigned = 0;
    for (std::size_t k = 0; k <= p; ++k) {
      for_each_bit(assigned, [&](std::size_t x) {
        if ((lp.poset().lower_covers(x) & ~assigned) != 0) frontier_[k].push_back(x);
      });
      if (k < p) assigned |= bit(order_[k]);
    }
  }

  BigInt count(std::size_t k) {
    if (k == order_.size()) return 1;
    std::vector<int> key;
    key.reserve(frontier_[k].size());
    for (std::size_t x : frontier_[k]) key.push_back(values_[x]);
    if (auto it = memo_[k].find(key); it != memo_[k].end()) return it->second;

    const std::size_t x = order_[k];
    BigInt total = 0;
    for (int v = required_minimum(lp_, x, values_); v <= n_; ++v) {
      values_[x] = v;
      total += count(k + 1);
    }
    values_[x] = 0;
    memo_[k].emplace(std::move(key), total);
    return total;
  }

 private:
  const LabeledPoset& lp_;
  int n_;
  std::vector<std::size_t> order_;
  std::vector<int> values_;
  std::vector<std::vector<std::size_t>> frontier_;
  std::vector<std::map<std::vector<int>, BigInt>> memo_;
};

}  // namespace

BigInt count_partitions(const LabeledPoset& lp, long n) {
  if (n <= 0) return 0;
  PartitionCounter counter(lp, static_cast<int>(n));
  return counter.count(0);
}

PartitionStream::PartitionStream(const LabeledPoset& lp, long n)
    : lp_(&lp), n_(static_cast<int>(std::max(0L, n))), order_(top_down_order(lp.poset())) {
  values_.assign(lp.size(), 0);
}

int PartitionStream::lower_bound(std::size_t level) const { return required_minimum(*lp_, order_[level], values_); }

bool PartitionStream::descend(std::size_t level) {
  for (std::size_t k = level; k < order_.size(); ++k) {
    const int lb = lower_bound(k);
    if (lb > n_) return false;
    values_[order_[k]] = lb;
  }
  return true;
}

std::optional<PPartition> PartitionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (descend(0)) return PPartition{values_};
    done_ = true;
    return std::nullopt;
  }
  // Increment the deepest level that still has room, then refill below it.
  // Raising a value only raises bounds further down, so a failed refill means
  // that level is exhausted as well.
  for (std::size_t k = order_.size(); k-- > 0;) {
    const std::size_t x = order_[k];
    if (values_[x] < n_) {
      ++values_[x];
      if (descend(k + 1)) return PPartition{values_};
    }
  }
  done_ = true;
  return std::nullopt;
}

PartitionStream enumerate_partitions(const LabeledPoset& lp, long n, std::size_t cap) {
  const BigInt total = count_partitions(lp, n);
  if (total > BigInt(static_cast<unsigned long>(cap))) {
    throw Error(ErrorCode::CapExceeded,
                total.get_str() + " partitions with largest part <= " + std::to_string(n) + " exceed the cap " +
                    std::to_string(cap));
  }
  return PartitionStream(lp, n);
}

EVector e_vector_direct(const LabeledPoset& lp, std::size_t cap) {
  const std::size_t p = lp.size();
  EVector out;
  out.e.assign(p, BigInt(0));
  auto stream = enumerate_partitions(lp, static_cast<long>(p), cap);
  std::vector<bool> seen(p + 1);
  while (auto sigma = stream.next()) {
    std::fill(seen.begin(), seen.end(), false);
    int top = 0;
    for (int v : sigma->values) {
      seen[static_cast<std::size_t>(v)] = true;
      top = std::max(top, v);
    }
    const bool onto = std::all_of(seen.begin() + 1, seen.begin() + top + 1, [](bool b) { return b; });
    if (onto) out.e[static_cast<std::size_t>(top) - 1] += 1;
  }
  return out;
}

EVector e_vector_by_ideals(const LabeledPoset& lp, std::size_t cap) {
  const Poset& poset = lp.poset();
  const std::size_t p = poset.size();

  // All down-sets, grown one minimal element at a time.
  std::vector<Mask> ideals{0};
  std::set<Mask> known{0};
  for (std::size_t head = 0; head < ideals.size(); ++head) {
    const Mask ideal = ideals[head];
    for (std::size_t x = 0; x < p; ++x) {
      if (has(ideal, x) || (poset.below(x) & ~ideal) != 0) continue;
      const Mask grown = ideal | bit(x);
      if (known.insert(grown).second) {
        ideals.push_back(grown);
        if (ideals.size() > cap) throw Error(ErrorCode::CapExceeded, "too many order ideals");
      }
    }
  }
  std::sort(ideals.begin(), ideals.end(), [](Mask a, Mask b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });

  std::vector<Mask> strict_edges;
  for (std::size_t e = 0; e < poset.edge_count(); ++e) {
    if (lp.sign(e) == -1) strict_edges.push_back(bit(poset.covers()[e].lower) | bit(poset.covers()[e].upper));
  }
  auto layer_ok = [&](Mask layer) {
    return std::none_of(strict_edges.begin(), strict_edges.end(), [&](Mask m) { return (layer & m) == m; });
  };

  // ways[j][k]: chains from the empty ideal up to ideals[j] with k non-empty layers.
  std::vector<std::vector<BigInt>> ways(ideals.size(), std::vector<BigInt>(p + 1, BigInt(0)));
  ways[0][0] = 1;
  for (std::size_t j = 0; j < ideals.size(); ++j) {
    for (std::size_t i = j + 1; i < ideals.size(); ++i) {
      if ((ideals[j] & ~ideals[i]) != 0 || ideals[i] == ideals[j]) continue;
      if (!layer_ok(ideals[i] & ~ideals[j])) continue;
      for (std::size_t k = 0; k < p; ++k) {
        if (ways[j][k] != 0) ways[i][k + 1] += ways[j][k];
      }
    }
  }
  EVector out;
  out.e.assign(ways.back().begin() + 1, ways.back().end());
  return out;
}

bool grading_shift_check(const LabeledPoset& eps, const LabeledPoset& mu, int xi_bound) {
  if (!(eps.poset() == mu.poset())) throw Error(ErrorCode::DifferentPoset, "labelings live on different posets");
  const auto ge = classify(eps);
  const auto gm = classify(mu);
  if (!ge.graded || !gm.graded) throw Error(ErrorCode::NotGraded, "both labelings must be graded");
  const int re = *ge.rank;
  const int rm = *gm.rank;
  if ((re - rm) % 2 != 0) return false;
  const int shift = (re - rm) / 2;

  const RatPolynomial omega_eps = order_polynomial(eps).as_polynomial();
  const RatPolynomial omega_mu = order_polynomial(mu).as_polynomial();
  if (!(omega_eps == omega_mu.translated(Rational(shift)))) return false;

  const Poset& poset = eps.poset();
  const std::size_t p = poset.size();
  const auto& rho_e = *ge.rank_function;
  const auto& rho_m = *gm.rank_function;
  std::vector<int> offset(p);
  for (std::size_t x = 0; x < p; ++x) {
    const int twice = (re - rho_e[x]) - (rm - rho_m[x]);
    if (twice % 2 != 0) return false;
    offset[x] = twice / 2;
  }
  for (std::size_t e = 0; e < poset.edge_count(); ++e) {
    const auto& c = poset.covers()[e];
    const int a = eps.sign(e);
    const int b = mu.sign(e);
    const int expected = a == b ? 0 : (a == 1 ? 1 : -1);
    if (offset[c.lower] - offset[c.upper] != expected) return false;
  }

  for (int n = 0; n <= xi_bound; ++n) {
    const long target = n + shift;
    std::set<std::vector<int>> images;
    PartitionStream stream(eps, n);
    while (auto sigma = stream.next()) {
      std::vector<int> image = sigma->values;
      for (std::size_t x = 0; x < p; ++x) image[x] += offset[x];
      if (!is_partition(mu, image)) return false;
      if (*std::max_element(image.begin(), image.end()) > target) return false;
      if (!images.insert(std::move(image)).second) return false;
    }
    if (BigInt(static_cast<unsigned long>(images.size())) != count_partitions(mu, target)) return false;
  }
  return true;
}

ReciprocityVerdict reciprocity_verdict(const LabeledPoset& lp) {
  ReciprocityVerdict verdict;
  verdict.r = delta_statistics(lp).r_max;
  verdict.graded = classify(lp).graded;
  const RatPolynomial omega = order_polynomial(lp).as_polynomial();
  RatPolynomial mirrored = omega.translated(Rational(-verdict.r)).reflected();
  if (lp.size() % 2 == 1) mirrored = -mirrored;
  verdict.holds_at_r = omega == mirrored;
  return verdict;
}

PhiTable phi_table(const LabeledPoset& lp, long n, std::size_t cap) {
  const auto stats = delta_statistics(lp);
  const LabeledPoset opposite = negated(lp);
  const std::size_t p = lp.size();

  PhiTable table;
  table.n = n;
  table.r = stats.r_max;
  const long bound = n + stats.r_max;
  table.images_valid = true;
  table.injective = true;

  std::set<std::vector<int>> images;
  auto sources = enumerate_partitions(lp, n, cap);
  while (auto sigma = sources.next()) {
    PPartition image = *sigma;
    for (std::size_t x = 0; x < p; ++x) image.values[x] += stats.delta[x];
    if (!is_partition(opposite, image.values) ||
        *std::max_element(image.values.begin(), image.values.end()) > bound) {
      table.images_valid = false;
    }
    if (!images.insert(image.values).second) table.injective = false;
    table.entries.emplace_back(std::move(*sigma), std::move(image));
  }

  table.target_size = count_partitions(opposite, bound);
  table.bijective_onto_bound = table.images_valid && table.injective &&
                               BigInt(static_cast<unsigned long>(images.size())) == table.target_size;

  // A missing preimage, when there is one, already shows up among targets with
  // largest part <= p.
  table.every_target_has_preimage = true;
  auto targets = enumerate_partitions(opposite, std::max(bound, static_cast<long>(p)), cap);
  while (auto tau = targets.next()) {
    std::vector<int> pre = tau->values;
    for (std::size_t x = 0; x < p; ++x) pre[x] -= stats.delta[x];
    if (!is_partition(lp, pre)) {
      table.every_target_has_preimage = false;
      break;
    }
  }
  return table;
}

bool rank_identity_check(const LabeledPoset& lp) {
  const auto grading = classify(lp);
  if (!grading.graded) throw Error(ErrorCode::NotGraded, "rank identity needs a graded labeling");
  const long p = static_cast<long>(lp.size());
  const long r = *grading.rank;
  const IntPolynomial w = w_polynomial(lp);
  const EVector e = to_e_vector(w, lp.size());
  const BigInt ep = e.at(static_cast<std::size_t>(p));
  const BigInt ep1 = e.at(static_cast<std::size_t>(p - 1));
  if (BigInt(2 * ep1) != BigInt(ep * (p + r - 1))) return false;
  const Rational lhs = Rational(w.derivative().evaluate(BigInt(1))) / Rational(w.evaluate(BigInt(1)));
  const Rational rhs = Rational(p - 1) - Rational(ep1) / Rational(ep);
  return lhs == rhs;
}

}  // namespace posetlab
