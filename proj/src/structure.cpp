#include "posetlab/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "posetlab/grading.hpp"
#include "posetlab/partition.hpp"

namespace posetlab {

namespace {

std::vector<std::tuple<std::string, std::string, int>> named_covers(const LabeledPoset& lp) {
  const Poset& poset = lp.poset();
  std::vector<std::tuple<std::string, std::string, int>> out;
  for (std::size_t e = 0; e < poset.edge_count(); ++e) {
    const auto& c = poset.covers()[e];
    out.emplace_back(poset.name(c.lower), poset.name(c.upper), lp.sign(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Re-attaches signs (looked up by element pair in `source`) to a new order on
/// the same element indices.
LabeledPoset carry_signs(const Poset& poset, const LabeledPoset& source, std::size_t nx, std::size_t ny, int new_sign) {
  EdgeSigns signs;
  for (const auto& c : poset.covers()) {
    if (auto e = source.poset().edge_index(c.lower, c.upper)) signs.signs.push_back(source.sign(*e));
    else if (c.lower == nx && c.upper == ny) signs.signs.push_back(new_sign);
    else throw Error(ErrorCode::PreconditionViolated, "unexpected new cover after closure");
  }
  return LabeledPoset(poset, std::move(signs));
}

bool rank_monotone(const LabeledPoset& lp, const std::vector<int>& rho) {
  const auto& labels = lp.omega().labels;
  for (std::size_t x = 0; x < rho.size(); ++x) {
    for (std::size_t y = 0; y < rho.size(); ++y) {
      if (rho[x] < rho[y] && labels[x] > labels[y]) return false;
    }
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> split_candidates(const Poset& poset, const std::vector<int>& rho) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < poset.size(); ++x) {
    for (std::size_t y = 0; y < poset.size(); ++y) {
      if (rho[y] == rho[x] + 1 && !poset.comparable(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

}  // namespace

std::string structure_key(const LabeledPoset& lp) {
  std::string key;
  for (const auto& n : lp.poset().names()) key += n + '\x1f';
  key += '\x1e';
  for (const auto& [lo, hi, s] : named_covers(lp)) key += lo + '\x1f' + hi + '\x1f' + (s == 1 ? '+' : '-') + '\x1e';
  return key;
}

bool same_structure(const LabeledPoset& a, const LabeledPoset& b) {
  auto na = a.poset().names();
  auto nb = b.poset().names();
  std::sort(na.begin(), na.end());
  std::sort(nb.begin(), nb.end());
  return na == nb && named_covers(a) == named_covers(b);
}

std::pair<LabeledPoset, LabeledPoset> split_at_pair(const LabeledPoset& lp, std::size_t x, std::size_t y) {
  const Poset& poset = lp.poset();
  const auto rho = rank_function(lp);
  if (!rho) throw Error(ErrorCode::NotConsistent, "labeling is not consistent");
  if (x >= poset.size() || y >= poset.size()) throw Error(ErrorCode::UnknownElement, "element index out of range");
  if (poset.comparable(x, y)) throw Error(ErrorCode::Comparable, poset.name(x) + " and " + poset.name(y) + " are comparable");
  if ((*rho)[y] != (*rho)[x] + 1) throw Error(ErrorCode::BadRankGap, "rank of the upper element must exceed by exactly 1");

  Poset up = extend_with_relation(poset, x, y);
  Poset down = extend_with_relation(poset, y, x);
  if (lp.has_omega()) {
    if (lp.omega().labels[x] > lp.omega().labels[y]) {
      throw Error(ErrorCode::NotCanonical, "omega must increase from the lower-ranked element");
    }
    return {LabeledPoset(std::move(up), lp.omega()), LabeledPoset(std::move(down), lp.omega())};
  }
  return {carry_signs(up, lp, x, y, 1), carry_signs(down, lp, y, x, -1)};
}

bool is_saturated(const LabeledPoset& lp) {
  const auto rho = rank_function(lp);
  if (!rho) throw Error(ErrorCode::NotConsistent, "labeling is not consistent");
  return split_candidates(lp.poset(), *rho).empty();
}

SaturatedDecomposition saturated_decomposition(const LabeledPoset& lp, SplitPolicy policy) {
  const auto rho = rank_function(lp);
  if (!rho) throw Error(ErrorCode::NotConsistent, "labeling is not consistent");
  const bool keep = lp.has_omega() && rank_monotone(lp, *rho);

  std::vector<LabeledPoset> pending{keep ? lp : rank_sorted_omega(lp)};
  std::map<std::string, LabeledPoset> parts;
  while (!pending.empty()) {
    LabeledPoset current = std::move(pending.back());
    pending.pop_back();
    auto candidates = split_candidates(current.poset(), *rho);
    if (candidates.empty()) {
      std::string key = structure_key(current);
      if (!parts.emplace(std::move(key), std::move(current)).second) {
        throw Error(ErrorCode::PreconditionViolated, "duplicate saturated part");
      }
      continue;
    }
    auto by_rank = [&](const auto& a, const auto& b) {
      return std::tuple((*rho)[a.first], a.first, a.second) < std::tuple((*rho)[b.first], b.first, b.second);
    };
    const auto pick = policy == SplitPolicy::LowestRankFirst
                          ? *std::min_element(candidates.begin(), candidates.end(), by_rank)
                          : *std::max_element(candidates.begin(), candidates.end(), by_rank);
    auto [first, second] = split_at_pair(current, pick.first, pick.second);
    pending.push_back(std::move(second));
    pending.push_back(std::move(first));
  }

  SaturatedDecomposition out;
  for (auto& [key, part] : parts) out.parts.push_back(std::move(part));
  return out;
}

LabeledPoset ordinal_sum(const LabeledPoset& a, const LabeledPoset& b, int sign) {
  const Poset& pa = a.poset();
  const Poset& pb = b.poset();
  const std::size_t na = pa.size();

  std::vector<std::string> names = pa.names();
  std::set<std::string> taken(names.begin(), names.end());
  for (std::string name : pb.names()) {
    while (taken.count(name) != 0) name += '\'';
    taken.insert(name);
    names.push_back(std::move(name));
  }

  std::vector<std::pair<std::size_t, std::size_t>> relations;
  for (const auto& c : pa.covers()) relations.emplace_back(c.lower, c.upper);
  for (const auto& c : pb.covers()) relations.emplace_back(na + c.lower, na + c.upper);
  for_each_bit(pa.maximal(), [&](std::size_t x) {
    for_each_bit(pb.minimal(), [&](std::size_t y) { relations.emplace_back(x, na + y); });
  });
  Poset sum = Poset::from_indexed(std::move(names), relations);

  if (a.has_omega() && b.has_omega()) {
    const int shift_a = sign == 1 ? 0 : static_cast<int>(pb.size());
    const int shift_b = sign == 1 ? static_cast<int>(na) : 0;
    Omega omega;
    for (int l : a.omega().labels) omega.labels.push_back(l + shift_a);
    for (int l : b.omega().labels) omega.labels.push_back(l + shift_b);
    return LabeledPoset(std::move(sum), std::move(omega));
  }

  EdgeSigns signs;
  for (const auto& c : sum.covers()) {
    if (c.upper < na) signs.signs.push_back(a.sign(c.lower, c.upper));
    else if (c.lower >= na) signs.signs.push_back(b.sign(c.lower - na, c.upper - na));
    else signs.signs.push_back(sign);
  }
  return LabeledPoset(std::move(sum), std::move(signs));
}

bool ordinal_sum_w_check(const LabeledPoset& a, const LabeledPoset& b, int sign) {
  const IntPolynomial lhs = w_polynomial(ordinal_sum(a, b, sign));
  IntPolynomial rhs = w_polynomial(a) * w_polynomial(b);
  if (sign == -1) rhs = rhs.shifted(1);
  return lhs == rhs;
}

std::vector<std::size_t> OrdinalSumSpec::block_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& b : blocks) out.push_back(b.size());
  return out;
}

LabeledPoset OrdinalSumSpec::reconstruct() const {
  if (blocks.empty()) throw Error(ErrorCode::EmptyPoset, "no blocks");
  LabeledPoset acc = blocks.front();
  for (std::size_t i = 1; i < blocks.size(); ++i) acc = ordinal_sum(acc, blocks[i], glue.at(i - 1));
  return acc;
}

OrdinalSumSpec antichain_decomposition(const LabeledPoset& lp) {
  if (!is_canonical(lp)) throw Error(ErrorCode::NotCanonical, "needs a canonical omega");
  if (!is_saturated(lp)) throw Error(ErrorCode::NotSaturated, "poset is not saturated");
  const auto rho = *rank_function(lp);
  const Poset& poset = lp.poset();
  const auto& labels = lp.omega().labels;

  // Constant-rank factors of any linear extension are the blocks.
  const auto extension = *LinearExtensionStream(poset).next();
  std::vector<Mask> groups;
  for (std::size_t k = 0; k < extension.size(); ++k) {
    if (k == 0 || rho[extension[k]] != rho[extension[k - 1]]) groups.push_back(0);
    groups.back() |= bit(extension[k]);
  }

  OrdinalSumSpec spec;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    Poset block = induced_subposet(poset, groups[g]);
    if (block.edge_count() != 0) throw Error(ErrorCode::NotSaturated, "constant-rank factor is not an antichain");
    std::vector<std::size_t> members;
    for_each_bit(groups[g], [&](std::size_t x) { members.push_back(x); });
    std::vector<std::size_t> order(members.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return labels[members[i]] < labels[members[j]]; });
    Omega omega;
    omega.labels.assign(members.size(), 0);
    for (std::size_t k = 0; k < order.size(); ++k) omega.labels[order[k]] = static_cast<int>(k + 1);
    spec.blocks.emplace_back(std::move(block), std::move(omega));
    if (g > 0) spec.glue.push_back(g % 2 == 1 ? 1 : -1);
  }
  return spec;
}

BigInt charney_davis(const LabeledPoset& lp) {
  const auto grading = classify(lp);
  if (!grading.graded) throw Error(ErrorCode::NotGraded, "Charney-Davis quantity needs a graded labeling");
  const long d = static_cast<long>(lp.size()) - 1 - *grading.rank;
  if (d % 2 != 0) return 0;
  BigInt value = w_polynomial(lp).evaluate(BigInt(-1));
  if ((d / 2) % 2 != 0) value = -value;
  return value;
}

bool is_reverse_alternating(const Permutation& pi) {
  for (std::size_t i = 0; i + 1 < pi.size(); ++i) {
    const bool rise = pi[i] < pi[i + 1];
    if (rise != (i % 2 == 0)) return false;
  }
  return true;
}

BigInt reverse_alternating_count(const LabeledPoset& lp) {
  if (!is_canonical(lp)) throw Error(ErrorCode::NotCanonical, "needs a canonical omega");
  const auto grading = classify(lp);
  if (!grading.graded) throw Error(ErrorCode::NotGraded, "components are only defined for graded labelings");
  const auto& rho = *grading.rank_function;
  std::vector<int> rank_of_label(lp.size() + 1);
  for (std::size_t x = 0; x < lp.size(); ++x) rank_of_label[static_cast<std::size_t>(lp.omega().labels[x])] = rho[x];

  BigInt count = 0;
  JordanHolderStream stream(lp);
  while (auto pi = stream.next()) {
    if (!is_reverse_alternating(*pi)) continue;
    bool odd = true;
    std::size_t run = 0;
    for (std::size_t i = 0; i < pi->size() && odd; ++i) {
      ++run;
      const bool ends = i + 1 == pi->size() || rank_of_label[static_cast<std::size_t>((*pi)[i])] !=
                                                   rank_of_label[static_cast<std::size_t>((*pi)[i + 1])];
      if (ends) {
        odd = run % 2 == 1;
        run = 0;
      }
    }
    if (odd) count += 1;
  }
  return count;
}

bool eulerian_cd_check(std::size_t n) {
  BigInt value = eulerian(n).evaluate(BigInt(-1));
  if (n % 2 == 0) return value == 0;
  if (((n - 1) / 2) % 2 != 0) value = -value;

  Permutation pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  BigInt scanned = 0;
  do {
    if (is_reverse_alternating(pi)) scanned += 1;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return value == scanned;
}

}  // namespace posetlab
