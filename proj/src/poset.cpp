#include "posetlab/poset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace posetlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Cycle: return "CycleError";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::EmptyPoset: return "EmptyPoset";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::MissingOmega: return "MissingOmega";
    case ErrorCode::InvalidLabeling: return "InvalidLabeling";
    case ErrorCode::AlreadyComparable: return "AlreadyComparable";
    case ErrorCode::NotConsistent: return "NotConsistent";
    case ErrorCode::NotParityConsistent: return "NotParityConsistent";
    case ErrorCode::NotGraded: return "NotGraded";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NonIntegerSolution: return "NonIntegerSolution";
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::DifferentPoset: return "DifferentPoset";
    case ErrorCode::BadRankGap: return "BadRankGap";
    case ErrorCode::Comparable: return "Comparable";
    case ErrorCode::NotSaturated: return "NotSaturated";
    case ErrorCode::NotCanonical: return "NotCanonical";
    case ErrorCode::TooManyEdges: return "TooManyEdges";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Error";
}

Poset Poset::from_cover_relations(std::vector<std::string> elements,
                                  const std::vector<std::pair<std::string, std::string>>& relations) {
  std::vector<std::pair<std::size_t, std::size_t>> indexed;
  indexed.reserve(relations.size());
  auto lookup = [&](const std::string& name) {
    const auto it = std::find(elements.begin(), elements.end(), name);
    if (it == elements.end()) throw Error(ErrorCode::UnknownElement, "'" + name + "' is not an element");
    return static_cast<std::size_t>(it - elements.begin());
  };
  for (const auto& [x, y] : relations) indexed.emplace_back(lookup(x), lookup(y));
  return from_indexed(std::move(elements), indexed);
}

Poset Poset::from_indexed(std::vector<std::string> elements,
                          const std::vector<std::pair<std::size_t, std::size_t>>& relations) {
  const std::size_t p = elements.size();
  if (p == 0) throw Error(ErrorCode::EmptyPoset, "a poset needs at least one element");
  if (p > kMaxElements) {
    throw Error(ErrorCode::TooLarge, std::to_string(p) + " elements exceeds the limit of 64");
  }
  {
    std::unordered_set<std::string> seen;
    for (const auto& name : elements) {
      if (!seen.insert(name).second) throw Error(ErrorCode::DuplicateElement, "'" + name + "' appears twice");
    }
  }

  Poset poset;
  poset.names_ = std::move(elements);
  poset.above_.assign(p, 0);
  for (const auto& [x, y] : relations) {
    if (x >= p || y >= p) throw Error(ErrorCode::UnknownElement, "relation index out of range");
    if (x == y) throw Error(ErrorCode::Cycle, "'" + poset.names_[x] + "' related to itself");
    poset.above_[x] |= bit(y);
  }
  // Warshall closure over bitsets.
  for (std::size_t k = 0; k < p; ++k) {
    for (std::size_t i = 0; i < p; ++i) {
      if (has(poset.above_[i], k)) poset.above_[i] |= poset.above_[k];
    }
  }
  for (std::size_t i = 0; i < p; ++i) {
    if (has(poset.above_[i], i)) {
      throw Error(ErrorCode::Cycle, "relations contain a directed cycle through '" + poset.names_[i] + "'");
    }
  }

  poset.below_.assign(p, 0);
  poset.upper_covers_.assign(p, 0);
  poset.lower_covers_.assign(p, 0);
  for (std::size_t x = 0; x < p; ++x) {
    for_each_bit(poset.above_[x], [&](std::size_t y) { poset.below_[y] |= bit(x); });
  }
  for (std::size_t x = 0; x < p; ++x) {
    Mask indirect = 0;
    for_each_bit(poset.above_[x], [&](std::size_t z) { indirect |= poset.above_[z]; });
    poset.upper_covers_[x] = poset.above_[x] & ~indirect;
    for_each_bit(poset.upper_covers_[x], [&](std::size_t y) {
      poset.lower_covers_[y] |= bit(x);
      poset.covers_.push_back({x, y});
    });
  }
  return poset;
}

std::optional<std::size_t> Poset::find(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Poset::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorCode::UnknownElement, "'" + std::string(name) + "' is not an element");
}

std::optional<std::size_t> Poset::edge_index(std::size_t lower, std::size_t upper) const {
  const Edge key{lower, upper};
  const auto it = std::lower_bound(covers_.begin(), covers_.end(), key);
  if (it == covers_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - covers_.begin());
}

Mask Poset::minimal() const {
  Mask m = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (below_[i] == 0) m |= bit(i);
  }
  return m;
}

Mask Poset::maximal() const {
  Mask m = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (above_[i] == 0) m |= bit(i);
  }
  return m;
}

std::vector<std::size_t> Poset::topological_order() const {
  LinearExtensionStream stream(*this);
  return *stream.next();
}

LabeledPoset::LabeledPoset(Poset poset, Omega omega) : poset_(std::move(poset)) {
  const std::size_t p = poset_.size();
  if (omega.labels.size() != p) throw Error(ErrorCode::InvalidLabeling, "omega must label every element");
  std::vector<bool> used(p + 1, false);
  for (int label : omega.labels) {
    if (label < 1 || static_cast<std::size_t>(label) > p || used[static_cast<std::size_t>(label)]) {
      throw Error(ErrorCode::InvalidLabeling, "omega must be a bijection onto 1..p");
    }
    used[static_cast<std::size_t>(label)] = true;
  }
  signs_.signs.reserve(poset_.edge_count());
  for (const auto& e : poset_.covers()) {
    signs_.signs.push_back(omega.labels[e.lower] < omega.labels[e.upper] ? 1 : -1);
  }
  labeling_ = std::move(omega);
}

LabeledPoset::LabeledPoset(Poset poset, EdgeSigns signs) : poset_(std::move(poset)) {
  if (signs.signs.size() != poset_.edge_count()) {
    throw Error(ErrorCode::InvalidLabeling, "expected one sign per cover relation");
  }
  for (int s : signs.signs) {
    if (s != 1 && s != -1) throw Error(ErrorCode::InvalidLabeling, "signs must be +1 or -1");
  }
  signs_ = signs;
  labeling_ = std::move(signs);
}

const Omega& LabeledPoset::omega() const {
  if (const auto* o = std::get_if<Omega>(&labeling_)) return *o;
  throw Error(ErrorCode::MissingOmega, "labeling is given by edge signs only");
}

int LabeledPoset::sign(std::size_t lower, std::size_t upper) const {
  const auto e = poset_.edge_index(lower, upper);
  if (!e) throw Error(ErrorCode::UnknownElement, "not a cover relation");
  return signs_.signs[*e];
}

std::optional<std::size_t> LinearExtensionStream::first_available(std::size_t from) const {
  const std::size_t p = poset_->size();
  for (std::size_t i = from; i < p; ++i) {
    if (!has(placed_, i) && (poset_->below(i) & ~placed_) == 0) return i;
  }
  return std::nullopt;
}

void LinearExtensionStream::fill() {
  while (seq_.size() < poset_->size()) {
    const std::size_t i = *first_available(0);
    seq_.push_back(i);
    placed_ |= bit(i);
  }
}

std::optional<LinearExtension> LinearExtensionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    fill();
    return seq_;
  }
  while (!seq_.empty()) {
    const std::size_t last = seq_.back();
    seq_.pop_back();
    placed_ &= ~bit(last);
    if (auto alt = first_available(last + 1)) {
      seq_.push_back(*alt);
      placed_ |= bit(*alt);
      fill();
      return seq_;
    }
  }
  done_ = true;
  return std::nullopt;
}

JordanHolderStream::JordanHolderStream(const LabeledPoset& lp) : lp_(&lp), extensions_(lp.poset()) {
  (void)lp.omega();
}

std::optional<Permutation> JordanHolderStream::next() {
  auto ext = extensions_.next();
  if (!ext) return std::nullopt;
  const auto& labels = lp_->omega().labels;
  Permutation pi;
  pi.reserve(ext->size());
  for (std::size_t x : *ext) pi.push_back(labels[x]);
  return pi;
}

std::size_t count_linear_extensions(const Poset& poset) {
  LinearExtensionStream stream(poset);
  std::size_t n = 0;
  while (stream.next()) ++n;
  return n;
}

namespace {

void extend_chains(const Poset& poset, std::vector<std::size_t>& chain,
                   std::vector<std::vector<std::size_t>>& out) {
  const Mask up = poset.upper_covers(chain.back());
  if (up == 0) {
    out.push_back(chain);
    return;
  }
  for_each_bit(up, [&](std::size_t y) {
    chain.push_back(y);
    extend_chains(poset, chain, out);
    chain.pop_back();
  });
}

}  // namespace

std::vector<std::vector<std::size_t>> maximal_chains(const Poset& poset) {
  std::vector<std::vector<std::size_t>> out;
  for_each_bit(poset.minimal(), [&](std::size_t x) {
    std::vector<std::size_t> chain{x};
    extend_chains(poset, chain, out);
  });
  return out;
}

Poset induced_subposet(const Poset& poset, Mask members) {
  std::vector<std::size_t> keep;
  for_each_bit(members & poset.all(), [&](std::size_t i) { keep.push_back(i); });
  std::vector<std::string> names;
  names.reserve(keep.size());
  for (std::size_t i : keep) names.push_back(poset.name(i));
  std::vector<std::pair<std::size_t, std::size_t>> relations;
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = 0; b < keep.size(); ++b) {
      if (poset.less(keep[a], keep[b])) relations.emplace_back(a, b);
    }
  }
  return Poset::from_indexed(std::move(names), relations);
}

Poset principal_ideal(const Poset& poset, std::size_t y) {
  if (y >= poset.size()) throw Error(ErrorCode::UnknownElement, "index out of range");
  return induced_subposet(poset, poset.below(y) | bit(y));
}

Poset extend_with_relation(const Poset& poset, std::size_t x, std::size_t y) {
  if (x >= poset.size() || y >= poset.size()) throw Error(ErrorCode::UnknownElement, "index out of range");
  if (poset.comparable(x, y)) {
    throw Error(ErrorCode::AlreadyComparable,
                "'" + poset.name(x) + "' and '" + poset.name(y) + "' are already comparable");
  }
  std::vector<std::pair<std::size_t, std::size_t>> relations;
  for (const auto& e : poset.covers()) relations.emplace_back(e.lower, e.upper);
  relations.emplace_back(x, y);
  return Poset::from_indexed(poset.names(), relations);
}

LabeledPoset dual(const LabeledPoset& lp) {
  const Poset& poset = lp.poset();
  std::vector<std::pair<std::size_t, std::size_t>> relations;
  for (const auto& e : poset.covers()) relations.emplace_back(e.upper, e.lower);
  Poset reversed = Poset::from_indexed(poset.names(), relations);
  if (lp.has_omega()) return LabeledPoset(std::move(reversed), lp.omega());
  EdgeSigns signs;
  signs.signs.reserve(reversed.edge_count());
  for (const auto& e : reversed.covers()) signs.signs.push_back(-lp.sign(e.upper, e.lower));
  return LabeledPoset(std::move(reversed), std::move(signs));
}

LabeledPoset negated(const LabeledPoset& lp) {
  if (lp.has_omega()) {
    Omega flipped = lp.omega();
    for (int& label : flipped.labels) label = static_cast<int>(lp.size()) + 1 - label;
    return LabeledPoset(lp.poset(), std::move(flipped));
  }
  EdgeSigns signs = lp.edge_signs();
  for (int& s : signs.signs) s = -s;
  return LabeledPoset(lp.poset(), std::move(signs));
}

Poset disjoint_union(const Poset& a, const Poset& b) {
  std::vector<std::string> names = a.names();
  for (std::string name : b.names()) {
    while (std::find(names.begin(), names.end(), name) != names.end()) name += "'";
    names.push_back(name);
  }
  std::vector<std::pair<std::size_t, std::size_t>> relations;
  for (const auto& e : a.covers()) relations.emplace_back(e.lower, e.upper);
  for (const auto& e : b.covers()) relations.emplace_back(a.size() + e.lower, a.size() + e.upper);
  return Poset::from_indexed(std::move(names), relations);
}

}  // namespace posetlab
