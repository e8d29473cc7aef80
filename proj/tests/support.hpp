#pragma once

#include <string>
#include <utility>
#include <vector>

#include "posetlab/io.hpp"
#include "posetlab/poset.hpp"

namespace testing_support {

using namespace posetlab;

inline std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

inline Poset chain(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return Poset::from_indexed(names(n), rel);
}

inline Poset antichain(std::size_t n) { return Poset::from_indexed(names(n), {}); }

/// a < c, b < c.
inline Poset vee() { return Poset::from_indexed(names(3), {{0, 2}, {1, 2}}); }

inline LabeledPoset natural(const Poset& p) { return LabeledPoset(p, EdgeSigns{std::vector<int>(p.edge_count(), 1)}); }

inline LabeledPoset with_signs(const Poset& p, std::vector<int> s) { return LabeledPoset(p, EdgeSigns{std::move(s)}); }

inline LabeledPoset with_omega(const Poset& p, std::vector<int> w) { return LabeledPoset(p, Omega{std::move(w)}); }

inline LabeledPoset rank_one_example() { return read_poset_file(std::string(POSETLAB_DATA_DIR) + "/rank_one_example.json"); }

}  // namespace testing_support
