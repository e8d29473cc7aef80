#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "posetlab/generate.hpp"
#include "posetlab/grading.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

// Signed lengths of all saturated chains from x down to a minimal element.
std::set<int> lengths_down(const LabeledPoset& lp, std::size_t x) {
  const Poset& p = lp.poset();
  std::set<int> out;
  bool any = false;
  for (std::size_t w = 0; w < p.size(); ++w) {
    if (!oracle::covers(p, w, x)) continue;
    any = true;
    for (int l : lengths_down(lp, w)) out.insert(l + lp.sign(w, x));
  }
  if (!any) out.insert(0);
  return out;
}

std::set<int> lengths_up(const LabeledPoset& lp, std::size_t x) {
  const Poset& p = lp.poset();
  std::set<int> out;
  bool any = false;
  for (std::size_t y = 0; y < p.size(); ++y) {
    if (!oracle::covers(p, x, y)) continue;
    any = true;
    for (int l : lengths_up(lp, y)) out.insert(l + lp.sign(x, y));
  }
  if (!any) out.insert(0);
  return out;
}

bool consistent_by_chains(const LabeledPoset& lp) {
  for (std::size_t x = 0; x < lp.size(); ++x)
    if (lengths_down(lp, x).size() != 1) return false;
  return true;
}

bool dual_consistent_by_chains(const LabeledPoset& lp) {
  for (std::size_t x = 0; x < lp.size(); ++x)
    if (lengths_up(lp, x).size() != 1) return false;
  return true;
}

template <class F>
void for_all_labelings(std::size_t max_size, F&& f) {
  for (std::size_t n = 1; n <= max_size; ++n)
    for (const auto& p : exhaustive_posets(n))
      for (const auto& lp : labelings_for(p, LabelingScope::AllEpsilon)) f(lp);
}

}  // namespace

TEST(Classify, Examples) {
  const auto c3 = classify(natural(chain(3)));
  EXPECT_TRUE(c3.graded);
  EXPECT_EQ(c3.rank, 2);
  EXPECT_EQ(*c3.rank_function, (std::vector<int>{0, 1, 2}));

  const auto alt = classify(with_signs(chain(3), {1, -1}));
  EXPECT_TRUE(alt.graded);
  EXPECT_EQ(alt.rank, 0);

  const auto v = classify(with_signs(vee(), {1, -1}));
  EXPECT_FALSE(v.consistent);
  EXPECT_FALSE(v.graded);
  EXPECT_FALSE(v.rank_function.has_value());
  EXPECT_TRUE(v.dual_consistent);
}

TEST(Classify, ConsistentButNotGraded) {
  // a < b, c alone: ranks 0, 1, 0 with maximal elements at different ranks.
  const auto r = classify(natural(Poset::from_indexed(names(3), {{0, 1}})));
  EXPECT_TRUE(r.consistent);
  EXPECT_FALSE(r.graded);
  EXPECT_EQ(*r.rank_function, (std::vector<int>{0, 1, 0}));
}

TEST(Classify, RankOneExample) {
  const auto lp = rank_one_example();
  const auto r = classify(lp);
  ASSERT_TRUE(r.graded);
  EXPECT_EQ(r.rank, 1);
  const std::vector<int> expected{-1, -1, 0, 0, 0, 0, 0, 1, 1, 1};
  for (std::size_t i = 0; i < 10; ++i)
    EXPECT_EQ((*r.rank_function)[lp.poset().index_of(std::to_string(i + 1))], expected[i]) << i + 1;
}

TEST(Classify, RankOneExampleInducedSigns) {
  const auto lp = edge_signs_from_omega(rank_one_example());
  const Poset& p = lp.poset();
  auto s = [&](const char* a, const char* b) { return lp.sign(p.index_of(a), p.index_of(b)); };
  EXPECT_EQ(s("9", "6"), -1);
  EXPECT_EQ(s("5", "2"), -1);
  EXPECT_EQ(s("3", "1"), -1);
  EXPECT_EQ(s("1", "4"), 1);
  EXPECT_EQ(s("7", "10"), 1);
}

TEST(Classify, MatchesChainEnumeration) {
  for_all_labelings(5, [](const LabeledPoset& lp) {
    const auto r = classify(lp);
    ASSERT_EQ(r.consistent, consistent_by_chains(lp));
    ASSERT_EQ(r.dual_consistent, dual_consistent_by_chains(lp));
    ASSERT_EQ(r.graded, oracle::graded(lp));
    if (r.consistent) {
      for (std::size_t x = 0; x < lp.size(); ++x) ASSERT_EQ((*r.rank_function)[x], *lengths_down(lp, x).begin());
    }
  });
}

TEST(Classify, NegatedDualKeepsGrading) {
  for_all_labelings(5, [](const LabeledPoset& lp) {
    const auto r = classify(lp);
    const auto d = classify(dual(lp));
    const auto n = classify(negated(lp));
    ASSERT_EQ(r.graded, n.graded);
    ASSERT_EQ(r.graded, d.graded);
    if (r.graded) {
      ASSERT_EQ(*n.rank, -*r.rank);
      ASSERT_EQ(*d.rank, -*r.rank);
    }
  });
}

TEST(Classify, OmegaAndSignsAgree) {
  const auto lp = rank_one_example();
  const auto a = classify(lp);
  const auto b = classify(edge_signs_from_omega(lp));
  EXPECT_EQ(a.rank_function, b.rank_function);
  EXPECT_EQ(a.rank, b.rank);
}

TEST(Parity, Examples) {
  const auto c = parity_classification(chain(4));
  EXPECT_TRUE(c.parity_graded);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(c.witness->signs, (std::vector<int>{1, -1, 1}));

  const auto odd = parity_classification(Poset::from_indexed(names(3), {{0, 2}}));
  EXPECT_FALSE(odd.parity_graded);

  EXPECT_TRUE(parity_classification(rank_one_example().poset()).parity_graded);
}

TEST(Parity, WitnessGradesWithRanksZeroOne) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& p : exhaustive_posets(n)) {
      const auto pr = parity_classification(p);
      if (!pr.parity_consistent) {
        EXPECT_FALSE(pr.witness.has_value());
        continue;
      }
      const auto r = classify(LabeledPoset(p, *pr.witness));
      ASSERT_TRUE(r.consistent);
      for (int v : *r.rank_function) ASSERT_TRUE(v == 0 || v == 1);
      ASSERT_EQ(r.graded, pr.parity_graded);
    }
  }
}

TEST(Parity, GradedForSomeSignsExactlyWhenParityGraded) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& p : exhaustive_posets(n)) {
      bool some = false;
      for (const auto& lp : labelings_for(p, LabelingScope::AllEpsilon)) some = some || classify(lp).graded;
      ASSERT_EQ(some, parity_classification(p).parity_graded);
    }
  }
}

TEST(Canonical, Examples) {
  const auto a2 = canonical_labeling(natural(antichain(2)));
  EXPECT_EQ(a2.omega().labels, (std::vector<int>{1, 2}));

  const auto c2 = canonical_labeling(natural(chain(2)));
  EXPECT_EQ(c2.omega().labels, (std::vector<int>{1, 2}));
  EXPECT_EQ(classify(c2).rank_function, (std::vector<int>{0, 1}));

  const auto c4 = canonical_labeling(natural(chain(4)));
  EXPECT_EQ(c4.omega().labels, (std::vector<int>{1, 3, 2, 4}));
  EXPECT_EQ(classify(c4).rank_function, (std::vector<int>{0, 1, 0, 1}));
  EXPECT_EQ(edge_signs_from_omega(c4).edge_signs().signs, (std::vector<int>{1, -1, 1}));
  EXPECT_TRUE(is_canonical(c4));
  EXPECT_FALSE(is_canonical(with_omega(chain(3), {1, 2, 3})));
}

TEST(Canonical, Errors) {
  EXPECT_THROW(canonical_labeling(with_signs(vee(), {1, -1})), Error);
  // Chains of lengths 2 and 1 into d: no sign labeling is consistent.
  const Poset odd = Poset::from_indexed(names(4), {{0, 1}, {1, 3}, {2, 3}});
  try {
    canonical_labeling(natural(odd));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotConsistent);
  }
}

TEST(Canonical, OutputIsCanonicalOnCorpus) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& p : exhaustive_posets(n)) {
      const auto pr = parity_classification(p);
      if (!pr.parity_consistent) continue;
      const auto lp = canonical_labeling(LabeledPoset(p, *pr.witness));
      ASSERT_TRUE(is_canonical(lp));
      const auto rho = *classify(lp).rank_function;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (rho[x] < rho[y]) ASSERT_LT(lp.omega().labels[x], lp.omega().labels[y]);
    }
  }
}

TEST(RankSortedOmega, InducesSameSigns) {
  for_all_labelings(5, [](const LabeledPoset& lp) {
    if (!classify(lp).consistent) return;
    const auto sorted = edge_signs_from_omega(rank_sorted_omega(lp));
    ASSERT_EQ(sorted.edge_signs().signs, lp.edge_signs().signs);
  });
}

TEST(Delta, Examples) {
  const auto one = delta_statistics(natural(antichain(1)));
  EXPECT_EQ(one.delta, (std::vector<int>{0}));
  EXPECT_EQ(one.delta_star, (std::vector<int>{0}));
  EXPECT_EQ(one.r_max, 0);
  EXPECT_TRUE(one.lambda_chain);

  const auto v = delta_statistics(with_signs(vee(), {1, -1}));
  EXPECT_EQ(v.delta, (std::vector<int>{1, -1, 0}));
  EXPECT_EQ(v.delta_star[2], 1);
  EXPECT_EQ(v.r_max, 1);
  EXPECT_FALSE(v.lambda_chain);
}

TEST(Delta, MatchesChainEnumeration) {
  for_all_labelings(5, [](const LabeledPoset& lp) {
    const auto d = delta_statistics(lp);
    int r = -1000;
    for (const auto& c : oracle::maximal_chains(lp.poset())) r = std::max(r, oracle::signed_length(lp, c));
    ASSERT_EQ(d.r_max, r);
    for (std::size_t x = 0; x < lp.size(); ++x) {
      ASSERT_EQ(d.delta[x], *lengths_up(lp, x).rbegin());
      ASSERT_EQ(d.delta_star[x], *lengths_down(lp, x).rbegin());
    }
  });
}

TEST(Delta, CoverInequalityAndGradedImpliesLambda) {
  for_all_labelings(5, [](const LabeledPoset& lp) {
    const auto d = delta_statistics(lp);
    for (const auto& c : lp.poset().covers())
      ASSERT_GE(d.delta[c.lower], d.delta[c.upper] + lp.sign(c.lower, c.upper));
    const auto g = classify(lp);
    if (g.graded) {
      ASSERT_TRUE(d.lambda_chain);
      ASSERT_EQ(d.r_max, *g.rank);
    }
  });
}
