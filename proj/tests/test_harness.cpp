#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "posetlab/analyze.hpp"
#include "posetlab/generate.hpp"
#include "posetlab/grading.hpp"
#include "posetlab/suites.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Cycle;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Generate, ClassCountsMatchBruteForce) {
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(exhaustive_posets(n).size(), oracle::poset_classes(n)) << n;
}

TEST(Generate, KnownClassCounts) {
  const std::vector<std::size_t> known{1, 2, 5, 16, 63, 318, 2045};
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(exhaustive_posets(n).size(), known[n - 1]) << n;
  EXPECT_EQ(code_of([] { exhaustive_posets(8); }), ErrorCode::TooLarge);
}

TEST(Generate, DistinctClassesInLinearExtensionOrder) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> codes;
    for (const auto& p : exhaustive_posets(n)) {
      ASSERT_TRUE(codes.insert(isomorphism_code(p)).second);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < x; ++y) ASSERT_FALSE(p.less(x, y));
    }
  }
}

TEST(Generate, IsomorphismCodeIgnoresNames) {
  const Poset a = Poset::from_indexed(names(3), {{0, 2}, {1, 2}});
  const Poset b = Poset::from_indexed(names(3), {{1, 0}, {2, 0}});
  const Poset c = Poset::from_indexed(names(3), {{0, 1}, {0, 2}});
  EXPECT_EQ(isomorphism_code(a), isomorphism_code(b));
  EXPECT_NE(isomorphism_code(a), isomorphism_code(c));
}

TEST(Generate, RandomIsDeterministic) {
  const auto a = random_posets(7, 42, 10);
  const auto b = random_posets(7, 42, 10);
  ASSERT_EQ(a.size(), 10u);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
  const auto c = random_posets(7, 43, 10);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) differs = differs || !(a[i] == c[i]);
  EXPECT_TRUE(differs);
}

TEST(Labelings, Examples) {
  EXPECT_EQ(labelings_for(chain(2), LabelingScope::AllEpsilon).size(), 2u);
  EXPECT_EQ(labelings_for(chain(3), LabelingScope::AllEpsilon).size(), 4u);
  const auto canon = labelings_for(antichain(3), LabelingScope::Canonical);
  ASSERT_EQ(canon.size(), 1u);
  EXPECT_TRUE(is_canonical(canon[0]));
  EXPECT_TRUE(labelings_for(Poset::from_indexed(names(4), {{0, 1}, {1, 3}, {2, 3}}), LabelingScope::Canonical).empty());
}

TEST(Labelings, TooManyEdges) {
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 4; j < 8; ++j) rel.emplace_back(i, j);
  const Poset k44 = Poset::from_indexed(names(8), rel);
  EXPECT_EQ(code_of([&] { labelings_for(k44, LabelingScope::AllEpsilon); }), ErrorCode::TooManyEdges);
}

TEST(PosetFile, RoundTripIsByteIdentical) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& p : exhaustive_posets(n)) {
      for (const auto& lp : labelings_for(p, LabelingScope::AllEpsilon)) {
        const std::string text = serialize(lp);
        const auto back = parse_poset_file(text);
        ASSERT_EQ(back, lp);
        ASSERT_EQ(serialize(back), text);
      }
    }
  }
  const auto fig = rank_one_example();
  EXPECT_EQ(serialize(parse_poset_file(serialize(fig))), serialize(fig));
}

TEST(PosetFile, MissingLabelingIsNatural) {
  const auto lp = parse_poset_file(R"({"elements": ["x", "y"], "covers": [["x", "y"]]})");
  EXPECT_FALSE(lp.has_omega());
  EXPECT_EQ(lp.edge_signs().signs, (std::vector<int>{1}));
}

TEST(PosetFile, EpsilonLabeling) {
  const auto lp = parse_poset_file(
      R"({"elements": ["x", "y"], "covers": [["x", "y"]], "labeling": {"epsilon": [["x", "y", -1]]}})");
  EXPECT_EQ(lp.sign(0, 1), -1);
}

TEST(PosetFile, Errors) {
  try {
    parse_poset_file("{\n  \"elements\": [\"a\",\n  ]\n}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_EQ(code_of([] { parse_poset_file("[]"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_poset_file(R"({"elements": ["a"], "extra": 1})"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_poset_file(R"({"elements": ["a"], "covers": [["a", "b"]]})"); }),
            ErrorCode::UnknownElement);
  EXPECT_EQ(code_of([] { parse_poset_file(R"({"elements": ["a", "b"], "covers": [["a", "b"], ["b", "a"]]})"); }),
            ErrorCode::Cycle);
  EXPECT_EQ(code_of([] { parse_poset_file(R"({"elements": ["a", "b"], "labeling": {"omega": {"a": 1}}})"); }),
            ErrorCode::InvalidLabeling);
  EXPECT_EQ(code_of([] { read_poset_file("/nonexistent/poset.json"); }), ErrorCode::ParseError);
}

TEST(Analyze, ThreeAntichain) {
  const auto j = analyze(natural(antichain(3)));
  EXPECT_EQ(j["size"], 3);
  EXPECT_EQ(j["w_polynomial"]["coefficients"], nlohmann::json::array({"1", "4", "1"}));
  EXPECT_EQ(j["symmetric_expansion"]["a"], nlohmann::json::array({"1", "2"}));
  EXPECT_EQ(j["charney_davis"]["value"], "2");
  EXPECT_EQ(j["charney_davis"]["reverse_alternating_count"], "2");
  EXPECT_EQ(j["grading"]["rank"], 0);
  EXPECT_EQ(j["real_nonpositive_roots"], true);
}

TEST(Analyze, NotConsistentHasNulls) {
  const auto j = analyze(with_signs(vee(), {1, -1}));
  EXPECT_EQ(j["grading"]["consistent"], false);
  EXPECT_TRUE(j["symmetric_expansion"].is_null());
  EXPECT_TRUE(j["charney_davis"].is_null());
  EXPECT_TRUE(j["saturated_decomposition"].is_null());
}

TEST(Analyze, RankOneExampleMatchesGolden) {
  const auto golden = nlohmann::json::parse(slurp(std::string(POSETLAB_GOLDEN_DIR) + "/rank_one_example.analyze.json"));
  EXPECT_EQ(analyze(rank_one_example()), golden);
}

TEST(Suites, RegistryAndUnknown) {
  const auto& ids = suite_ids();
  for (const char* id : {"T2.2", "T4.2", "T5.2", "T7.3", "P7.1", "P7.1-bounded", "ORACLE", "NS", "EULERIAN"})
    EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
  EXPECT_EQ(code_of([] { run_suite("T9.9"); }), ErrorCode::UnknownSuite);
}

TEST(Suites, SmallRunsPassAndAreDeterministic) {
  SuiteBounds b;
  b.max_size = 4;
  b.threads = 2;
  for (const char* id : {"T2.3", "T4.2", "T7.3", "P6.2"}) {
    const auto r = run_suite(id, b);
    EXPECT_TRUE(r.pass()) << id;
    EXPECT_GT(r.labelings_examined, 0u);
    b.threads = 1;
    const auto again = run_suite(id, b);
    EXPECT_EQ(again.labelings_examined, r.labelings_examined);
    b.threads = 2;
  }
}

TEST(Suites, RandomCorpus) {
  SuiteBounds b;
  b.max_size = 7;
  b.random_count = 5;
  b.seed = 9;
  const auto r = run_suite("T4.2", b);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.posets_examined, 35u);
}

TEST(Suites, LiteralBoundedBijectionReportsViolations) {
  SuiteBounds b;
  b.max_size = 3;
  const auto r = run_suite("P7.1-bounded", b);
  EXPECT_FALSE(r.pass());
  const auto j = r.to_json();
  EXPECT_EQ(j["suite"], "P7.1-bounded");
  EXPECT_FALSE(j["violations"].empty());
}
