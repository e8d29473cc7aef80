#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "posetlab/polynomial.hpp"

using namespace posetlab;

namespace {

IntPolynomial P(std::initializer_list<long> c) { return IntPolynomial(c); }

}  // namespace

TEST(Polynomial, ArithmeticAndTrim) {
  const IntPolynomial f = P({1, 2, 0, 0});
  EXPECT_EQ(f.degree(), 1);
  EXPECT_EQ(f * P({1, 1}), P({1, 3, 2}));
  EXPECT_EQ(f - f, IntPolynomial());
  EXPECT_EQ(IntPolynomial().degree(), -1);
  EXPECT_EQ(P({1, 4, 1}).to_string(), "1 + 4t + t^2");
  EXPECT_EQ(P({0, 1}).shifted(2), P({0, 0, 0, 1}));
  EXPECT_EQ(P({1, 1}).reflected(), P({1, -1}));
  EXPECT_EQ(to_rational(P({0, 0, 1})).translated(Rational(1)), to_rational(P({1, 2, 1})));
}

TEST(Polynomial, BinomialHandlesNegativeTop) {
  EXPECT_EQ(binomial(BigInt(5), 2), 10);
  EXPECT_EQ(binomial(BigInt(-1), 3), -1);
  EXPECT_EQ(binomial(BigInt(2), 3), 0);
  const RatPolynomial c = binomial_polynomial(1, 2);  // C(t+1, 2)
  for (long n = -4; n <= 6; ++n) EXPECT_EQ(c.evaluate(Rational(n)), Rational(binomial(BigInt(n + 1), 2)));
}

TEST(Eulerian, Examples) {
  EXPECT_EQ(eulerian(1), P({1}));
  EXPECT_EQ(eulerian(3), P({1, 4, 1}));
  EXPECT_EQ(eulerian(4), P({1, 11, 11, 1}));
  EXPECT_THROW(eulerian(0), Error);
}

TEST(Eulerian, MatchesDescentScan) {
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(eulerian(n), IntPolynomial(oracle::eulerian(n))) << n;
}

TEST(Eulerian, SymmetricUnimodalRealRooted) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const IntPolynomial a = eulerian(n);
    EXPECT_TRUE(is_symmetric(a, static_cast<int>(n) - 1));
    EXPECT_TRUE(is_unimodal(a));
    EXPECT_TRUE(real_nonpositive_roots(a));
    EXPECT_TRUE(symmetric_expand(a, static_cast<int>(n) - 1).nonnegative());
  }
}

TEST(IsSymmetric, Examples) {
  EXPECT_TRUE(is_symmetric(P({1, 4, 1}), 2));
  EXPECT_FALSE(is_symmetric(P({1, 1}), 2));
  EXPECT_TRUE(is_symmetric(P({0, 1}), 2));
}

TEST(IsUnimodal, Examples) {
  EXPECT_TRUE(is_unimodal(P({1, 11, 11, 1})));
  EXPECT_FALSE(is_unimodal(P({1, 0, 1})));
  EXPECT_TRUE(is_unimodal(P({5})));
}

TEST(SymmetricExpand, Examples) {
  EXPECT_EQ(symmetric_expand(P({1, 4, 1}), 2).a, (std::vector<BigInt>{1, 2}));
  EXPECT_EQ(symmetric_expand(P({0, 1}), 2).a, (std::vector<BigInt>{0, 1}));
  EXPECT_EQ(symmetric_expand(P({1, 11, 11, 1}), 3).a, (std::vector<BigInt>{1, 8}));
  EXPECT_THROW(symmetric_expand(P({1, 2}), 2), Error);
}

TEST(SymmetricExpand, ReportsNegativeCoefficients) {
  const auto e = symmetric_expand(P({1, 0, 1}), 2);  // (1+t)^2 - 2t
  EXPECT_EQ(e.a, (std::vector<BigInt>{1, -2}));
  EXPECT_FALSE(e.nonnegative());
  EXPECT_EQ(e.reconstruct(), P({1, 0, 1}));
}

TEST(RealRoots, Examples) {
  EXPECT_TRUE(real_nonpositive_roots(P({1, 2, 1})));
  EXPECT_FALSE(real_nonpositive_roots(P({1, 0, 1})));
  EXPECT_TRUE(real_nonpositive_roots(P({1, 4, 1})));
  EXPECT_FALSE(real_nonpositive_roots(P({-1, 1})));
  EXPECT_TRUE(real_nonpositive_roots(P({0, 0, 2, 3})));
  EXPECT_TRUE(real_nonpositive_roots(P({1, 3, 3, 1}) * P({1, 1})));
  EXPECT_THROW(real_nonpositive_roots(IntPolynomial()), Error);
}

TEST(Mode, Examples) {
  EXPECT_EQ(mode(P({1, 4, 1})), Rational(1));
  EXPECT_EQ(mode(P({1, 1})), Rational(1, 2));
  EXPECT_EQ(mode(P({1, 11, 11, 1})), Rational(3, 2));
  EXPECT_THROW(mode(P({1, -1})), Error);
  EXPECT_THROW(mode(IntPolynomial()), Error);
}

TEST(ModeBound, Examples) {
  EXPECT_TRUE(mode_bound_check(P({1, 3, 3, 1})));
  EXPECT_TRUE(mode_bound_check(P({1, 4, 1})));
  EXPECT_TRUE(mode_bound_check(P({1, 11, 11, 1})));
  EXPECT_THROW(mode_bound_check(P({1, 0, 1})), Error);
}

TEST(EVectorConversion, Examples) {
  EXPECT_EQ(to_e_vector(P({1, 1}), 2).e, (std::vector<BigInt>{1, 2}));
  EXPECT_EQ(to_e_vector(P({1}), 1).e, (std::vector<BigInt>{1}));
  EXPECT_EQ(to_e_vector(P({1}), 2).e, (std::vector<BigInt>{1, 1}));
  EXPECT_THROW(to_e_vector(P({1, 1, 1}), 2), Error);
}

TEST(EVectorConversion, RoundTrip) {
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto e = to_e_vector(eulerian(n), n);
    EXPECT_EQ(e.to_w(), eulerian(n));
    // Antichain: e_n = n! surjections onto n values.
    BigInt fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= static_cast<unsigned long>(k);
    EXPECT_EQ(e.at(n), fact);
  }
}

// Products of t, (1+t) and palindromic quadratics 1 + A t + t^2 with A > 2
// are symmetric with real non-positive zeros and expand non-negatively.
TEST(SymmetricCone, RealRootedSymmetricExpandsNonnegatively) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> small(0, 3);
  std::uniform_int_distribution<long> a_dist(3, 12);
  for (int trial = 0; trial < 200; ++trial) {
    IntPolynomial f = P({1});
    int d = 0;
    int shifts = small(rng);
    f = f.shifted(static_cast<std::size_t>(shifts));
    for (int k = small(rng); k > 0; --k) {
      f = f * P({1, 1});
      d += 1;
    }
    for (int k = small(rng); k > 0; --k) {
      f = f * P({1, a_dist(rng), 1});
      d += 2;
    }
    d += 2 * shifts;
    ASSERT_TRUE(is_symmetric(f, d));
    EXPECT_TRUE(real_nonpositive_roots(f));
    const auto e = symmetric_expand(f, d);
    EXPECT_TRUE(e.nonnegative());
    EXPECT_EQ(e.reconstruct(), f);
    if (d % 2 == 0) {
      BigInt v = f.evaluate(BigInt(-1));
      if ((d / 2) % 2 != 0) v = -v;
      EXPECT_GE(v, 0);
    } else {
      EXPECT_EQ(f.evaluate(BigInt(-1)), 0);
    }
  }
}

TEST(SymmetricCone, ClosedUnderProducts) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> coef(0, 5);
  std::uniform_int_distribution<int> deg(0, 6);
  auto random_member = [&](int d) {
    SymmetricExpansion s{d, {}};
    for (int i = 0; i <= d / 2; ++i) s.a.push_back(BigInt(coef(rng)));
    return s;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const int c = deg(rng);
    const int d = deg(rng);
    const IntPolynomial product = random_member(c).reconstruct() * random_member(d).reconstruct();
    if (product.is_zero()) continue;
    const auto e = symmetric_expand(product, c + d);
    EXPECT_TRUE(e.nonnegative());
  }
}
