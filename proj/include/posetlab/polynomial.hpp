#pragma once

// Exact univariate polynomials over GMP integers and rationals, and the
// symmetric-basis / e-vector / real-rootedness machinery built on them.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "posetlab/error.hpp"

namespace posetlab {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense coefficients, index = degree, no trailing zeros (the zero
/// polynomial has no coefficients and degree -1).
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<long> coefficients) {
    for (long v : coefficients) c_.emplace_back(v);
    trim();
  }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
  static Polynomial monomial(const T& v, std::size_t degree) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = v;
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coefficients() const { return c_; }
  T coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }

  template <class U>
  U evaluate(const U& x) const {
    U acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = U(acc * x + U(*it));
    return acc;
  }

  Polynomial derivative() const {
    std::vector<T> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(T(c_[i] * static_cast<unsigned long>(i)));
    return Polynomial(std::move(d));
  }

  /// t^k * f
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<T> c(k, T(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return Polynomial(std::move(c));
  }

  /// f(-t)
  Polynomial reflected() const {
    std::vector<T> c = c_;
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return Polynomial(std::move(c));
  }

  /// f(t + a), by Horner's rule on polynomials.
  Polynomial translated(const T& a) const {
    Polynomial acc;
    const Polynomial lin(std::vector<T>{a, T(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= T(-1); }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Human-readable form such as "1 + 4t + t^2".
  std::string to_string() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

RatPolynomial to_rational(const IntPolynomial& f);
/// Throws NonIntegerSolution if some coefficient is not an integer.
IntPolynomial to_integer(const RatPolynomial& f);

/// (1 + t)^n
IntPolynomial one_plus_t_power(std::size_t n);

/// Euclidean division over the rationals; divisor must be non-zero.
std::pair<RatPolynomial, RatPolynomial> divide(const RatPolynomial& a, const RatPolynomial& b);
/// Monic gcd (zero if both are zero).
RatPolynomial gcd(RatPolynomial a, RatPolynomial b);

/// The binomial coefficient C(t + shift, k) as a polynomial in t.
RatPolynomial binomial_polynomial(long shift, std::size_t k);
/// C(n, k) for any integer n (generalized, zero for k < 0).
BigInt binomial(const BigInt& n, long k);

/// Coefficients of f in the basis t^i (1+t)^{d-2i}, i = 0..floor(d/2).
struct SymmetricExpansion {
  int d = 0;
  std::vector<BigInt> a;

  bool nonnegative() const;
  IntPolynomial reconstruct() const;
};

/// W(x) = sum_i e_i x^{i-1} (1-x)^{p-i}, stored e_1..e_p at index 0..p-1.
struct EVector {
  std::vector<BigInt> e;

  std::size_t p() const { return e.size(); }
  /// e_i with the 1-based index used in formulas; e_0 = 0.
  BigInt at(std::size_t i) const { return i == 0 || i > e.size() ? BigInt(0) : e[i - 1]; }
  IntPolynomial to_w() const;
  bool operator==(const EVector&) const = default;
};

/// n-th Eulerian polynomial, sum over permutations of t^des. Throws InvalidSize for n = 0.
IntPolynomial eulerian(std::size_t n);

/// coefficient(i) == coefficient(d - i) for 0 <= i <= d; false when deg f > d.
bool is_symmetric(const IntPolynomial& f, int d);

/// Weakly increasing then weakly decreasing coefficient sequence.
bool is_unimodal(const IntPolynomial& f);

/// Peels off a_i t^i (1+t)^{d-2i} from the low end. Throws NotSymmetric.
SymmetricExpansion symmetric_expand(const IntPolynomial& f, int d);

/// True iff every complex root is real and <= 0. Decided with a Sturm chain of
/// the square-free part, after removing factors of t. Throws ZeroPolynomial.
bool real_nonpositive_roots(const IntPolynomial& f);

/// Number of distinct real roots in the open interval (-inf, 0) for f(0) != 0.
std::size_t count_negative_roots(const RatPolynomial& f);

/// Mean of the indices where the maximal coefficient is attained.
/// Throws ZeroPolynomial or NegativeCoefficient.
Rational mode(const IntPolynomial& f);

/// |f'(1)/f(1) - mode(f)| < 1. Throws PreconditionViolated unless f has a
/// positive leading coefficient and only real non-positive roots.
bool mode_bound_check(const IntPolynomial& f);

/// Solves W(x) = sum_i e_i x^{i-1}(1-x)^{p-i}. Throws PreconditionViolated if
/// deg w > p - 1 or p == 0.
EVector to_e_vector(const IntPolynomial& w, std::size_t p);

}  // namespace posetlab
