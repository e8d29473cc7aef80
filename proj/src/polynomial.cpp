#include "posetlab/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace posetlab {

template <class T>
std::string Polynomial<T>::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    T mag = c_[i];
    if (mag < 0) {
      mag = -mag;
      out << (first ? "-" : " - ");
    } else if (!first) {
      out << " + ";
    }
    if (i == 0 || mag != 1) out << mag.get_str();
    if (i >= 1) out << 't';
    if (i >= 2) out << '^' << i;
    first = false;
  }
  return out.str();
}

template std::string Polynomial<BigInt>::to_string() const;
template std::string Polynomial<Rational>::to_string() const;

RatPolynomial to_rational(const IntPolynomial& f) {
  std::vector<Rational> c;
  c.reserve(f.coefficients().size());
  for (const auto& v : f.coefficients()) c.emplace_back(v);
  return RatPolynomial(std::move(c));
}

IntPolynomial to_integer(const RatPolynomial& f) {
  std::vector<BigInt> c;
  c.reserve(f.coefficients().size());
  for (const auto& v : f.coefficients()) {
    if (v.get_den() != 1) throw Error(ErrorCode::NonIntegerSolution, "coefficient " + v.get_str() + " is not integral");
    c.emplace_back(v.get_num());
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial one_plus_t_power(std::size_t n) {
  std::vector<BigInt> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) mpz_bin_uiui(c[k].get_mpz_t(), n, k);
  return IntPolynomial(std::move(c));
}

std::pair<RatPolynomial, RatPolynomial> divide(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  if (rem.size() < bc.size()) return {RatPolynomial(), a};
  std::vector<Rational> quot(rem.size() - db, Rational(0));
  for (std::size_t k = rem.size(); k-- > db;) {
    const Rational q = rem[k] / bc.back();
    if (q == 0) continue;
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * bc[j];
  }
  rem.resize(db);
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    auto r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const Rational lead = a.leading();
  return a * Rational(1 / lead);
}

RatPolynomial binomial_polynomial(long shift, std::size_t k) {
  RatPolynomial acc = RatPolynomial::constant(Rational(1));
  BigInt factorial = 1;
  for (std::size_t j = 0; j < k; ++j) {
    acc = acc * RatPolynomial(std::vector<Rational>{Rational(shift - static_cast<long>(j)), Rational(1)});
    factorial *= static_cast<unsigned long>(j + 1);
  }
  return acc * Rational(Rational(1) / Rational(factorial));
}

BigInt binomial(const BigInt& n, long k) {
  if (k < 0) return 0;
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

bool SymmetricExpansion::nonnegative() const {
  return std::all_of(a.begin(), a.end(), [](const BigInt& v) { return v >= 0; });
}

IntPolynomial SymmetricExpansion::reconstruct() const {
  IntPolynomial acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += one_plus_t_power(static_cast<std::size_t>(d) - 2 * i).shifted(i) * a[i];
  }
  return acc;
}

IntPolynomial EVector::to_w() const {
  const std::size_t n = e.size();
  IntPolynomial acc;
  for (std::size_t i = 1; i <= n; ++i) {
    acc += one_plus_t_power(n - i).reflected().shifted(i - 1) * e[i - 1];
  }
  return acc;
}

IntPolynomial eulerian(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidSize, "Eulerian polynomials start at n = 1");
  // A(m, k) = (k + 1) A(m-1, k) + (m - k) A(m-1, k-1)
  std::vector<BigInt> row{BigInt(1)};
  for (std::size_t m = 2; m <= n; ++m) {
    std::vector<BigInt> next(m, BigInt(0));
    for (std::size_t k = 0; k < m; ++k) {
      if (k < row.size()) next[k] += row[k] * static_cast<unsigned long>(k + 1);
      if (k >= 1) next[k] += row[k - 1] * static_cast<unsigned long>(m - k);
    }
    row = std::move(next);
  }
  return IntPolynomial(std::move(row));
}

bool is_symmetric(const IntPolynomial& f, int d) {
  if (d < 0) return f.is_zero();
  if (f.degree() > d) return false;
  const auto du = static_cast<std::size_t>(d);
  for (std::size_t i = 0; i <= du; ++i) {
    if (f.coefficient(i) != f.coefficient(du - i)) return false;
  }
  return true;
}

bool is_unimodal(const IntPolynomial& f) {
  const auto& c = f.coefficients();
  std::size_t i = 0;
  while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
  while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
  return i + 1 >= c.size();
}

SymmetricExpansion symmetric_expand(const IntPolynomial& f, int d) {
  if (d < 0 || !is_symmetric(f, d)) {
    throw Error(ErrorCode::NotSymmetric, f.to_string() + " is not symmetric with center " + std::to_string(d) + "/2");
  }
  SymmetricExpansion out;
  out.d = d;
  IntPolynomial rest = f;
  const auto half = static_cast<std::size_t>(d) / 2;
  for (std::size_t i = 0; i <= half; ++i) {
    BigInt a = rest.coefficient(i);
    if (a != 0) rest -= one_plus_t_power(static_cast<std::size_t>(d) - 2 * i).shifted(i) * a;
    out.a.push_back(std::move(a));
  }
  if (!rest.is_zero()) throw Error(ErrorCode::NotSymmetric, "peeling left a remainder " + rest.to_string());
  return out;
}

namespace {

int sign_of(const Rational& v) { return sgn(v); }

std::size_t variations(const std::vector<int>& signs) {
  std::size_t count = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

std::size_t count_negative_roots(const RatPolynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root count of the zero polynomial");
  if (f.coefficient(0) == 0) throw Error(ErrorCode::PreconditionViolated, "f(0) must be non-zero");
  std::vector<RatPolynomial> chain{f, f.derivative()};
  while (!chain.back().is_zero()) {
    chain.push_back(-divide(chain[chain.size() - 2], chain.back()).second);
  }
  chain.pop_back();
  std::vector<int> at_minus_inf;
  std::vector<int> at_zero;
  for (const auto& s : chain) {
    const int lead = sign_of(s.leading());
    at_minus_inf.push_back(s.degree() % 2 == 0 ? lead : -lead);
    at_zero.push_back(sign_of(s.coefficient(0)));
  }
  return variations(at_minus_inf) - variations(at_zero);
}

bool real_nonpositive_roots(const IntPolynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "real-rootedness of the zero polynomial");
  std::size_t k = 0;
  while (f.coefficient(k) == 0) ++k;
  std::vector<Rational> c;
  for (std::size_t i = k; i < f.coefficients().size(); ++i) c.emplace_back(f.coefficients()[i]);
  const RatPolynomial g(std::move(c));
  if (g.degree() == 0) return true;
  const RatPolynomial square_free = divide(g, gcd(g, g.derivative())).first;
  return count_negative_roots(square_free) == static_cast<std::size_t>(square_free.degree());
}

Rational mode(const IntPolynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "mode of the zero polynomial");
  const auto& c = f.coefficients();
  if (std::any_of(c.begin(), c.end(), [](const BigInt& v) { return v < 0; })) {
    throw Error(ErrorCode::NegativeCoefficient, f.to_string());
  }
  const BigInt top = *std::max_element(c.begin(), c.end());
  unsigned long sum = 0;
  unsigned long count = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == top) {
      sum += i;
      ++count;
    }
  }
  Rational m(static_cast<long>(sum), count);
  m.canonicalize();
  return m;
}

bool mode_bound_check(const IntPolynomial& f) {
  if (f.is_zero() || f.leading() <= 0 || !real_nonpositive_roots(f)) {
    throw Error(ErrorCode::PreconditionViolated,
                f.to_string() + " needs a positive leading coefficient and real non-positive roots");
  }
  const Rational ratio = Rational(f.derivative().evaluate(BigInt(1))) / Rational(f.evaluate(BigInt(1)));
  return abs(ratio - mode(f)) < 1;
}

EVector to_e_vector(const IntPolynomial& w, std::size_t p) {
  if (p == 0) throw Error(ErrorCode::PreconditionViolated, "p must be positive");
  if (w.degree() > static_cast<int>(p) - 1) {
    throw Error(ErrorCode::PreconditionViolated, "degree of W exceeds p - 1");
  }
  // x = u/(1+u) turns the basis x^{i-1}(1-x)^{p-i} into u^{i-1}/(1+u)^{p-1}.
  IntPolynomial acc;
  for (std::size_t j = 0; j < w.coefficients().size(); ++j) {
    acc += one_plus_t_power(p - 1 - j).shifted(j) * w.coefficients()[j];
  }
  EVector out;
  out.e.reserve(p);
  for (std::size_t i = 0; i < p; ++i) out.e.push_back(acc.coefficient(i));
  return out;
}

}  // namespace posetlab
