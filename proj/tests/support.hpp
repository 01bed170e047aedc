// Test-side oracles and random generators. Everything here is written
// independently of the library code paths it is used to check.
#pragma once

#include <map>
#include <random>
#include <vector>

#include "jfunc/poly.hpp"
#include "jfunc/ratfunc.hpp"
#include "jfunc/root_system.hpp"

namespace testing_support {

using jfunc::Integer;
using jfunc::IntPoly;
using jfunc::LatticeVector;
using jfunc::Rational;
using jfunc::RatFunc;
using jfunc::RootSystem;

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed0000ULL + salt); }

inline int uniform(std::mt19937_64& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

inline IntPoly random_poly(std::mt19937_64& g, int max_degree, int max_abs) {
  std::vector<Integer> c(uniform(g, 0, max_degree + 1));
  for (auto& x : c) x = uniform(g, -max_abs, max_abs);
  return IntPoly(std::move(c));
}

inline LatticeVector random_vector(std::mt19937_64& g, int rank, int lo, int hi) {
  std::vector<int> v(rank);
  for (auto& x : v) x = uniform(g, lo, hi);
  return LatticeVector(std::move(v));
}

// Integer binomial by the multiplicative formula.
inline Integer choose(long a, long b) {
  if (b < 0 || b > a) return 0;
  Integer r = 1;
  for (long k = 1; k <= b; ++k) {
    r *= a - b + k;
    r /= k;
  }
  return r;
}

inline Integer factorial(long n) {
  Integer r = 1;
  for (long k = 2; k <= n; ++k) r *= k;
  return r;
}

// prod_{j=1}^m (1 - q^{step j}) by repeated multiplication.
inline IntPoly q_factorial_product(int m, int step = 1) {
  IntPoly p{1};
  for (int j = 1; j <= m; ++j) p *= IntPoly::one_minus_q_pow(step * j);
  return p;
}

// Gaussian binomial as the quotient of q-factorials.
inline IntPoly gaussian_quotient(int a, int b) {
  if (b < 0 || b > a) return {};
  auto r = jfunc::divide_exact(q_factorial_product(a), q_factorial_product(b) * q_factorial_product(a - b));
  return r ? *r : IntPoly{};
}

// Pochhammer product (q)_alpha written out from the definition.
inline IntPoly pochhammer(const RootSystem& spec, const LatticeVector& alpha) {
  IntPoly p{1};
  for (int i = 0; i < alpha.size(); ++i) p *= q_factorial_product(alpha[i], spec.symmetrizer(i));
  return p;
}

// (beta, gamma) from Cartan entries, written as a double loop.
inline long form(const RootSystem& spec, const LatticeVector& b, const LatticeVector& c) {
  long s = 0;
  for (int i = 0; i < spec.rank(); ++i)
    for (int j = 0; j < spec.rank(); ++j) s += static_cast<long>(b[i]) * c[j] * spec.symmetrizer(i) * spec.cartan(i, j);
  return s;
}

// Every beta in [0, alpha] by nested counting (first coordinate slowest).
inline std::vector<LatticeVector> box_below(const LatticeVector& alpha) {
  std::vector<LatticeVector> out;
  std::vector<int> b(alpha.size(), 0);
  while (true) {
    out.emplace_back(b);
    int k = alpha.size() - 1;
    while (k >= 0 && b[k] == alpha[k]) b[k--] = 0;
    if (k < 0) break;
    ++b[k];
  }
  return out;
}

// J_alpha by the fermionic recursion in plain RatFunc arithmetic (no
// cyclotomic bookkeeping), memoized in `memo`.
inline RatFunc j_plain(const RootSystem& spec, const LatticeVector& alpha, std::map<LatticeVector, RatFunc>& memo) {
  if (auto it = memo.find(alpha); it != memo.end()) return it->second;
  if (alpha.is_zero()) return memo[alpha] = RatFunc::constant(1);
  RatFunc sum;
  for (const auto& beta : box_below(alpha)) {
    if (beta == alpha) continue;
    const LatticeVector gamma = alpha - beta;
    const int e = static_cast<int>(form(spec, beta, beta) / 2);
    sum += RatFunc(IntPoly::monomial(1, e), pochhammer(spec, gamma)) * j_plain(spec, beta, memo);
  }
  const int m = static_cast<int>(form(spec, alpha, alpha) / 2);
  return memo[alpha] = sum * RatFunc(IntPoly{1}, IntPoly::one_minus_q_pow(m));
}

// Apery numbers, sum_k C(m,k)^2 C(m+k,k)^2.
inline Integer apery(int m) {
  Integer s = 0;
  for (int k = 0; k <= m; ++k) {
    Integer t = choose(m, k) * choose(m + k, k);
    s += t * t;
  }
  return s;
}

inline Integer catalan(int n) { return choose(2 * n, n) / (n + 1); }

// Narayana polynomial from the closed form N(n,k) = C(n,k) C(n,k-1) / n,
// coefficient of q^{k-1}.
inline IntPoly narayana_closed(int n) {
  std::vector<Integer> c;
  for (int k = 1; k <= n; ++k) c.push_back(choose(n, k) * choose(n, k - 1) / n);
  return IntPoly(std::move(c));
}

// Double-sum closed form in type A3:
// sum_{i,j} q^{i^2+j^2-ij} [a1,i][a2,i][a2,j][a3,j][i+j,i].
inline IntPoly a3_double_sum(int a1, int a2, int a3) {
  IntPoly total;
  for (int i = 0; i <= std::min(a1, a2); ++i) {
    for (int j = 0; j <= std::min(a2, a3); ++j) {
      IntPoly t = gaussian_quotient(a1, i) * gaussian_quotient(a2, i) * gaussian_quotient(a2, j) *
                  gaussian_quotient(a3, j) * gaussian_quotient(i + j, i);
      total += t.shifted(i * i + j * j - i * j);
    }
  }
  return total;
}

// Taylor coefficients of num/den at 0 by long division, den(0) = +-1.
inline std::vector<Integer> taylor(const IntPoly& num, const IntPoly& den, int order) {
  std::vector<Integer> out(order + 1);
  const Integer d0 = den.coeff(0);
  for (int k = 0; k <= order; ++k) {
    Integer acc = num.coeff(k);
    for (int j = 1; j <= k; ++j) acc -= den.coeff(j) * out[k - j];
    out[k] = acc / d0;
  }
  return out;
}

}  // namespace testing_support
