#pragma once

#include <string>

#include "jfunc/poly.hpp"

namespace jfunc {

/// Reduced rational function num/den in Q(q).
///
/// Canonical form: gcd(num, den) = 1 in Z[q] (integer content included) and
/// den has a positive leading coefficient. Two RatFuncs are equal iff their
/// stored numerators and denominators are equal.
class RatFunc {
 public:
  RatFunc() : num_(), den_{1} {}
  RatFunc(IntPoly num, IntPoly den);
  RatFunc(const IntPoly& p) : num_(p), den_{1} {}  // NOLINT: implicit by design of the field embedding
  static RatFunc constant(long c) { return RatFunc(IntPoly{c}); }
  /// q^k as a rational function, k of any sign.
  static RatFunc q_power(int k);
  static RatFunc from_laurent(const LaurentPoly& p);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0 && den_.leading() == 1; }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const;

  /// Multiplication by q^k, any sign of k.
  RatFunc shifted(int k) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  struct Unchecked {};
  RatFunc(IntPoly num, IntPoly den, Unchecked) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();
  IntPoly num_;
  IntPoly den_;
};

/// f(1/q) as a reduced rational function. Throws DomainError for f = 0.
RatFunc invert_q(const RatFunc& f);

/// "(1+q)/(1-2q+q^2)"
std::string to_string(const RatFunc& f, bool unicode = false);

}  // namespace jfunc
