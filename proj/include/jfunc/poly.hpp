#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace jfunc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients. coeffs()[k] is the coefficient of q^k; no trailing zeros,
/// so the zero polynomial has an empty coefficient vector.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, int exponent);
  /// 1 - q^k, k >= 1.
  static IntPoly one_minus_q_pow(int k);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// Coefficient of q^k, zero outside the stored range.
  Integer coeff(int k) const;
  const Integer& leading() const { return coeffs_.back(); }
  /// Lowest exponent with nonzero coefficient; -1 for zero.
  int valuation() const;

  Integer eval(const Integer& x) const;
  Integer eval_at_one() const;
  /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
  Integer content() const;
  /// Divides by content and makes the leading coefficient positive.
  IntPoly primitive_part() const;
  /// Multiplication by q^k, k >= 0.
  IntPoly shifted(int k) const;
  /// q^{deg} p(1/q): coefficient vector reversed (low-order zeros drop off).
  IntPoly reversed() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);
  /// Exact division of every coefficient by c; throws DomainError if inexact.
  IntPoly& divide_exact(const Integer& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }
  IntPoly operator-() const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Adds c * q^k in place.
  void add_term(const Integer& c, int k);
  /// this += a * b, without a temporary.
  void add_product(const IntPoly& a, const IntPoly& b);

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

/// Result of dividing over Q[q].
struct RationalDivision {
  std::vector<Rational> quotient;
  bool exact = false;  ///< remainder is zero
};

/// Euclidean division over Q; b must be nonzero.
RationalDivision divide_over_rationals(const IntPoly& a, const IntPoly& b);

/// Exact division in Z[q]: returns a / b when b divides a with integer
/// quotient, nullopt otherwise. b must be nonzero.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

/// Pseudo-remainder prem(a, b) = lc(b)^{deg a - deg b + 1} a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// gcd in Z[q], normalized to positive leading coefficient; gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// gcd via the primitive PRS only (slow path, exposed for tests).
IntPoly gcd_primitive_prs(const IntPoly& a, const IntPoly& b);

/// Laurent polynomial: offset is the exponent of coeffs()[0]. The first and
/// last stored coefficients are nonzero unless the polynomial is zero, in
/// which case coeffs is empty and offset is 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int offset, std::vector<Integer> coeffs);
  explicit LaurentPoly(const IntPoly& p) : LaurentPoly(0, p.coeffs()) {}

  static LaurentPoly monomial(const Integer& c, int exponent);

  bool is_zero() const { return coeffs_.empty(); }
  int offset() const { return offset_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  int min_exponent() const { return offset_; }
  int max_exponent() const { return offset_ + static_cast<int>(coeffs_.size()) - 1; }
  Integer coeff(int exponent) const;

  LaurentPoly shifted(int k) const;
  /// Requires min_exponent() >= 0 (or zero).
  IntPoly to_poly() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.offset_ == b.offset_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();
  int offset_ = 0;
  std::vector<Integer> coeffs_;
};

/// Polynomial structure predicates.
bool is_palindromic(const IntPoly& p);
/// Weakly increasing then weakly decreasing coefficient sequence.
bool is_unimodal(const IntPoly& p);
/// All coefficients >= 0.
bool has_nonnegative_coefficients(const IntPoly& p);
inline Integer eval_at_one(const IntPoly& p) { return p.eval_at_one(); }

/// Human-readable rendering, e.g. "1+3q+q^2" (ascii) or "1+3q+q²" (unicode).
std::string to_string(const IntPoly& p, bool unicode = false);
std::string to_string(const LaurentPoly& p, bool unicode = false);
/// LaTeX rendering with explicit q-powers, e.g. "1 + 3q + q^{2}".
std::string to_latex(const IntPoly& p);

}  // namespace jfunc
