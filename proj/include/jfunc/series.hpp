#pragma once

#include <vector>

#include "jfunc/poly.hpp"
#include "jfunc/ratfunc.hpp"

namespace jfunc {

/// Power series in q truncated after q^order; coeffs().size() == order + 1.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  TruncatedSeries(int order, std::vector<Integer> coeffs);
  /// Truncation of a polynomial, padded with zeros.
  static TruncatedSeries from_poly(const IntPoly& p, int order);
  /// 1 / prod_{k=1}^{m} (1 - q^k) truncated.
  static TruncatedSeries inverse_q_factorial(int m, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& operator[](int k) const { return coeffs_[k]; }
  Integer& operator[](int k) { return coeffs_[k]; }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  /// Truncated product; both operands must share the same order.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  /// Multiplication by q^k, k >= 0, dropping overflow.
  TruncatedSeries shifted(int k) const;
  /// Multiplication by 1/(1 - q^k), k >= 1, in place.
  void divide_by_one_minus_q_pow(int k);

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Integer> coeffs_;
};

/// Taylor coefficients of f at q = 0 through q^order. Throws DomainError if
/// the denominator vanishes at 0, or if den(0) is not a unit (the expansion
/// would leave Z).
TruncatedSeries series_expand(const RatFunc& f, int order);

}  // namespace jfunc
