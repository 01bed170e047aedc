#include "jfunc/series.hpp"

#include "jfunc/errors.hpp"

namespace jfunc {

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw InvalidArgument("negative series order");
  coeffs_.assign(order + 1, Integer(0));
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (order < 0) throw InvalidArgument("negative series order");
  coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::from_poly(const IntPoly& p, int order) {
  TruncatedSeries s(order);
  for (int k = 0; k <= std::min(order, p.degree()); ++k) s.coeffs_[k] = p.coeffs()[k];
  return s;
}

TruncatedSeries TruncatedSeries::inverse_q_factorial(int m, int order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = 1;
  for (int k = 1; k <= m; ++k) s.divide_by_one_minus_q_pow(k);
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.order() != order()) throw InvalidArgument("series order mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw InvalidArgument("series order mismatch");
  const int n = a.order();
  TruncatedSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      mpz_addmul(r.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::shifted(int k) const {
  if (k < 0) throw InvalidArgument("negative series shift");
  TruncatedSeries r(order());
  for (int i = 0; i + k <= order(); ++i) r.coeffs_[i + k] = coeffs_[i];
  return r;
}

void TruncatedSeries::divide_by_one_minus_q_pow(int k) {
  if (k < 1) throw InvalidArgument("1/(1 - q^k) requires k >= 1");
  for (int i = k; i <= order(); ++i) coeffs_[i] += coeffs_[i - k];
}

TruncatedSeries series_expand(const RatFunc& f, int order) {
  const Integer d0 = f.den().coeff(0);
  if (sgn(d0) == 0) throw DomainError("denominator vanishes at q = 0");
  if (d0 != 1 && d0 != -1) throw DomainError("expansion at q = 0 is not integral (den(0) = " + d0.get_str() + ")");
  // den * s = num, solved coefficient by coefficient.
  TruncatedSeries s(order);
  const auto& den = f.den().coeffs();
  for (int k = 0; k <= order; ++k) {
    Integer acc = f.num().coeff(k);
    for (int j = 1; j <= std::min<int>(k, static_cast<int>(den.size()) - 1); ++j) acc -= den[j] * s[k - j];
    s[k] = d0 == 1 ? acc : Integer(-acc);
  }
  return s;
}

}  // namespace jfunc
