#include "jfunc/cyclotomic.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>

#include "jfunc/errors.hpp"

namespace jfunc {

namespace {

class CyclotomicCache {
 public:
  const IntPoly& get(int k) {
    {
      std::shared_lock lock(mutex_);
      if (k < static_cast<int>(polys_.size())) return polys_[k];
    }
    std::unique_lock lock(mutex_);
    if (polys_.empty()) polys_.emplace_back();  // index 0 unused
    while (static_cast<int>(polys_.size()) <= k) {
      const int n = static_cast<int>(polys_.size());
      // Phi_n = (q^n - 1) / prod_{d | n, d < n} Phi_d
      IntPoly p = -IntPoly::one_minus_q_pow(n);
      for (int d = 1; d < n; ++d) {
        if (n % d == 0) p = *divide_exact(p, polys_[d]);
      }
      polys_.push_back(std::move(p));
    }
    return polys_[k];
  }

 private:
  std::shared_mutex mutex_;
  std::deque<IntPoly> polys_;  // deque: references stay valid on growth
};

}  // namespace

const IntPoly& cyclotomic(int k) {
  static CyclotomicCache cache;
  if (k < 1) throw InvalidArgument("cyclotomic index must be >= 1");
  return cache.get(k);
}

CyclotomicProduct CyclotomicProduct::q_pow_minus_one(int m) {
  if (m < 1) throw InvalidArgument("q^m - 1 requires m >= 1");
  CyclotomicProduct p;
  for (int d = 1; d <= m; ++d)
    if (m % d == 0) p.add(d);
  return p;
}

bool CyclotomicProduct::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

int CyclotomicProduct::degree() const {
  int deg = 0;
  for (int k = 1; k <= max_index(); ++k)
    if (exps_[k]) deg += exps_[k] * cyclotomic(k).degree();
  return deg;
}

void CyclotomicProduct::add(int k, int times) {
  if (k < 1) throw InvalidArgument("cyclotomic index must be >= 1");
  if (static_cast<int>(exps_.size()) <= k) exps_.resize(k + 1, 0);
  exps_[k] += times;
}

void CyclotomicProduct::remove(int k) {
  if (exponent(k) == 0) throw InternalError("removing an absent cyclotomic factor");
  --exps_[k];
  trim();
}

void CyclotomicProduct::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

CyclotomicProduct& CyclotomicProduct::operator*=(const CyclotomicProduct& o) {
  if (o.exps_.size() > exps_.size()) exps_.resize(o.exps_.size(), 0);
  for (std::size_t k = 0; k < o.exps_.size(); ++k) exps_[k] += o.exps_[k];
  return *this;
}

CyclotomicProduct& CyclotomicProduct::max_with(const CyclotomicProduct& o) {
  if (o.exps_.size() > exps_.size()) exps_.resize(o.exps_.size(), 0);
  for (std::size_t k = 0; k < o.exps_.size(); ++k) exps_[k] = std::max(exps_[k], o.exps_[k]);
  return *this;
}

CyclotomicProduct CyclotomicProduct::quotient(const CyclotomicProduct& o) const {
  CyclotomicProduct r = *this;
  for (int k = 1; k <= o.max_index(); ++k) {
    if (r.exponent(k) < o.exps_[k]) throw InternalError("cyclotomic quotient is not a polynomial");
    if (o.exps_[k]) r.exps_[k] -= o.exps_[k];
  }
  r.trim();
  return r;
}

IntPoly CyclotomicProduct::expand() const { return multiply(IntPoly{1}); }

IntPoly CyclotomicProduct::multiply(IntPoly p) const {
  for (int k = 1; k <= max_index(); ++k) {
    for (int e = 0; e < exps_[k]; ++e) p = p * cyclotomic(k);
  }
  return p;
}

bool operator==(const CyclotomicProduct& a, const CyclotomicProduct& b) {
  CyclotomicProduct x = a, y = b;
  x.trim();
  y.trim();
  return x.exps_ == y.exps_;
}

void CyclotomicFraction::reduce() {
  if (num.is_zero()) {
    den = CyclotomicProduct();
    return;
  }
  for (int k = 1; k <= den.max_index(); ++k) {
    while (den.exponent(k) > 0) {
      auto q = divide_exact(num, cyclotomic(k));
      if (!q) break;
      num = std::move(*q);
      den.remove(k);
    }
  }
}

RatFunc CyclotomicFraction::to_ratfunc() const { return RatFunc(num, den.expand()); }

std::optional<CyclotomicFraction> CyclotomicFraction::from_ratfunc(const RatFunc& f, int max_index) {
  CyclotomicFraction out;
  out.num = f.num();
  IntPoly rest = f.den();
  for (int k = 1; k <= max_index && rest.degree() > 0; ++k) {
    while (rest.degree() >= cyclotomic(k).degree()) {
      auto q = divide_exact(rest, cyclotomic(k));
      if (!q) break;
      rest = std::move(*q);
      out.den.add(k);
    }
  }
  if (rest.degree() != 0) return std::nullopt;
  if (rest.leading() == -1) out.num = -out.num;
  else if (rest.leading() != 1) return std::nullopt;
  return out;
}

}  // namespace jfunc
