#pragma once

#include <optional>
#include <vector>

#include "jfunc/poly.hpp"
#include "jfunc/ratfunc.hpp"

namespace jfunc {

/// k-th cyclotomic polynomial Phi_k, k >= 1 (process-wide cache).
const IntPoly& cyclotomic(int k);

/// Multiset of cyclotomic factors: exponent()[k] is the multiplicity of
/// Phi_k (index 0 unused). Represents the monic polynomial prod Phi_k^{e_k}.
class CyclotomicProduct {
 public:
  CyclotomicProduct() = default;

  /// Exponents of q^m - 1 = prod_{k | m} Phi_k.
  static CyclotomicProduct q_pow_minus_one(int m);

  int exponent(int k) const { return k < static_cast<int>(exps_.size()) ? exps_[k] : 0; }
  int max_index() const { return static_cast<int>(exps_.size()) - 1; }
  bool is_one() const;
  int degree() const;

  CyclotomicProduct& operator*=(const CyclotomicProduct& o);
  /// Componentwise max (lcm).
  CyclotomicProduct& max_with(const CyclotomicProduct& o);
  /// this / o, requires o to divide this.
  CyclotomicProduct quotient(const CyclotomicProduct& o) const;

  void add(int k, int times = 1);
  void remove(int k);

  IntPoly expand() const;
  /// p * prod Phi_k^{e_k}, multiplying factor by factor.
  IntPoly multiply(IntPoly p) const;

  friend bool operator==(const CyclotomicProduct& a, const CyclotomicProduct& b);

 private:
  void trim();
  std::vector<int> exps_;
};

/// num / prod Phi_k^{e_k}. After reduce(), no Phi_k with e_k > 0 divides num,
/// so the fraction is in lowest terms.
struct CyclotomicFraction {
  IntPoly num;
  CyclotomicProduct den;

  void reduce();
  RatFunc to_ratfunc() const;

  /// Factors f.den() as +-prod Phi_k with k <= max_index. Returns nullopt if
  /// the denominator is not of that form.
  static std::optional<CyclotomicFraction> from_ratfunc(const RatFunc& f, int max_index);
};

}  // namespace jfunc
