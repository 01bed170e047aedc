#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "jfunc/poly.hpp"
#include "jfunc/root_system.hpp"

namespace jfunc {

/// Triangular array m_{k,i}, 1 <= i <= k <= n. row(n) is the fixed top row
/// (a_1, ..., a_n); every lower entry satisfies
/// m_{k,i} <= min(m_{k+1,i}, m_{k+1,i+1}).
class TriangularArray {
 public:
  explicit TriangularArray(const LatticeVector& top);

  int n() const { return static_cast<int>(rows_.size()); }
  /// 1-based, as in m_{k,i}.
  int at(int k, int i) const { return rows_[k - 1][i - 1]; }
  int& at(int k, int i) { return rows_[k - 1][i - 1]; }
  const std::vector<int>& row(int k) const { return rows_[k - 1]; }
  bool is_valid() const;

 private:
  std::vector<std::vector<int>> rows_;
};

/// Calls fn on every admissible array with top row alpha (type A_n,
/// n = alpha.size()), filling rows n-1, n-2, ..., 1 depth first.
void for_each_array(const LatticeVector& alpha, const std::function<void(const TriangularArray&)>& fn);
std::vector<TriangularArray> enumerate_arrays(const LatticeVector& alpha);

/// D(m) = sum_{k=1}^{n-1} (sum_i m_{k,i}^2 - sum_i m_{k,i} m_{k,i+1}).
int d_statistic(const TriangularArray& m);

/// prod_{k<n} prod_i [m_{k+1,i} choose m_{k,i}] [m_{k+1,i+1} choose m_{k,i}].
IntPoly array_weight(const TriangularArray& m);

/// sum over arrays of q^{D(m)} * array_weight(m).
IntPoly h_direct(const LatticeVector& alpha);

/// H_alpha = sum_beta prod_{j<n} [a_j choose b_j][a_{j+1} choose b_j] q^{(beta,beta)/2} H_beta,
/// beta running over the rank n-1 positive cone; H = 1 in rank 0.
/// Intermediate H_beta are memoized process-wide.
IntPoly h_recursive(const LatticeVector& alpha);

/// Integer version of the array sum at q = 1:
/// sum over arrays of prod C(m_{k+1,i}, m_{k,i}) C(m_{k+1,i+1}, m_{k,i}).
Integer binomial_array_sum(const LatticeVector& alpha);
/// binomial_array_sum / prod_i (a_i!)^2.
Rational k_alpha_binomial_arrays(const LatticeVector& alpha);

/// Dyck path of semilength n; steps are +1 (up) or -1 (down).
struct DyckPath {
  std::vector<std::int8_t> steps;
  int semilength() const { return static_cast<int>(steps.size()) / 2; }
};

void for_each_dyck_path(int n, const std::function<void(const DyckPath&)>& fn);
/// Number of adjacent (down, up) pairs.
int dyck_valleys(const DyckPath& path);
/// n - 1 - valleys.
int dyck_valley_statistic(const DyckPath& path);
/// sum over Dyck paths of semilength n of q^{n-1-valleys}; n >= 1.
IntPoly narayana_polynomial(int n);

/// H_alpha(1) for alpha = m(alpha_1 + alpha_2 + alpha_3).
Integer apery_numerator_at_one(int m);

}  // namespace jfunc
