#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "jfunc/poly.hpp"
#include "jfunc/root_system.hpp"

namespace jfunc {

using Mask = std::uint64_t;

/// S = S_1 | ... | S_n as bit positions 0..total-1, blocks in increasing
/// order. Bit s < bit t means s precedes t.
class LabelSet {
 public:
  explicit LabelSet(const LatticeVector& alpha);

  int blocks() const { return static_cast<int>(sizes_.size()); }
  int size(int i) const { return sizes_[i - 1]; }
  int total() const { return total_; }
  /// S_i | ... | S_j (1-based, inclusive); empty when i > j.
  Mask range(int i, int j) const;

 private:
  std::vector<int> sizes_;
  std::vector<int> starts_;
  int total_ = 0;
};

/// T_{i,j} for 1 <= i <= j <= n-1.
class SubsetArray {
 public:
  explicit SubsetArray(int n) : n_(n), t_(n > 1 ? (n - 1) * n / 2 : 0, 0) {}

  int n() const { return n_; }
  Mask at(int i, int j) const { return t_[index(i, j)]; }
  Mask& at(int i, int j) { return t_[index(i, j)]; }
  friend bool operator==(const SubsetArray&, const SubsetArray&) = default;

 private:
  int index(int i, int j) const { return (j - 1) * j / 2 + (i - 1); }
  int n_;
  std::vector<Mask> t_;
};

/// Visits every array in the fixed-point set, choosing T_{1,1}, T_{1,2},
/// T_{2,2}, T_{1,3}, ... Type A_n with n = alpha.size(); for n = 1 a single
/// empty array. Requires sum a_i <= 64.
void for_each_fixed_point(const LatticeVector& alpha, const std::function<void(const SubsetArray&)>& fn);
std::vector<SubsetArray> enumerate_fixed_points(const LatticeVector& alpha);

/// Validity of an array against the size, nesting and boundary rules.
bool is_fixed_point(const LatticeVector& alpha, const SubsetArray& t);

/// d_T = sum_{i<=j} d^{i,j} - sum_{i<j<n} a_i a_j.
int bb_dimension(const LatticeVector& alpha, const SubsetArray& t);

/// sum over fixed points of q^{d_T} (q stands for t^2).
IntPoly poincare_polynomial(const LatticeVector& alpha);
/// Number of fixed points.
Integer euler_characteristic(const LatticeVector& alpha);
/// sum a_i a_{i+1}.
int betti_dimension(const LatticeVector& alpha);

}  // namespace jfunc
