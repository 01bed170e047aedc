#pragma once

#include <utility>
#include <vector>

#include "jfunc/poly.hpp"

namespace jfunc {

/// sum_k [i choose k][a-i choose j-k][a+k choose a] q^{(i-k)(j-k)}.
IntPoly nanjundiah_lhs(int i, int j, int a);
/// [a choose j][i+j choose j].
IntPoly nanjundiah_rhs(int i, int j, int a);
/// Both sides agree, 0 <= i, j <= a.
bool check_nanjundiah(int i, int j, int a);

/// Finitely supported integer sequence: values[k] is the term at index
/// offset + k, zero elsewhere.
struct FiniteSequence {
  int offset = 0;
  std::vector<int> values;

  int operator()(int index) const;
  int first() const { return offset; }
  int last() const { return offset + static_cast<int>(values.size()) - 1; }
};

/// The two sides, as Laurent polynomials, of
///   sum_i [(q^{a_{i+1}-a_i} - 1) - q^{a_{i+1}-a_i}(1 - q^{a_i-b_i})(1 - q^{a_i-b_{i-1}})]
/// = sum_i [(q^{b_{i+1}-b_i} - 1) - q^{b_i-b_{i-1}}(1 - q^{a_i-b_i})(1 - q^{a_{i+1}-b_i})].
std::pair<LaurentPoly, LaurentPoly> telescoping_sides(const FiniteSequence& a, const FiniteSequence& b);
bool check_telescoping_identity(const FiniteSequence& a, const FiniteSequence& b);

}  // namespace jfunc
