#include "jfunc/identities.hpp"

#include <algorithm>

#include "jfunc/errors.hpp"
#include "jfunc/qcombinatorics.hpp"

namespace jfunc {

IntPoly nanjundiah_lhs(int i, int j, int a) {
  if (i < 0 || j < 0 || i > a || j > a) throw InvalidArgument("Nanjundiah identity needs 0 <= i, j <= a");
  IntPoly total;
  for (int k = 0; k <= std::min(i, j); ++k) {
    IntPoly term = gaussian_binomial(i, k) * gaussian_binomial(a - i, j - k);
    if (term.is_zero()) continue;
    term *= gaussian_binomial(a + k, a);
    total += term.shifted((i - k) * (j - k));
  }
  return total;
}

IntPoly nanjundiah_rhs(int i, int j, int a) {
  if (i < 0 || j < 0 || i > a || j > a) throw InvalidArgument("Nanjundiah identity needs 0 <= i, j <= a");
  return gaussian_binomial(a, j) * gaussian_binomial(i + j, j);
}

bool check_nanjundiah(int i, int j, int a) { return nanjundiah_lhs(i, j, a) == nanjundiah_rhs(i, j, a); }

int FiniteSequence::operator()(int index) const {
  const int k = index - offset;
  if (k < 0 || k >= static_cast<int>(values.size())) return 0;
  return values[k];
}

namespace {

LaurentPoly q_pow(int e) { return LaurentPoly::monomial(1, e); }
LaurentPoly one_minus(int e) { return q_pow(0) - q_pow(e); }

}  // namespace

std::pair<LaurentPoly, LaurentPoly> telescoping_sides(const FiniteSequence& a, const FiniteSequence& b) {
  // Outside [lo, hi] every summand on both sides is (1 - 1) - 1 * 0 * 0 = 0.
  const int lo = std::min(a.first(), b.first()) - 2;
  const int hi = std::max(a.last(), b.last()) + 2;
  LaurentPoly left, right;
  for (int i = lo; i <= hi; ++i) {
    left += q_pow(a(i + 1) - a(i)) - q_pow(0);
    left -= q_pow(a(i + 1) - a(i)) * one_minus(a(i) - b(i)) * one_minus(a(i) - b(i - 1));
    right += q_pow(b(i + 1) - b(i)) - q_pow(0);
    right -= q_pow(b(i) - b(i - 1)) * one_minus(a(i) - b(i)) * one_minus(a(i + 1) - b(i));
  }
  return {left, right};
}

bool check_telescoping_identity(const FiniteSequence& a, const FiniteSequence& b) {
  auto [left, right] = telescoping_sides(a, b);
  return left == right;
}

}  // namespace jfunc
