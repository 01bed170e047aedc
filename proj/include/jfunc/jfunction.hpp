#pragma once

#include "jfunc/jtable.hpp"
#include "jfunc/poly.hpp"
#include "jfunc/ratfunc.hpp"
#include "jfunc/root_system.hpp"

namespace jfunc {

/// J_alpha by the fermionic recursion
///   J_alpha = 1/(1 - q^{(alpha,alpha)/2}) sum_{0 <= beta < alpha} q^{(beta,beta)/2} / (q)_{alpha-beta} J_beta,
/// filling `table` for every beta <= alpha in lexicographic order. The sum is
/// carried out over a common cyclotomic denominator, exactly.
RatFunc j_fermionic(const LatticeVector& alpha, JTable& table);

/// Fills `table` for every alpha in `targets` (and everything below them)
/// with up to `workers` threads. Elements of equal height are computed
/// concurrently; the result does not depend on the worker count.
void fill_fermionic(JTable& table, const std::vector<LatticeVector>& targets, int workers);

/// J_alpha by the type-A Toda recursion
///   (sum_{i=0}^n (q^{a_{i+1}-a_i} - 1)) J_alpha = sum_{i=1}^n q^{a_{i+1}-a_i} J_{alpha - alpha_i},
/// a_0 = a_{n+1} = 0. `table` must be a type-A table and is filled for every
/// beta <= alpha. Throws InvalidArgument for other types and InternalError if
/// the left coefficient vanishes.
RatFunc j_toda_typeA(const LatticeVector& alpha, JTable& table);

/// Left-hand Laurent coefficient sum_{i=0}^n (q^{a_{i+1}-a_i} - 1).
LaurentPoly toda_left_coefficient(const LatticeVector& alpha);

/// (q)_alpha^2 J_alpha, checked to be an integer polynomial: throws
/// NotPolynomial or NonIntegerCoefficient otherwise.
IntPoly numerator(const RootSystem& spec, const LatticeVector& alpha, JTable& table);
IntPoly numerator(const RootSystem& spec, const LatticeVector& alpha);
/// Same check applied to an already computed J_alpha.
IntPoly numerator_of(const RootSystem& spec, const LatticeVector& alpha, const RatFunc& j_alpha);

/// Predicted degree 2 deg (q)_alpha - (alpha,alpha)/2 - (rho,alpha) of the numerator.
int predicted_numerator_degree(const RootSystem& spec, const LatticeVector& alpha);

/// Exponent (alpha,alpha)/2 + (rho,alpha) of J(1/q) = q^e J(q).
int symmetry_exponent(const RootSystem& spec, const LatticeVector& alpha);

/// K_alpha = numerator(1) / prod_i (a_i!)^2.
Rational k_alpha_limit(const RootSystem& spec, const LatticeVector& alpha, JTable& table);
/// K_alpha from (alpha,alpha)/2 K_alpha = sum_i d_i K_{alpha - alpha_i}, K_0 = 1.
Rational k_alpha_recursive(const RootSystem& spec, const LatticeVector& alpha);

}  // namespace jfunc
