#pragma once

#include "jfunc/poly.hpp"
#include "jfunc/root_system.hpp"

namespace jfunc {

/// (q)_alpha = prod_i prod_{j=1}^{a_i} (1 - q^{d_i j}).
IntPoly q_pochhammer_alpha(const RootSystem& spec, const LatticeVector& alpha);

/// Degree of (q)_alpha, sum_i d_i a_i (a_i + 1) / 2.
int q_pochhammer_degree(const RootSystem& spec, const LatticeVector& alpha);

/// (q)_m = prod_{j=1}^m (1 - q^j).
IntPoly q_factorial(int m);

/// Gaussian binomial [a choose b]_q; zero when b < 0, b > a or a < 0.
/// Built from the q-Pascal rule [a,b] = [a-1,b-1] + q^b [a-1,b]; rows are
/// memoized process-wide (thread-safe).
IntPoly gaussian_binomial(int a, int b);

/// Ordinary binomial coefficient, zero outside 0 <= b <= a.
Integer binomial(int a, int b);

}  // namespace jfunc
