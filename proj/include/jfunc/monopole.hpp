#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "jfunc/root_system.hpp"
#include "jfunc/series.hpp"

namespace jfunc {

/// Edges of a simply-laced Dynkin diagram on nodes 0..nodes-1.
struct DynkinGraph {
  int nodes = 0;
  std::vector<std::pair<int, int>> edges;

  /// Throws InvalidArgument for non-simply-laced systems.
  static DynkinGraph of(const RootSystem& spec);
};

/// One weakly decreasing sequence of a_i nonnegative parts per node.
struct Multipartition {
  std::vector<std::vector<int>> parts;

  bool is_valid() const;
  int max_part() const;
};

/// d_lambda = sum_i sum_j (2j-1) lambda^(i)_j - sum_{edges} sum sum min(...).
long d_lambda(const DynkinGraph& graph, const Multipartition& lambda);

/// prod over nodes and part values j >= 0 (zero included) of 1/(q)_{m_j},
/// truncated after q^order.
TruncatedSeries p_lambda(const Multipartition& lambda, int order);

/// Visits every multipartition of shape alpha with all parts <= bound.
void for_each_multipartition(const LatticeVector& alpha, int bound, const std::function<void(const Multipartition&)>& fn);

/// sum of q^{d_lambda} P_lambda over multipartitions with parts <= bound,
/// through q^order. Throws InternalError on a negative charge.
TruncatedSeries monopole_partial_sum(const RootSystem& spec, const LatticeVector& alpha, int order, int bound);

/// Same sum restricted to multipartitions whose nonzero parts are exactly
/// the first b_i parts of each node.
TruncatedSeries monopole_zero_pattern_sum(const RootSystem& spec, const LatticeVector& alpha, const LatticeVector& beta,
                                          int order, int bound);

struct MonopoleResult {
  TruncatedSeries series;
  int bound;  ///< certified: bound and bound + 1 agree through q^order
};

/// Monopole sum through q^order, certified by stabilization: partial sums at
/// bounds B and B + 1 must agree, otherwise B is raised (up to max_bound,
/// then BudgetExceeded). B starts at `order`.
MonopoleResult monopole_series_certified(const RootSystem& spec, const LatticeVector& alpha, int order,
                                         int max_bound = 64);
TruncatedSeries monopole_series(const RootSystem& spec, const LatticeVector& alpha, int order);

}  // namespace jfunc
