#include "jfunc/monopole.hpp"

#include <algorithm>

#include "jfunc/errors.hpp"

namespace jfunc {

DynkinGraph DynkinGraph::of(const RootSystem& spec) {
  if (!spec.simply_laced()) {
    throw InvalidArgument("the monopole formula is implemented for simply-laced types only, got " + spec.name());
  }
  return DynkinGraph{spec.rank(), spec.edges()};
}

bool Multipartition::is_valid() const {
  for (const auto& p : parts) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p[j] < 0) return false;
      if (j > 0 && p[j] > p[j - 1]) return false;
    }
  }
  return true;
}

int Multipartition::max_part() const {
  int m = 0;
  for (const auto& p : parts)
    if (!p.empty()) m = std::max(m, p.front());
  return m;
}

long d_lambda(const DynkinGraph& graph, const Multipartition& lambda) {
  long d = 0;
  for (const auto& p : lambda.parts)
    for (std::size_t j = 0; j < p.size(); ++j) d += static_cast<long>(2 * j + 1) * p[j];
  for (const auto& [u, v] : graph.edges)
    for (int x : lambda.parts[u])
      for (int y : lambda.parts[v]) d -= std::min(x, y);
  return d;
}

TruncatedSeries p_lambda(const Multipartition& lambda, int order) {
  TruncatedSeries s = TruncatedSeries::from_poly(IntPoly{1}, order);
  for (const auto& p : lambda.parts) {
    std::size_t j = 0;
    while (j < p.size()) {
      std::size_t run = j;
      while (run < p.size() && p[run] == p[j]) ++run;
      for (int k = 1; k <= static_cast<int>(run - j); ++k) s.divide_by_one_minus_q_pow(k);
      j = run;
    }
  }
  return s;
}

void for_each_multipartition(const LatticeVector& alpha, int bound, const std::function<void(const Multipartition&)>& fn) {
  if (!alpha.is_nonnegative()) throw InvalidArgument("alpha must lie in Q>=0, got " + alpha.to_string());
  if (bound < 0) throw InvalidArgument("part bound must be >= 0");
  Multipartition lambda;
  lambda.parts.resize(alpha.size());
  for (int i = 0; i < alpha.size(); ++i) lambda.parts[i].assign(alpha[i], 0);
  std::function<void(int, int, int)> place = [&](int node, int j, int cap) {
    if (node == alpha.size()) {
      fn(lambda);
      return;
    }
    if (j == alpha[node]) {
      place(node + 1, 0, bound);
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      lambda.parts[node][j] = v;
      place(node, j + 1, v);
    }
  };
  place(0, 0, bound);
}

namespace {

void add_term(TruncatedSeries& total, const DynkinGraph& graph, const Multipartition& lambda, int order) {
  const long d = d_lambda(graph, lambda);
  if (d < 0) {
    std::string shape;
    for (const auto& p : lambda.parts) {
      shape += "(";
      for (std::size_t j = 0; j < p.size(); ++j) shape += (j ? "," : "") + std::to_string(p[j]);
      shape += ")";
    }
    throw InternalError("negative monopole charge d = " + std::to_string(d) + " at lambda = " + shape);
  }
  if (d > order) return;
  total += p_lambda(lambda, order).shifted(static_cast<int>(d));
}

}  // namespace

TruncatedSeries monopole_partial_sum(const RootSystem& spec, const LatticeVector& alpha, int order, int bound) {
  const DynkinGraph graph = DynkinGraph::of(spec);
  if (alpha.size() != spec.rank()) throw InvalidArgument("lattice vector dimension mismatch");
  TruncatedSeries total(order);
  for_each_multipartition(alpha, bound, [&](const Multipartition& lambda) { add_term(total, graph, lambda, order); });
  return total;
}

TruncatedSeries monopole_zero_pattern_sum(const RootSystem& spec, const LatticeVector& alpha, const LatticeVector& beta,
                                          int order, int bound) {
  const DynkinGraph graph = DynkinGraph::of(spec);
  if (alpha.size() != spec.rank() || beta.size() != spec.rank()) throw InvalidArgument("lattice vector dimension mismatch");
  if (!beta.is_nonnegative() || !(alpha - beta).is_nonnegative()) {
    throw InvalidArgument("zero pattern " + beta.to_string() + " is not below " + alpha.to_string());
  }
  TruncatedSeries total(order);
  for_each_multipartition(alpha, bound, [&](const Multipartition& lambda) {
    for (int i = 0; i < alpha.size(); ++i) {
      const auto& p = lambda.parts[i];
      if (beta[i] > 0 && p[beta[i] - 1] == 0) return;
      if (beta[i] < alpha[i] && p[beta[i]] != 0) return;
    }
    add_term(total, graph, lambda, order);
  });
  return total;
}

MonopoleResult monopole_series_certified(const RootSystem& spec, const LatticeVector& alpha, int order, int max_bound) {
  if (order < 0) throw InvalidArgument("series order must be >= 0");
  int bound = order;
  TruncatedSeries current = monopole_partial_sum(spec, alpha, order, bound);
  while (bound < max_bound) {
    TruncatedSeries next = monopole_partial_sum(spec, alpha, order, bound + 1);
    if (next == current) return {std::move(current), bound};
    current = std::move(next);
    ++bound;
  }
  throw BudgetExceeded("monopole sum for " + alpha.to_string() + " did not stabilize through q^" + std::to_string(order) +
                       " below part bound " + std::to_string(max_bound));
}

TruncatedSeries monopole_series(const RootSystem& spec, const LatticeVector& alpha, int order) {
  return monopole_series_certified(spec, alpha, order).series;
}

}  // namespace jfunc
