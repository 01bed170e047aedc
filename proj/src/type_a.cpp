#include "jfunc/type_a.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

#include "jfunc/errors.hpp"
#include "jfunc/qcombinatorics.hpp"

namespace jfunc {

namespace {

void require_cone(const LatticeVector& alpha) {
  if (!alpha.is_nonnegative()) throw InvalidArgument("alpha must lie in Q>=0, got " + alpha.to_string());
}

void fill_rows(TriangularArray& m, int k, int i, const std::function<void(const TriangularArray&)>& fn) {
  if (k == 0) {
    fn(m);
    return;
  }
  if (i > k) {
    fill_rows(m, k - 1, 1, fn);
    return;
  }
  const int hi = std::min(m.at(k + 1, i), m.at(k + 1, i + 1));
  for (int v = 0; v <= hi; ++v) {
    m.at(k, i) = v;
    fill_rows(m, k, i + 1, fn);
  }
}

// (beta,beta)/2 in type A.
long norm_half_a(const std::vector<int>& b) {
  long s = 0;
  for (std::size_t j = 0; j < b.size(); ++j) {
    s += static_cast<long>(b[j]) * b[j];
    if (j + 1 < b.size()) s -= static_cast<long>(b[j]) * b[j + 1];
  }
  return s;
}

struct HMemo {
  std::shared_mutex mutex;
  std::map<std::vector<int>, IntPoly> values;
};

HMemo& h_memo() {
  static HMemo memo;
  return memo;
}

IntPoly h_recursive_impl(const std::vector<int>& a) {
  if (a.size() <= 1) return IntPoly{1};
  HMemo& memo = h_memo();
  {
    std::shared_lock lock(memo.mutex);
    auto it = memo.values.find(a);
    if (it != memo.values.end()) return it->second;
  }
  const std::size_t r = a.size() - 1;
  std::vector<int> hi(r), b(r, 0);
  for (std::size_t j = 0; j < r; ++j) hi[j] = std::min(a[j], a[j + 1]);
  IntPoly total;
  while (true) {
    IntPoly term = IntPoly{1};
    for (std::size_t j = 0; j < r; ++j) term *= gaussian_binomial(a[j], b[j]) * gaussian_binomial(a[j + 1], b[j]);
    term = (term * h_recursive_impl(b)).shifted(static_cast<int>(norm_half_a(b)));
    total += term;
    // odometer over the box 0 <= b_j <= hi_j, last coordinate fastest
    std::size_t j = r;
    while (j > 0 && b[j - 1] == hi[j - 1]) b[--j] = 0;
    if (j == 0) break;
    ++b[j - 1];
  }
  std::unique_lock lock(memo.mutex);
  memo.values.emplace(a, total);
  return total;
}

}  // namespace

TriangularArray::TriangularArray(const LatticeVector& top) {
  const int n = top.size();
  rows_.resize(n);
  for (int k = 1; k <= n; ++k) rows_[k - 1].assign(k, 0);
  if (n > 0) rows_[n - 1] = top.coeffs();
}

bool TriangularArray::is_valid() const {
  for (int k = 1; k < n(); ++k)
    for (int i = 1; i <= k; ++i)
      if (at(k, i) < 0 || at(k, i) > at(k + 1, i) || at(k, i) > at(k + 1, i + 1)) return false;
  return true;
}

void for_each_array(const LatticeVector& alpha, const std::function<void(const TriangularArray&)>& fn) {
  require_cone(alpha);
  TriangularArray m(alpha);
  if (alpha.size() == 0) {
    fn(m);
    return;
  }
  fill_rows(m, alpha.size() - 1, 1, fn);
}

std::vector<TriangularArray> enumerate_arrays(const LatticeVector& alpha) {
  std::vector<TriangularArray> out;
  for_each_array(alpha, [&](const TriangularArray& m) { out.push_back(m); });
  return out;
}

int d_statistic(const TriangularArray& m) {
  int d = 0;
  for (int k = 1; k < m.n(); ++k) {
    for (int i = 1; i <= k; ++i) {
      d += m.at(k, i) * m.at(k, i);
      if (i < k) d -= m.at(k, i) * m.at(k, i + 1);
    }
  }
  return d;
}

IntPoly array_weight(const TriangularArray& m) {
  IntPoly w{1};
  for (int k = 1; k < m.n(); ++k) {
    for (int i = 1; i <= k; ++i) {
      w *= gaussian_binomial(m.at(k + 1, i), m.at(k, i));
      w *= gaussian_binomial(m.at(k + 1, i + 1), m.at(k, i));
    }
  }
  return w;
}

IntPoly h_direct(const LatticeVector& alpha) {
  IntPoly total;
  for_each_array(alpha, [&](const TriangularArray& m) { total += array_weight(m).shifted(d_statistic(m)); });
  return total;
}

IntPoly h_recursive(const LatticeVector& alpha) {
  require_cone(alpha);
  return h_recursive_impl(alpha.coeffs());
}

Integer binomial_array_sum(const LatticeVector& alpha) {
  Integer total = 0;
  for_each_array(alpha, [&](const TriangularArray& m) {
    Integer w = 1;
    for (int k = 1; k < m.n(); ++k)
      for (int i = 1; i <= k; ++i) w *= binomial(m.at(k + 1, i), m.at(k, i)) * binomial(m.at(k + 1, i + 1), m.at(k, i));
    total += w;
  });
  return total;
}

Rational k_alpha_binomial_arrays(const LatticeVector& alpha) {
  Integer factorials = 1;
  for (int i = 0; i < alpha.size(); ++i) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), alpha[i]);
    factorials *= f * f;
  }
  Rational k(binomial_array_sum(alpha), factorials);
  k.canonicalize();
  return k;
}

void for_each_dyck_path(int n, const std::function<void(const DyckPath&)>& fn) {
  if (n < 0) throw InvalidArgument("Dyck path semilength must be >= 0");
  DyckPath path;
  path.steps.reserve(2 * n);
  std::function<void(int, int)> extend = [&](int ups, int height) {
    if (static_cast<int>(path.steps.size()) == 2 * n) {
      fn(path);
      return;
    }
    if (ups < n) {
      path.steps.push_back(1);
      extend(ups + 1, height + 1);
      path.steps.pop_back();
    }
    if (height > 0) {
      path.steps.push_back(-1);
      extend(ups, height - 1);
      path.steps.pop_back();
    }
  };
  extend(0, 0);
}

int dyck_valleys(const DyckPath& path) {
  int v = 0;
  for (std::size_t k = 1; k < path.steps.size(); ++k)
    if (path.steps[k - 1] < 0 && path.steps[k] > 0) ++v;
  return v;
}

int dyck_valley_statistic(const DyckPath& path) { return path.semilength() - 1 - dyck_valleys(path); }

IntPoly narayana_polynomial(int n) {
  if (n < 1) throw InvalidArgument("narayana_polynomial requires n >= 1");
  IntPoly p;
  for_each_dyck_path(n, [&](const DyckPath& path) { p.add_term(1, dyck_valley_statistic(path)); });
  return p;
}

Integer apery_numerator_at_one(int m) {
  if (m < 0) throw InvalidArgument("apery_numerator_at_one requires m >= 0");
  return h_recursive(LatticeVector{m, m, m}).eval_at_one();
}

}  // namespace jfunc
