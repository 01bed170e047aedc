#include "jfunc/qcombinatorics.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>

#include "jfunc/errors.hpp"

namespace jfunc {

IntPoly q_pochhammer_alpha(const RootSystem& spec, const LatticeVector& alpha) {
  if (alpha.size() != spec.rank()) throw InvalidArgument("lattice vector dimension mismatch");
  if (!alpha.is_nonnegative()) throw InvalidArgument("(q)_alpha requires alpha >= 0, got " + alpha.to_string());
  IntPoly result{1};
  for (int i = 0; i < spec.rank(); ++i) {
    for (int j = 1; j <= alpha[i]; ++j) result *= IntPoly::one_minus_q_pow(spec.symmetrizer(i) * j);
  }
  return result;
}

int q_pochhammer_degree(const RootSystem& spec, const LatticeVector& alpha) {
  int deg = 0;
  for (int i = 0; i < spec.rank(); ++i) deg += spec.symmetrizer(i) * alpha[i] * (alpha[i] + 1) / 2;
  return deg;
}

IntPoly q_factorial(int m) {
  IntPoly result{1};
  for (int j = 1; j <= m; ++j) result *= IntPoly::one_minus_q_pow(j);
  return result;
}

namespace {

class GaussianRows {
 public:
  IntPoly get(int a, int b) {
    {
      std::shared_lock lock(mutex_);
      if (a < static_cast<int>(rows_.size())) return rows_[a][b];
    }
    std::unique_lock lock(mutex_);
    while (static_cast<int>(rows_.size()) <= a) {
      const int n = static_cast<int>(rows_.size());
      std::vector<IntPoly> row(n + 1);
      row[0] = IntPoly{1};
      row[n] = IntPoly{1};
      for (int k = 1; k < n; ++k) {
        row[k] = rows_[n - 1][k - 1] + rows_[n - 1][k].shifted(k);
      }
      rows_.push_back(std::move(row));
    }
    return rows_[a][b];
  }

 private:
  std::shared_mutex mutex_;
  std::deque<std::vector<IntPoly>> rows_;
};

GaussianRows& gaussian_rows() {
  static GaussianRows rows;
  return rows;
}

}  // namespace

IntPoly gaussian_binomial(int a, int b) {
  if (a < 0 || b < 0 || b > a) return {};
  return gaussian_rows().get(a, b);
}

Integer binomial(int a, int b) {
  if (a < 0 || b < 0 || b > a) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), a, b);
  return r;
}

}  // namespace jfunc
