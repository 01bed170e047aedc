#include "jfunc/betti.hpp"

#include <bit>

#include "jfunc/errors.hpp"

namespace jfunc {

namespace {

Mask low_bits(int k) { return k >= 64 ? ~Mask{0} : (Mask{1} << k) - 1; }

int block_sum(const LatticeVector& alpha, int i, int j) {
  int s = 0;
  for (int k = i; k <= j; ++k) s += alpha[k - 1];
  return s;
}

// T_{i-1,j} with the convention T_{0,j} = S_1 | ... | S_{j+1}.
Mask parent(const LabelSet& labels, const SubsetArray& t, int i, int j) {
  return i > 1 ? t.at(i - 1, j) : labels.range(1, j + 1);
}

// T_{i,j-1} with the convention T_{i,i-1} = empty.
Mask child(const SubsetArray& t, int i, int j) { return i < j ? t.at(i, j - 1) : 0; }

// Calls fn for every superset of `lower` inside `lower | free` with `extra`
// additional bits.
template <class Fn>
void choose_bits(Mask lower, Mask free, int extra, Fn&& fn) {
  if (extra == 0) {
    fn(lower);
    return;
  }
  if (std::popcount(free) < extra) return;
  const Mask bit = free & (~free + 1);
  choose_bits(lower | bit, free & ~bit, extra - 1, fn);
  choose_bits(lower, free & ~bit, extra, fn);
}

}  // namespace

LabelSet::LabelSet(const LatticeVector& alpha) : sizes_(alpha.coeffs()) {
  if (!alpha.is_nonnegative()) throw InvalidArgument("alpha must lie in Q>=0, got " + alpha.to_string());
  for (int s : sizes_) {
    starts_.push_back(total_);
    total_ += s;
  }
  if (total_ > 64) throw InvalidArgument("label set larger than 64 elements: " + alpha.to_string());
}

Mask LabelSet::range(int i, int j) const {
  i = std::max(i, 1);
  j = std::min(j, blocks());
  if (i > j) return 0;
  const int lo = starts_[i - 1];
  const int hi = starts_[j - 1] + sizes_[j - 1];
  return low_bits(hi) & ~low_bits(lo);
}

void for_each_fixed_point(const LatticeVector& alpha, const std::function<void(const SubsetArray&)>& fn) {
  const LabelSet labels(alpha);
  const int n = alpha.size();
  SubsetArray t(n);
  if (n <= 1) {
    fn(t);
    return;
  }
  std::function<void(int, int)> step = [&](int i, int j) {
    if (j == n) {
      fn(t);
      return;
    }
    const int ni = i == j ? 1 : i + 1;
    const int nj = i == j ? j + 1 : j;
    const Mask lower = child(t, i, j);
    Mask upper = parent(labels, t, i, j);
    if (j == n - 1) upper &= labels.range(i, n);
    if ((lower & ~upper) != 0) return;
    const int extra = block_sum(alpha, i, j) - std::popcount(lower);
    if (extra < 0) return;
    choose_bits(lower, upper & ~lower, extra, [&](Mask chosen) {
      t.at(i, j) = chosen;
      step(ni, nj);
    });
  };
  step(1, 1);
}

std::vector<SubsetArray> enumerate_fixed_points(const LatticeVector& alpha) {
  std::vector<SubsetArray> out;
  for_each_fixed_point(alpha, [&](const SubsetArray& t) { out.push_back(t); });
  return out;
}

bool is_fixed_point(const LatticeVector& alpha, const SubsetArray& t) {
  const LabelSet labels(alpha);
  const int n = alpha.size();
  if (t.n() != n) return false;
  for (int j = 1; j < n; ++j) {
    for (int i = 1; i <= j; ++i) {
      const Mask x = t.at(i, j);
      if (std::popcount(x) != block_sum(alpha, i, j)) return false;
      if ((x & ~low_bits(labels.total())) != 0) return false;
      if (i > 1 && (x & ~t.at(i - 1, j)) != 0) return false;
      if (j < n - 1 && (x & ~t.at(i, j + 1)) != 0) return false;
      if (j == n - 1 && (x & ~labels.range(i, n)) != 0) return false;
      if (i == 1 && (x & ~labels.range(1, j + 1)) != 0) return false;
    }
  }
  return true;
}

int bb_dimension(const LatticeVector& alpha, const SubsetArray& t) {
  const LabelSet labels(alpha);
  const int n = alpha.size();
  int d = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 1; i <= j; ++i) {
      Mask s_set = t.at(i, j) & ~child(t, i, j);
      const Mask t_set = parent(labels, t, i, j) & ~t.at(i, j);
      while (s_set) {
        const int s = std::countr_zero(s_set);
        d += std::popcount(t_set & low_bits(s));
        s_set &= s_set - 1;
      }
    }
  }
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d -= alpha[i - 1] * alpha[j - 1];
  return d;
}

IntPoly poincare_polynomial(const LatticeVector& alpha) {
  std::vector<long> counts;
  for_each_fixed_point(alpha, [&](const SubsetArray& t) {
    const int d = bb_dimension(alpha, t);
    if (d < 0) throw InternalError("negative cell dimension at " + alpha.to_string());
    if (static_cast<int>(counts.size()) <= d) counts.resize(d + 1, 0);
    ++counts[d];
  });
  std::vector<Integer> coeffs(counts.begin(), counts.end());
  return IntPoly(std::move(coeffs));
}

Integer euler_characteristic(const LatticeVector& alpha) {
  Integer count = 0;
  for_each_fixed_point(alpha, [&](const SubsetArray&) { ++count; });
  return count;
}

int betti_dimension(const LatticeVector& alpha) {
  int s = 0;
  for (int i = 0; i + 1 < alpha.size(); ++i) s += alpha[i] * alpha[i + 1];
  return s;
}

}  // namespace jfunc
