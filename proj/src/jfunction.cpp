#include "jfunc/jfunction.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "jfunc/errors.hpp"
#include "jfunc/qcombinatorics.hpp"

namespace jfunc {

namespace {

// Cyclotomic factors of |(q)_gamma| = prod_i prod_{j <= g_i} (q^{d_i j} - 1).
CyclotomicProduct pochhammer_factors(const RootSystem& spec, const LatticeVector& gamma) {
  CyclotomicProduct p;
  for (int i = 0; i < spec.rank(); ++i) {
    for (int j = 1; j <= gamma[i]; ++j) p *= CyclotomicProduct::q_pow_minus_one(spec.symmetrizer(i) * j);
  }
  return p;
}

CyclotomicFraction fermionic_step(const LatticeVector& alpha, const JTable& table) {
  const RootSystem& spec = table.spec();
  struct Term {
    bool negative;
    int shift;
    IntPoly num;
    CyclotomicProduct den;
  };
  std::vector<Term> terms;
  CyclotomicProduct common;
  for_each_in_interval(alpha, [&](const LatticeVector& beta) {
    if (beta == alpha) return;
    auto jb = table.find_factored(beta);
    if (!jb) {
      throw InternalError("J_" + beta.to_string() + " missing (or not in cyclotomic form) while computing J_" +
                          alpha.to_string());
    }
    const LatticeVector gamma = alpha - beta;
    Term t{gamma.height() % 2 != 0, static_cast<int>(norm_half(spec, beta)), std::move(jb->num), jb->den};
    t.den *= pochhammer_factors(spec, gamma);
    common.max_with(t.den);
    terms.push_back(std::move(t));
  });
  // (q)_gamma = (-1)^{|gamma|} prod (q^{d_i j} - 1); the sign rides on the term.
  IntPoly sum;
  for (const auto& t : terms) {
    IntPoly p = common.quotient(t.den).multiply(t.num.shifted(t.shift));
    if (t.negative) sum -= p;
    else sum += p;
  }
  const auto m = norm_half(spec, alpha);
  if (m <= 0) throw InternalError("(alpha,alpha)/2 <= 0 for alpha = " + alpha.to_string());
  // 1/(1 - q^m) = -1/(q^m - 1)
  CyclotomicFraction out;
  out.num = -sum;
  out.den = common;
  out.den *= CyclotomicProduct::q_pow_minus_one(static_cast<int>(m));
  out.reduce();
  return out;
}

std::vector<LatticeVector> missing_below(const JTable& table, const std::vector<LatticeVector>& targets) {
  std::set<LatticeVector> todo;
  for (const auto& alpha : targets) {
    if (alpha.size() != table.spec().rank()) throw InvalidArgument("lattice vector dimension mismatch");
    if (!alpha.is_nonnegative()) throw InvalidArgument("alpha must lie in Q>=0, got " + alpha.to_string());
    for_each_in_interval(alpha, [&](const LatticeVector& beta) {
      if (!table.contains(beta)) todo.insert(beta);
    });
  }
  return {todo.begin(), todo.end()};
}

}  // namespace

void fill_fermionic(JTable& table, const std::vector<LatticeVector>& targets, int workers) {
  std::vector<LatticeVector> todo = missing_below(table, targets);
  if (todo.empty()) return;
  std::map<int, std::vector<LatticeVector>> levels;
  for (auto& beta : todo) levels[beta.height()].push_back(std::move(beta));
  workers = std::max(1, workers);
  for (auto& [height, level] : levels) {
    std::vector<CyclotomicFraction> results(level.size());
    const int n_threads = std::min<int>(workers, static_cast<int>(level.size()));
    if (n_threads <= 1) {
      for (std::size_t k = 0; k < level.size(); ++k) results[k] = fermionic_step(level[k], table);
    } else {
      std::atomic<std::size_t> next{0};
      std::exception_ptr failure;
      std::mutex failure_mutex;
      auto work = [&] {
        try {
          for (std::size_t k = next++; k < level.size(); k = next++) results[k] = fermionic_step(level[k], table);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      };
      std::vector<std::thread> pool;
      for (int t = 0; t < n_threads; ++t) pool.emplace_back(work);
      for (auto& th : pool) th.join();
      if (failure) std::rethrow_exception(failure);
    }
    for (std::size_t k = 0; k < level.size(); ++k) table.insert(level[k], results[k]);
  }
}

RatFunc j_fermionic(const LatticeVector& alpha, JTable& table) {
  fill_fermionic(table, {alpha}, 1);
  return *table.find(alpha);
}

LaurentPoly toda_left_coefficient(const LatticeVector& alpha) {
  const int n = alpha.size();
  auto a = [&](int i) { return (i >= 1 && i <= n) ? alpha[i - 1] : 0; };
  LaurentPoly left;
  for (int i = 0; i <= n; ++i) {
    left += LaurentPoly::monomial(1, a(i + 1) - a(i));
    left -= LaurentPoly::monomial(1, 0);
  }
  return left;
}

RatFunc j_toda_typeA(const LatticeVector& alpha, JTable& table) {
  const RootSystem& spec = table.spec();
  if (spec.family() != Family::A) throw InvalidArgument("Toda recursion is implemented for type A only, got " + spec.name());
  if (alpha.size() != spec.rank()) throw InvalidArgument("lattice vector dimension mismatch");
  if (!alpha.is_nonnegative()) throw InvalidArgument("alpha must lie in Q>=0, got " + alpha.to_string());
  const int n = spec.rank();
  for_each_in_interval(alpha, [&](const LatticeVector& beta) {
    if (table.contains(beta)) return;
    auto b = [&](int i) { return (i >= 1 && i <= n) ? beta[i - 1] : 0; };
    LaurentPoly left = toda_left_coefficient(beta);
    if (left.is_zero()) throw InternalError("Toda left coefficient vanishes at alpha = " + beta.to_string());
    int lowest = left.min_exponent();
    for (int i = 1; i <= n; ++i)
      if (b(i) > 0) lowest = std::min(lowest, b(i + 1) - b(i));
    const int clear = -std::min(lowest, 0);
    RatFunc right;
    for (int i = 1; i <= n; ++i) {
      if (b(i) == 0) continue;  // J_{beta - alpha_i} = 0 off the positive cone
      auto prev = table.find(beta - LatticeVector::simple_root(n, i - 1));
      if (!prev) throw InternalError("Toda recursion reached an unfilled entry");
      right += RatFunc(IntPoly::monomial(1, b(i + 1) - b(i) + clear)) * *prev;
    }
    table.insert(beta, right / RatFunc(left.shifted(clear).to_poly()));
  });
  return *table.find(alpha);
}

int predicted_numerator_degree(const RootSystem& spec, const LatticeVector& alpha) {
  return 2 * q_pochhammer_degree(spec, alpha) - static_cast<int>(norm_half(spec, alpha)) -
         static_cast<int>(rho_pairing(spec, alpha));
}

int symmetry_exponent(const RootSystem& spec, const LatticeVector& alpha) {
  return static_cast<int>(norm_half(spec, alpha) + rho_pairing(spec, alpha));
}

IntPoly numerator_of(const RootSystem& spec, const LatticeVector& alpha, const RatFunc& j_alpha) {
  IntPoly poch = q_pochhammer_alpha(spec, alpha);
  IntPoly target = poch * poch;
  RationalDivision div = divide_over_rationals(target, j_alpha.den());
  if (!div.exact) {
    throw NotPolynomial(spec.name() + " alpha=" + alpha.to_string() + ": denominator of J_alpha does not divide (q)_alpha^2");
  }
  std::vector<Integer> coeffs;
  std::vector<Rational> product(j_alpha.num().degree() + static_cast<int>(div.quotient.size()), Rational(0));
  for (int i = 0; i <= j_alpha.num().degree(); ++i)
    for (std::size_t j = 0; j < div.quotient.size(); ++j) product[i + j] += j_alpha.num().coeffs()[i] * div.quotient[j];
  coeffs.reserve(product.size());
  for (auto& c : product) {
    c.canonicalize();
    if (c.get_den() != 1) {
      throw NonIntegerCoefficient(spec.name() + " alpha=" + alpha.to_string() +
                                  ": (q)_alpha^2 J_alpha has a non-integer coefficient " + c.get_str());
    }
    coeffs.push_back(c.get_num());
  }
  return IntPoly(std::move(coeffs));
}

IntPoly numerator(const RootSystem& spec, const LatticeVector& alpha, JTable& table) {
  if (!(table.spec() == spec)) throw InvalidArgument("table root system does not match");
  return numerator_of(spec, alpha, j_fermionic(alpha, table));
}

IntPoly numerator(const RootSystem& spec, const LatticeVector& alpha) {
  JTable table(spec);
  return numerator(spec, alpha, table);
}

Rational k_alpha_limit(const RootSystem& spec, const LatticeVector& alpha, JTable& table) {
  Integer top = numerator(spec, alpha, table).eval_at_one();
  Integer factorials = 1;
  for (int i = 0; i < alpha.size(); ++i) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), alpha[i]);
    factorials *= f * f;
  }
  Rational k(top, factorials);
  k.canonicalize();
  return k;
}

Rational k_alpha_recursive(const RootSystem& spec, const LatticeVector& alpha) {
  if (alpha.size() != spec.rank()) throw InvalidArgument("lattice vector dimension mismatch");
  std::map<LatticeVector, Rational> k;
  for_each_in_interval(alpha, [&](const LatticeVector& beta) {
    if (beta.is_zero()) {
      k.emplace(beta, Rational(1));
      return;
    }
    Rational acc = 0;
    for (int i = 0; i < spec.rank(); ++i) {
      if (beta[i] == 0) continue;
      acc += spec.symmetrizer(i) * k.at(beta - LatticeVector::simple_root(spec.rank(), i));
    }
    acc /= Rational(static_cast<long>(norm_half(spec, beta)));
    k.emplace(beta, acc);
  });
  return k.at(alpha);
}

}  // namespace jfunc
