#include "jfunc/poly.hpp"

#include <algorithm>
#include <utility>

#include "jfunc/errors.hpp"

namespace jfunc {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, int exponent) {
  if (exponent < 0) throw InvalidArgument("negative exponent in IntPoly::monomial");
  std::vector<Integer> v(exponent + 1);
  v[exponent] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::one_minus_q_pow(int k) {
  if (k < 1) throw InvalidArgument("1 - q^k requires k >= 1");
  std::vector<Integer> v(k + 1);
  v[0] = 1;
  v[k] = -1;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

int IntPoly::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (sgn(coeffs_[k]) != 0) return static_cast<int>(k);
  return -1;
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Integer IntPoly::eval_at_one() const {
  Integer acc = 0;
  for (const auto& c : coeffs_) acc += c;
  return acc;
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer c = content();
  if (sgn(leading()) < 0) c = -c;
  IntPoly r = *this;
  if (c != 1) r.divide_exact(c);
  return r;
}

IntPoly IntPoly::shifted(int k) const {
  if (k < 0) throw InvalidArgument("IntPoly::shifted requires k >= 0");
  if (is_zero() || k == 0) return *this;
  IntPoly r;
  r.coeffs_.resize(coeffs_.size() + k);
  std::copy(coeffs_.begin(), coeffs_.end(), r.coeffs_.begin() + k);
  return r;
}

IntPoly IntPoly::reversed() const {
  std::vector<Integer> v(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(v));
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.add_product(a, b);
  return r;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
  *this = *this * o;
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPoly& IntPoly::divide_exact(const Integer& c) {
  if (sgn(c) == 0) throw DomainError("division of a polynomial by zero");
  for (auto& x : coeffs_) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) throw DomainError("inexact coefficient division");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

void IntPoly::add_term(const Integer& c, int k) {
  if (k < 0) throw InvalidArgument("negative exponent in IntPoly::add_term");
  if (static_cast<int>(coeffs_.size()) <= k) coeffs_.resize(k + 1);
  coeffs_[k] += c;
  normalize();
}

void IntPoly::add_product(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return;
  std::size_t need = a.coeffs_.size() + b.coeffs_.size() - 1;
  if (coeffs_.size() < need) coeffs_.resize(need);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const mpz_srcptr ai = a.coeffs_[i].get_mpz_t();
    if (mpz_sgn(ai) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(coeffs_[i + j].get_mpz_t(), ai, b.coeffs_[j].get_mpz_t());
    }
  }
  normalize();
}

// ---------------------------------------------------------------- division

RationalDivision divide_over_rationals(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  RationalDivision out;
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const Rational lead(b.leading());
  if (a.degree() < db) {
    out.exact = a.is_zero();
    return out;
  }
  out.quotient.assign(a.degree() - db + 1, Rational(0));
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational c = rem[k + db] / lead;
    out.quotient[k] = c;
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs()[j];
  }
  out.exact = std::all_of(rem.begin(), rem.end(), [](const Rational& r) { return sgn(r) == 0; });
  return out;
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero()) return IntPoly{};
  const int da = a.degree(), db = b.degree();
  if (da < db) return std::nullopt;
  std::vector<Integer> rem = a.coeffs();
  std::vector<Integer> quot(da - db + 1);
  const mpz_srcptr lead = b.leading().get_mpz_t();
  const bool unit_lead = mpz_cmp_ui(lead, 1) == 0;
  for (int k = da - db; k >= 0; --k) {
    Integer& top = rem[k + db];
    if (mpz_sgn(top.get_mpz_t()) == 0) continue;
    Integer c;
    if (unit_lead) {
      c = top;
    } else {
      if (!mpz_divisible_p(top.get_mpz_t(), lead)) return std::nullopt;
      mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead);
    }
    for (int j = 0; j <= db; ++j) mpz_submul(rem[k + j].get_mpz_t(), c.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    quot[k] = std::move(c);
  }
  for (int k = 0; k < db; ++k)
    if (sgn(rem[k]) != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by zero");
  std::vector<Integer> rem = a.coeffs();
  const int db = b.degree();
  const Integer& lead = b.leading();
  int da = a.degree();
  int steps = da - db + 1;
  while (da >= db && da >= 0) {
    Integer top = rem[da];
    for (auto& r : rem) r *= lead;
    for (int j = 0; j <= db; ++j) rem[da - db + j] -= top * b.coeffs()[j];
    --steps;
    rem.resize(da);
    while (!rem.empty() && sgn(rem.back()) == 0) rem.pop_back();
    da = static_cast<int>(rem.size()) - 1;
  }
  IntPoly r(std::move(rem));
  if (steps > 0) {
    Integer f;
    mpz_pow_ui(f.get_mpz_t(), lead.get_mpz_t(), steps);
    r *= f;
  }
  return r;
}

namespace {

Integer max_norm(const IntPoly& p) {
  Integer m = 0;
  for (const auto& c : p.coeffs()) {
    if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
  }
  return m;
}

IntPoly strip_valuation(const IntPoly& p) {
  int v = p.valuation();
  if (v <= 0) return p;
  return IntPoly(std::vector<Integer>(p.coeffs().begin() + v, p.coeffs().end()));
}

// Heuristic gcd of primitive polynomials with nonzero constant terms and
// positive degree. Returns nullopt when it gives up.
std::optional<IntPoly> gcd_heuristic(const IntPoly& a, const IntPoly& b) {
  const int max_deg = std::max(a.degree(), b.degree());
  Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * static_cast<std::size_t>(max_deg + 1) > 8'000'000) break;
    Integer ga = a.eval(xi), gb = b.eval(xi), gamma;
    mpz_gcd(gamma.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t());
    // Symmetric xi-adic expansion of gamma.
    std::vector<Integer> coeffs;
    Integer half = xi / 2;
    while (sgn(gamma) != 0) {
      Integer c;
      mpz_fdiv_r(c.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
      if (c > half) c -= xi;
      coeffs.push_back(c);
      gamma -= c;
      mpz_divexact(gamma.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
    }
    IntPoly g = IntPoly(std::move(coeffs)).primitive_part();
    if (!g.is_zero() && divide_exact(a, g) && divide_exact(b, g)) return g;
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

IntPoly gcd_primitive_prs(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part() * b.content();
  if (b.is_zero()) return a.primitive_part() * a.content();
  Integer c;
  mpz_gcd(c.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  IntPoly x = a.primitive_part(), y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part() * c;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.primitive_part() * b.content();
  if (b.is_zero()) return a.primitive_part() * a.content();
  Integer c;
  mpz_gcd(c.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  const int v = std::min(a.valuation(), b.valuation());
  IntPoly x = strip_valuation(a.primitive_part());
  IntPoly y = strip_valuation(b.primitive_part());
  IntPoly g;
  if (x.degree() == 0 || y.degree() == 0) {
    g = IntPoly{1};
  } else if (x == y) {
    g = x;
  } else if (auto h = gcd_heuristic(x, y)) {
    g = std::move(*h);
  } else {
    g = gcd_primitive_prs(x, y);
  }
  return g.shifted(v) * c;
}

// ------------------------------------------------------------ LaurentPoly

LaurentPoly::LaurentPoly(int offset, std::vector<Integer> coeffs) : offset_(offset), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int exponent) { return LaurentPoly(exponent, {c}); }

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
    offset_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) offset_ = 0;
}

Integer LaurentPoly::coeff(int exponent) const {
  int k = exponent - offset_;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

LaurentPoly LaurentPoly::shifted(int k) const {
  if (is_zero()) return {};
  LaurentPoly r = *this;
  r.offset_ += k;
  return r;
}

IntPoly LaurentPoly::to_poly() const {
  if (is_zero()) return {};
  if (offset_ < 0) throw DomainError("Laurent polynomial has negative exponents");
  return IntPoly(coeffs_).shifted(offset_);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(offset_, o.offset_);
  int hi = std::max(max_exponent(), o.max_exponent());
  std::vector<Integer> v(hi - lo + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) v[offset_ - lo + k] += coeffs_[k];
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) v[o.offset_ - lo + k] += o.coeffs_[k];
  offset_ = lo;
  coeffs_ = std::move(v);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  LaurentPoly neg = o;
  for (auto& c : neg.coeffs_) c = -c;
  return *this += neg;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntPoly p = IntPoly(a.coeffs_) * IntPoly(b.coeffs_);
  return LaurentPoly(a.offset_ + b.offset_, p.coeffs());
}

// ------------------------------------------------------------- predicates

bool is_palindromic(const IntPoly& p) {
  const auto& c = p.coeffs();
  return std::equal(c.begin(), c.end(), c.rbegin());
}

bool is_unimodal(const IntPoly& p) {
  const auto& c = p.coeffs();
  std::size_t k = 1;
  while (k < c.size() && c[k] >= c[k - 1]) ++k;
  while (k < c.size() && c[k] <= c[k - 1]) ++k;
  return k >= c.size();
}

bool has_nonnegative_coefficients(const IntPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Integer& c) { return sgn(c) >= 0; });
}

// -------------------------------------------------------------- rendering

namespace {

std::string superscript(int k) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s = std::to_string(k);
  std::string out;
  for (char ch : s) out += ch == '-' ? "⁻" : digits[ch - '0'];
  return out;
}

std::string render_terms(int offset, const std::vector<Integer>& coeffs, bool unicode) {
  if (coeffs.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Integer& c = coeffs[k];
    if (sgn(c) == 0) continue;
    int e = offset + static_cast<int>(k);
    bool neg = sgn(c) < 0;
    Integer mag = abs(c);
    if (!out.empty()) out += neg ? "-" : "+";
    else if (neg) out += "-";
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str();
    out += "q";
    if (e != 1) out += unicode ? superscript(e) : "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string to_string(const IntPoly& p, bool unicode) { return render_terms(0, p.coeffs(), unicode); }

std::string to_string(const LaurentPoly& p, bool unicode) { return render_terms(p.offset(), p.coeffs(), unicode); }

std::string to_latex(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    const Integer& c = p.coeffs()[k];
    if (sgn(c) == 0) continue;
    bool neg = sgn(c) < 0;
    Integer mag = abs(c);
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str();
    out += k == 1 ? "q" : "q^{" + std::to_string(k) + "}";
  }
  return out;
}

}  // namespace jfunc
