#include "jfunc/ratfunc.hpp"

#include "jfunc/errors.hpp"

namespace jfunc {

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  canonicalize();
}

RatFunc RatFunc::q_power(int k) {
  if (k >= 0) return RatFunc(IntPoly::monomial(1, k));
  return RatFunc(IntPoly{1}, IntPoly::monomial(1, -k), Unchecked{});
}

RatFunc RatFunc::from_laurent(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  IntPoly body(p.coeffs());
  if (p.offset() >= 0) return RatFunc(body.shifted(p.offset()));
  return RatFunc(std::move(body), IntPoly::monomial(1, -p.offset()));
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = IntPoly{1};
    return;
  }
  if (den_.degree() == 0) {
    // Constant denominator: reduce by the integer content only.
    Integer g;
    mpz_gcd(g.get_mpz_t(), num_.content().get_mpz_t(), den_.leading().get_mpz_t());
    if (sgn(den_.leading()) < 0) g = -g;
    num_.divide_exact(g);
    den_.divide_exact(g);
    return;
  }
  IntPoly g = gcd(num_, den_);
  if (g.degree() > 0 || g.leading() != 1) {
    num_ = *divide_exact(num_, g);
    den_ = *divide_exact(den_, g);
  }
  if (sgn(den_.leading()) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    IntPoly n = num_ * o.den_;
    n.add_product(o.num_, den_);
    num_ = std::move(n);
    den_ *= o.den_;
  }
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  // Cross-cancel first so the products stay small.
  IntPoly g1 = gcd(num_, o.den_);
  IntPoly g2 = gcd(o.num_, den_);
  IntPoly n1 = *divide_exact(num_, g1), d2 = *divide_exact(o.den_, g1);
  IntPoly n2 = *divide_exact(o.num_, g2), d1 = *divide_exact(den_, g2);
  num_ = n1 * n2;
  den_ = d1 * d2;
  if (sgn(den_.leading()) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DomainError("rational function division by zero");
  RatFunc inverse = sgn(o.num_.leading()) < 0 ? RatFunc(-o.den_, -o.num_, Unchecked{})
                                              : RatFunc(o.den_, o.num_, Unchecked{});
  return *this *= inverse;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Unchecked{}); }

RatFunc RatFunc::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  return *this * q_power(k);
}

RatFunc invert_q(const RatFunc& f) {
  if (f.is_zero()) throw DomainError("invert_q of the zero function");
  // n(1/q)/d(1/q) = q^{deg d - deg n} rev(n)/rev(d)
  IntPoly n = f.num().reversed();
  IntPoly d = f.den().reversed();
  int shift = f.den().degree() - f.num().degree();
  if (shift >= 0) return RatFunc(n.shifted(shift), d);
  return RatFunc(n, d.shifted(-shift));
}

std::string to_string(const RatFunc& f, bool unicode) {
  std::string n = to_string(f.num(), unicode);
  if (f.is_polynomial()) return n;
  std::string d = to_string(f.den(), unicode);
  return "(" + n + ")/(" + d + ")";
}

}  // namespace jfunc
