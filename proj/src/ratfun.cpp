#include "darboux/ratfun.hpp"

#include <cstdlib>

#include "darboux/error.hpp"

namespace darboux {

RatFun::RatFun(const BigRat& c) : num_(Poly::constant(c)), den_(Poly::constant(BigRat(1))) {}

RatFun::RatFun(Poly num) : num_(std::move(num)), den_(Poly::constant(BigRat(1))) {}

RatFun::RatFun(Poly num, Poly den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) {
    den_ = Poly::constant(BigRat(1));
    return;
  }
  if (den.degree() > 0) {
    Poly g = gcd(num, den);
    if (g.degree() > 0) {
      num = divmod(num, g).first;
      den = divmod(den, g).first;
    }
  }
  const BigRat lead = den.leading();
  num_ = num * (BigRat(1) / lead);
  den_ = den.monic();
}

RatFun RatFun::x_pow(int power) {
  if (power >= 0) return RatFun(Poly::monomial(BigRat(1), static_cast<std::size_t>(power)));
  return RatFun(Poly::constant(BigRat(1)), Poly::monomial(BigRat(1), static_cast<std::size_t>(-power)),
                Canonical{});
}

BigRat RatFun::operator()(const BigRat& at) const {
  const BigRat d = den_(at);
  if (sgn(d) == 0) throw PoleError(at);
  return num_(at) / d;
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, Canonical{}); }

RatFun& RatFun::operator+=(const RatFun& rhs) {
  if (den_ == rhs.den_) return *this = RatFun(num_ + rhs.num_, den_);
  return *this = RatFun(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RatFun& RatFun::operator-=(const RatFun& rhs) { return *this += -rhs; }

RatFun& RatFun::operator*=(const RatFun& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = RatFun();
  return *this = RatFun(num_ * rhs.num_, den_ * rhs.den_);
}

RatFun& RatFun::operator/=(const RatFun& rhs) {
  if (rhs.is_zero()) throw DivisionByZero("division by zero rational function");
  return *this = RatFun(num_ * rhs.den_, den_ * rhs.num_);
}

RatFun derivative_x(const RatFun& f) {
  if (f.is_polynomial()) return RatFun(derivative(f.num()) * (BigRat(1) / f.den().leading()));
  return RatFun(derivative(f.num()) * f.den() - f.num() * derivative(f.den()), f.den() * f.den());
}

RatFun derivative_x(const RatFun& f, unsigned n) {
  RatFun out = f;
  for (unsigned i = 0; i < n && !out.is_zero(); ++i) out = derivative_x(out);
  return out;
}

RatFun derivative_t(const RatFun& f) { return -(RatFun::x() * derivative_x(f)); }

RatFun pow(const RatFun& f, int exponent) {
  const unsigned e = static_cast<unsigned>(std::abs(exponent));
  if (exponent < 0) {
    if (f.is_zero()) throw DivisionByZero("negative power of the zero function");
    return RatFun(pow(f.den(), e), pow(f.num(), e));
  }
  return RatFun(pow(f.num(), e), pow(f.den(), e));
}

std::optional<std::pair<BigRat, int>> as_monomial(const RatFun& f) {
  if (f.is_zero() || f.num().term_count() != 1 || f.den().term_count() != 1) return std::nullopt;
  // den is monic with a single term, so it is x^d.
  const int e = f.num().degree() - f.den().degree();
  return std::make_pair(f.num().leading(), e);
}

double eval_double(const RatFun& f, double x0) { return f(BigRat(x0)).get_d(); }

}  // namespace darboux
