#pragma once

#include <optional>
#include <utility>

#include "darboux/bigrat.hpp"
#include "darboux/poly.hpp"

namespace darboux {

/// Canonical univariate rational function num/den over the rationals.
///
/// Invariants: gcd(num, den) = 1, den is monic, and zero is stored as 0/1.
/// Because the form is canonical, structural equality is mathematical
/// equality.
class RatFun {
 public:
  RatFun() : den_(Poly::constant(BigRat(1))) {}
  RatFun(const BigRat& c);  // NOLINT(google-explicit-constructor)
  RatFun(Poly num);         // NOLINT(google-explicit-constructor)
  /// Normalizes; throws DivisionByZero when den is the zero polynomial.
  RatFun(Poly num, Poly den);

  static RatFun x() { return RatFun(Poly::x()); }
  /// x^power for any integer power.
  static RatFun x_pow(int power);

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }
  bool is_constant() const noexcept { return is_polynomial() && num_.is_constant(); }

  /// Exact evaluation; throws PoleError when den(at) = 0.
  BigRat operator()(const BigRat& at) const;

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& rhs);
  RatFun& operator-=(const RatFun& rhs);
  RatFun& operator*=(const RatFun& rhs);
  RatFun& operator/=(const RatFun& rhs);

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Canonical {};
  RatFun(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

RatFun derivative_x(const RatFun& f);

/// Derivative in t under x = e^(-t): f_t = -x * f_x.
RatFun derivative_t(const RatFun& f);

/// n-th x-derivative.
RatFun derivative_x(const RatFun& f, unsigned n);

/// Integer power; negative powers of the zero function throw DivisionByZero.
RatFun pow(const RatFun& f, int exponent);

/// If f = c * x^e (c != 0), returns (c, e).
std::optional<std::pair<BigRat, int>> as_monomial(const RatFun& f);

/// Evaluates at a double by converting x0 to the exact rational it
/// represents, evaluating exactly, and rounding once. Throws PoleError.
double eval_double(const RatFun& f, double x0);

}  // namespace darboux
