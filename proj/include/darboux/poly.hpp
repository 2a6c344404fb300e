#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "darboux/bigrat.hpp"

namespace darboux {

/// Dense univariate polynomial with exact rational coefficients, stored in
/// ascending degree. The highest stored coefficient is always nonzero; the
/// zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigRat> ascending);
  Poly(std::initializer_list<BigRat> ascending);

  static Poly constant(const BigRat& c);
  static Poly monomial(const BigRat& c, std::size_t power);
  static Poly x() { return monomial(BigRat(1), 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  const std::vector<BigRat>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^k; zero beyond the degree.
  BigRat coeff(std::size_t k) const;
  /// Leading coefficient; zero for the zero polynomial.
  BigRat leading() const;
  std::size_t term_count() const;

  Poly monic() const;

  BigRat operator()(const BigRat& at) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const BigRat& scalar);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly lhs, const BigRat& s) { return lhs *= s; }
  friend Poly operator*(const BigRat& s, Poly rhs) { return rhs *= s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<BigRat> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. Throws DivisionByZero
/// when b is zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

Poly derivative(const Poly& p);

/// p(x + shift). Used for the k(D + n) shift law of Euler operators.
Poly shift(const Poly& p, const BigRat& by);

Poly pow(const Poly& p, unsigned exponent);

}  // namespace darboux
