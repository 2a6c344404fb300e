#pragma once

#include <cstddef>
#include <vector>

#include "darboux/bigrat.hpp"
#include "darboux/ratfun.hpp"

namespace darboux {

/// Linear differential operator a_0(x) D^n + a_1(x) D^(n-1) + ... + a_n(x)
/// with rational-function coefficients, D = d/dx.
///
/// Stored by power: coeff(k) multiplies D^k. The top coefficient is nonzero
/// unless the operator is zero (order -1).
class DiffOp {
 public:
  DiffOp() = default;
  explicit DiffOp(std::vector<RatFun> by_power);

  /// Multiplication by f (order 0, or zero when f = 0).
  static DiffOp multiply(const RatFun& f);
  static DiffOp d() { return DiffOp({RatFun(), RatFun(BigRat(1))}); }
  static DiffOp identity() { return multiply(RatFun(BigRat(1))); }
  /// From the leading-first list a_0, ..., a_n.
  static DiffOp from_leading(const std::vector<RatFun>& leading_first);

  int order() const noexcept { return static_cast<int>(by_power_.size()) - 1; }
  bool is_zero() const noexcept { return by_power_.empty(); }

  /// Coefficient of D^k; zero beyond the order.
  RatFun coeff(std::size_t k) const;
  /// a_j, the coefficient of D^(n-j).
  RatFun a(std::size_t j) const;
  const std::vector<RatFun>& by_power() const noexcept { return by_power_; }

  DiffOp operator-() const;
  DiffOp& operator+=(const DiffOp& rhs);
  DiffOp& operator-=(const DiffOp& rhs);
  /// Coefficient-wise multiplication, i.e. f * A.
  DiffOp& operator*=(const RatFun& f);

  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(const RatFun& f, DiffOp a) { return a *= f; }
  friend DiffOp operator*(DiffOp a, const RatFun& f) { return a *= f; }

  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.by_power_ == b.by_power_; }

 private:
  void trim();

  std::vector<RatFun> by_power_;
};

/// Sum of coeff(k) * psi^(k).
RatFun apply(const DiffOp& op, const RatFun& psi);

/// (A∘B) psi = A(B psi). Leibniz rule: D^i ∘ b = sum_l C(i,l) b^(l) D^(i-l).
DiffOp compose(const DiffOp& a, const DiffOp& b);

/// D - g.
DiffOp first_order_factor(const RatFun& g);

/// Bessel operator D^2 + (1/x) D - beta^2/x^2.
DiffOp bessel_operator(const BigRat& beta);

struct RightDivision {
  DiffOp quotient;
  RatFun remainder;
};

/// A = Q∘(D - g) + R with R of order zero. Requires order(A) >= 1.
///
/// R vanishes exactly when g is the logarithmic derivative of a kernel
/// element of A.
RightDivision right_divide(const DiffOp& op, const RatFun& g);

/// With A = Q∘(D - g), returns (D - g)∘Q. The result intertwines with A:
/// Â∘(D - g) = (D - g)∘A, so psi -> (D - g) psi maps eigenfunctions of A
/// to eigenfunctions of Â with the same eigenvalue.
///
/// Throws std::domain_error("g is not a kernel logarithmic derivative") if
/// the division leaves a remainder.
DiffOp darboux_transform(const DiffOp& op, const RatFun& g);

/// Recovers psi = Q(psihat) / lambda from psihat = (D - g) psi when
/// A psi = lambda psi and A = Q∘(D - g). Throws for lambda = 0.
RatFun inverse_substitution(const DiffOp& quotient, const RatFun& psihat, const BigRat& lambda);

/// Conjugation by the gauge psi = e^phi psihat given w = phi_x:
/// e^(-phi) ∘ A ∘ e^(phi), i.e. A with D replaced by D + w.
DiffOp gauge_conjugate(const DiffOp& op, const RatFun& w);

/// Normal form D^2 + q reached by a gauge substitution. The gauge is kept
/// only through its logarithmic derivative w.
struct SchrodingerForm {
  RatFun q;
  RatFun gauge_logderiv;
};

/// For order-2 A with p = a1/a0, r = a2/a0: w = -p/2, q = r - p^2/4 - p_x/2.
SchrodingerForm normalize_to_schrodinger(const DiffOp& op);

/// q such that (D - g)∘(D + g) = D^2 + q; equals g_x - g^2.
RatFun schrodinger_factor_q(const RatFun& g);

}  // namespace darboux
