#include "darboux/euler.hpp"

#include "darboux/expr.hpp"

namespace darboux {

EulerOp compose(const EulerOp& a, const EulerOp& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return {a.m + b.m, shift(a.k, BigRat(static_cast<long>(b.m))) * b.k};
}

ExpImage apply_exp(const EulerOp& op, const BigRat& s) {
  return {op.k(s), BigRat(static_cast<long>(op.m)) + s};
}

DiffOp to_diffop(const EulerOp& op) {
  if (op.is_zero()) return {};
  // D_t = -x D_x
  const DiffOp dt({RatFun(), -RatFun::x()});
  DiffOp power = DiffOp::identity();
  DiffOp out;
  for (std::size_t i = 0; i < op.k.coeffs().size(); ++i) {
    if (i > 0) power = compose(power, dt);
    out += RatFun(op.k.coeffs()[i]) * power;
  }
  return RatFun::x_pow(static_cast<int>(-op.m)) * out;
}

EulerOp euler_from_diffop(const DiffOp& op) {
  if (op.is_zero()) return {};
  const int n = op.order();
  const auto lead = as_monomial(op.coeff(static_cast<std::size_t>(n)));
  if (!lead) {
    throw NotEulerType("coefficient of D^" + std::to_string(n) + " (" +
                       to_string(op.coeff(static_cast<std::size_t>(n))) +
                       ") is not a monomial c*x^e");
  }
  const int m = n - lead->second;
  // x^l D_x^l = theta (theta - 1) ... (theta - l + 1) with theta = x D_x = -D_t.
  Poly k;
  Poly falling = Poly::constant(BigRat(1));
  for (int l = 0; l <= n; ++l) {
    if (l > 0) falling *= Poly{BigRat(-(l - 1)), BigRat(-1)};
    const RatFun c = op.coeff(static_cast<std::size_t>(l));
    if (c.is_zero()) continue;
    const auto mono = as_monomial(c);
    if (!mono || mono->second != l - m) {
      throw NotEulerType("coefficient of D^" + std::to_string(l) + " (" + to_string(c) +
                         ") is not of the form c*x^" + std::to_string(l - m));
    }
    k += falling * mono->first;
  }
  return {m, k};
}

}  // namespace darboux
