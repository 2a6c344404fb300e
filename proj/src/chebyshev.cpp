#include "darboux/chebyshev.hpp"

#include <stdexcept>

namespace darboux {

Poly chebyshev_t(unsigned n) {
  Poly prev = Poly::constant(BigRat(1));
  if (n == 0) return prev;
  Poly cur = Poly::x();
  const Poly two_x = Poly::monomial(BigRat(2), 1);
  for (unsigned k = 1; k < n; ++k) {
    Poly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::string_view to_string(ChebyshevConvention c) {
  return c == ChebyshevConvention::paper_plus ? "paper_plus" : "corrected_minus";
}

ChebyshevPair chebyshev_pair(unsigned n, ChebyshevConvention c) {
  if (n < 1) throw std::invalid_argument("chebyshev ratio needs n >= 1");
  Poly t_prev = chebyshev_t(n - 1);
  Poly t_cur = chebyshev_t(n);
  const RatFun x = RatFun::x();
  RatFun f = RatFun(t_prev, t_cur) + (c == ChebyshevConvention::paper_plus ? x : -x);
  return {n, std::move(t_prev), std::move(t_cur), std::move(f)};
}

RatFun chebyshev_ratio(unsigned n, ChebyshevConvention c) { return chebyshev_pair(n, c).f; }

RatFun chebyshev_pair_residual(unsigned n, ChebyshevConvention c) {
  const RatFun x = RatFun::x();
  return (chebyshev_ratio(n, c) - x) * (chebyshev_ratio(n + 1, c) + x) + RatFun(BigRat(1));
}

Poly chebyshev_ode_residual(unsigned n) {
  const Poly t = chebyshev_t(n);
  const Poly t1 = derivative(t);
  const Poly t2 = derivative(t1);
  return Poly{BigRat(1), BigRat(0), BigRat(-1)} * t2 - Poly::x() * t1 +
         t * BigRat(static_cast<long>(n) * static_cast<long>(n));
}

ContinuedFraction chebyshev_continued_fraction(unsigned n) {
  if (n < 1) throw std::invalid_argument("chebyshev continued fraction needs n >= 1");
  const RatFun x = RatFun::x();
  const RatFun f1 = chebyshev_ratio(1);
  if (n == 1) return {f1, {}};
  const RatFun minus_one(BigRat(-1));
  ContinuedFraction cf{-x, {}};
  // f_k - x = -2x - 1/(f_(k-1) - x)
  for (unsigned k = n - 1; k >= 2; --k) cf.terms.push_back({minus_one, RatFun(Poly::monomial(BigRat(-2), 1))});
  cf.terms.push_back({minus_one, f1 - x});
  return cf;
}

}  // namespace darboux
