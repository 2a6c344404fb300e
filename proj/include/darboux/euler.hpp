#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "darboux/bigrat.hpp"
#include "darboux/diffop.hpp"
#include "darboux/poly.hpp"

namespace darboux {

/// e^(m t) k(D_t) with k a polynomial in D_t = d/dt with constant
/// coefficients. The zero operator has k = 0 and m = 0.
struct EulerOp {
  std::int64_t m = 0;
  Poly k;

  static EulerOp identity() { return {0, Poly::constant(BigRat(1))}; }
  bool is_zero() const noexcept { return k.is_zero(); }

  friend bool operator==(const EulerOp&, const EulerOp&) = default;
};

/// e^(m t) k(D) ∘ e^(n t) z(D) = e^((m+n) t) k(D + n) z(D).
EulerOp compose(const EulerOp& a, const EulerOp& b);

struct ExpImage {
  BigRat coefficient;
  BigRat exponent;
};

/// Action on e^(s t): e^(m t) k(D_t) e^(s t) = k(s) e^((m+s) t).
ExpImage apply_exp(const EulerOp& op, const BigRat& s);

/// The same operator in x = e^(-t): e^(m t) = x^(-m), D_t = -x D_x.
DiffOp to_diffop(const EulerOp& op);

class NotEulerType : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inverse of to_diffop. Each coefficient of D_x^l must be c_l * x^(l - m)
/// for one integer m; otherwise NotEulerType names the offending
/// coefficient.
EulerOp euler_from_diffop(const DiffOp& op);

}  // namespace darboux
