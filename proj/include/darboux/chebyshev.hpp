#pragma once

#include <string_view>

#include "darboux/continued_fraction.hpp"
#include "darboux/poly.hpp"
#include "darboux/ratfun.hpp"

namespace darboux {

/// T_n via T_(n+1) = 2x T_n - T_(n-1), T_0 = 1, T_1 = x.
Poly chebyshev_t(unsigned n);

/// Sign attached to x in f_n = T_(n-1)/T_n ± x. Only `corrected_minus`
/// satisfies (f_n - x)(f_(n+1) + x) = -1.
enum class ChebyshevConvention { paper_plus, corrected_minus };

std::string_view to_string(ChebyshevConvention c);

struct ChebyshevPair {
  unsigned n;
  Poly t_prev;
  Poly t_cur;
  RatFun f;
};

/// Requires n >= 1.
ChebyshevPair chebyshev_pair(unsigned n,
                             ChebyshevConvention c = ChebyshevConvention::corrected_minus);

RatFun chebyshev_ratio(unsigned n, ChebyshevConvention c = ChebyshevConvention::corrected_minus);

/// (f_n - x)(f_(n+1) + x) + 1.
RatFun chebyshev_pair_residual(unsigned n,
                               ChebyshevConvention c = ChebyshevConvention::corrected_minus);

/// (1 - x^2) T_n'' - x T_n' + n^2 T_n.
Poly chebyshev_ode_residual(unsigned n);

/// f_n (corrected_minus) unrolled through f_(k+1) = -x - 1/(f_k - x):
///   -x - 1/(-2x - 1/(... - 1/(f_1 - x))).
ContinuedFraction chebyshev_continued_fraction(unsigned n);

}  // namespace darboux
