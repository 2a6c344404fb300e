#pragma once

#include <vector>

#include "darboux/ratfun.hpp"

namespace darboux {

struct CfLevel {
  RatFun partial_numerator;
  RatFun partial_denominator;
};

/// Finite continued fraction with rational-function entries:
///
///   head + n_1/(d_1 + n_2/(d_2 + ... + n_k/d_k))
///
/// terms[i] holds (n_{i+1}, d_{i+1}), outermost first.
struct ContinuedFraction {
  RatFun head;
  std::vector<CfLevel> terms;

  /// Innermost denominator d_k, or head when there are no levels.
  const RatFun& terminal() const { return terms.empty() ? head : terms.back().partial_denominator; }
};

/// Exact bottom-up collapse. Throws DivisionByZero if a level's
/// denominator is identically zero.
RatFun collapse(const ContinuedFraction& cf);

/// Floating bottom-up evaluation. Throws ContinuedFractionPole with the
/// level index (1 = outermost) when a denominator vanishes or an entry has
/// a pole at x0.
double cf_eval(const ContinuedFraction& cf, double x0);

}  // namespace darboux
