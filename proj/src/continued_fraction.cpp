#include "darboux/continued_fraction.hpp"

#include "darboux/error.hpp"

namespace darboux {

RatFun collapse(const ContinuedFraction& cf) {
  if (cf.terms.empty()) return cf.head;
  RatFun tail = cf.terms.back().partial_denominator;
  for (std::size_t i = cf.terms.size(); i-- > 0;) {
    if (tail.is_zero()) throw DivisionByZero("continued fraction level " + std::to_string(i + 1) +
                                             " has a zero denominator");
    const RatFun above = i == 0 ? cf.head : cf.terms[i - 1].partial_denominator;
    tail = above + cf.terms[i].partial_numerator / tail;
  }
  return tail;
}

double cf_eval(const ContinuedFraction& cf, double x0) {
  const auto at = [x0](const RatFun& f, std::size_t level) {
    try {
      return eval_double(f, x0);
    } catch (const PoleError&) {
      throw ContinuedFractionPole(level, x0);
    }
  };
  if (cf.terms.empty()) return at(cf.head, 0);
  double tail = at(cf.terms.back().partial_denominator, cf.terms.size());
  for (std::size_t i = cf.terms.size(); i-- > 0;) {
    if (tail == 0.0) throw ContinuedFractionPole(i + 1, x0);
    const double above = i == 0 ? at(cf.head, 0) : at(cf.terms[i - 1].partial_denominator, i);
    tail = above + at(cf.terms[i].partial_numerator, i + 1) / tail;
  }
  return tail;
}

}  // namespace darboux
