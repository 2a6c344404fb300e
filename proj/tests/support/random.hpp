#pragma once

#include <random>
#include <vector>

#include "darboux/diffop.hpp"
#include "darboux/euler.hpp"
#include "darboux/poly.hpp"
#include "darboux/ratfun.hpp"

namespace darboux::testing {

// Small random exact objects for property tests. Fixed seeds keep failures
// reproducible.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  BigRat rational() { return make_rat(integer(-12, 12), integer(1, 6)); }

  Poly poly(int max_degree) {
    std::vector<BigRat> c(static_cast<std::size_t>(integer(0, max_degree) + 1));
    for (auto& v : c) v = rational();
    return Poly(std::move(c));
  }

  Poly nonzero_poly(int max_degree) {
    for (;;) {
      Poly p = poly(max_degree);
      if (!p.is_zero()) return p;
    }
  }

  RatFun ratfun(int max_degree) { return RatFun(poly(max_degree), nonzero_poly(max_degree)); }

  RatFun nonzero_ratfun(int max_degree) {
    return RatFun(nonzero_poly(max_degree), nonzero_poly(max_degree));
  }

  DiffOp diffop(int max_order, int max_degree) {
    std::vector<RatFun> c(static_cast<std::size_t>(integer(0, max_order) + 1));
    for (auto& v : c) v = ratfun(max_degree);
    return DiffOp(std::move(c));
  }

  EulerOp euler(long max_m, int max_degree) { return {integer(-max_m, max_m), nonzero_poly(max_degree)}; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace darboux::testing
