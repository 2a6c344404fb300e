#include <doctest.h>

#include <cmath>

#include "darboux/chebyshev.hpp"
#include "darboux/expr.hpp"

using namespace darboux;

namespace {

RatFun fn(const char* text) { return parse_function(text); }

double horner(const Poly& p, double x) {
  double acc = 0.0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

}  // namespace

TEST_CASE("chebyshev_t") {
  CHECK(chebyshev_t(0) == Poly::constant(BigRat(1)));
  CHECK(chebyshev_t(1) == Poly::x());
  CHECK(chebyshev_t(2) == Poly{BigRat(-1), BigRat(0), BigRat(2)});
  CHECK(std::abs(horner(chebyshev_t(5), std::cos(0.3)) - std::cos(5 * 0.3)) <= 1e-12);
}

TEST_CASE("recurrence, degree and leading coefficient") {
  for (unsigned n = 1; n <= 50; ++n) {
    const Poly t = chebyshev_t(n);
    CHECK((chebyshev_t(n + 1) + chebyshev_t(n - 1) - Poly::monomial(BigRat(2), 1) * t).is_zero());
    CHECK(t.degree() == static_cast<int>(n));
    CHECK(t.leading() == BigRat(BigInt(1) << (n - 1)));
  }
}

TEST_CASE("trigonometric oracle") {
  for (unsigned n = 0; n <= 20; ++n) {
    const Poly t = chebyshev_t(n);
    for (int k = 1; k <= 15; ++k) {
      const double theta = 0.1 * k;
      CHECK(std::abs(horner(t, std::cos(theta)) - std::cos(n * theta)) <= 1e-8);  // cancellation grows like 2^n * eps
    }
  }
}

TEST_CASE("chebyshev_ratio") {
  CHECK(chebyshev_ratio(1, ChebyshevConvention::paper_plus) == fn("x + 1/x"));
  CHECK(chebyshev_ratio(1) == fn("1/x - x"));
  CHECK(chebyshev_ratio(2) == fn("x/(2*x^2 - 1) - x"));
  const auto pair = chebyshev_pair(3);
  CHECK(pair.t_prev == chebyshev_t(2));
  CHECK(pair.t_cur == chebyshev_t(3));
  CHECK_THROWS_AS(chebyshev_ratio(0), std::invalid_argument);
}

TEST_CASE("chebyshev_pair_residual") {
  CHECK(chebyshev_pair_residual(1).is_zero());
  // numeric witness for the corrected form at x = 1/2: (3/2 - 1/2)(-3/2 + 1/2) = -1
  const BigRat half = make_rat(1, 2);
  const BigRat f1 = chebyshev_ratio(1)(half);
  const BigRat f2 = chebyshev_ratio(2)(half);
  CHECK((f1 - half) * (f2 + half) == -1);

  const RatFun plus = chebyshev_pair_residual(1, ChebyshevConvention::paper_plus);
  CHECK(plus == fn("(4*x^2 - 1)/(2*x^2 - 1) + 1"));
  CHECK(plus(half) == 1);

  for (unsigned n = 2; n <= 50; ++n) CHECK(chebyshev_pair_residual(n).is_zero());
}

TEST_CASE("chebyshev_ode_residual") {
  for (unsigned n = 0; n <= 50; ++n) CHECK(chebyshev_ode_residual(n).is_zero());
}

TEST_CASE("chebyshev_continued_fraction") {
  const auto one = chebyshev_continued_fraction(1);
  CHECK(one.terms.empty());
  CHECK(one.terminal() == fn("1/x - x"));

  const auto two = chebyshev_continued_fraction(2);
  CHECK(collapse(two) == fn("-x - 1/((1/x - x) - x)"));
  CHECK(collapse(two) == fn("x/(2*x^2 - 1) - x"));

  for (unsigned n = 1; n <= 20; ++n) CHECK(collapse(chebyshev_continued_fraction(n)) == chebyshev_ratio(n));
  // The printed nested form parses back to the same function.
  for (unsigned n = 1; n <= 6; ++n) {
    const auto cf = chebyshev_continued_fraction(n);
    CHECK(parse_function(to_string(cf)) == collapse(cf));
  }
}
