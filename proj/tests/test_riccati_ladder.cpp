#include <doctest.h>

#include <cmath>

#include "darboux/bessel.hpp"
#include "darboux/error.hpp"
#include "darboux/expr.hpp"
#include "darboux/riccati.hpp"
#include "support/random.hpp"

using namespace darboux;

namespace {

RatFun fn(const char* text) { return parse_function(text); }

const BigRat kHalf = make_rat(1, 2);

}  // namespace

TEST_CASE("riccati_from_operator") {
  const RatFun q = fn("x^2 - 3");
  const auto schrod = riccati_from_operator(parse_operator("D^2 + x^2 - 3"), BigRat(2));
  CHECK(schrod.a0 == RatFun(BigRat(1)));
  CHECK(schrod.a1.is_zero());
  CHECK(schrod.a2 == q);
  CHECK(schrod.lambda == 2);

  const BigRat beta = make_rat(3, 2);
  const auto bessel = riccati_from_operator(bessel_operator(beta), BigRat(1));
  CHECK(bessel.a1 == RatFun::x_pow(-1));
  CHECK(bessel.a2 == RatFun(-beta * beta) * RatFun::x_pow(-2));

  const auto plain = riccati_from_operator(parse_operator("D^2"), BigRat(0));
  CHECK(plain.a2.is_zero());
  CHECK_THROWS_AS(riccati_from_operator(parse_operator("D"), BigRat(1)), std::invalid_argument);
}

TEST_CASE("riccati_residual_x") {
  const auto free = riccati_from_operator(parse_operator("D^2"), BigRat(0));
  CHECK(riccati_residual_x(free, RatFun::x_pow(-1)).is_zero());  // psi = x
  CHECK(riccati_residual_x(free, RatFun()).is_zero());
  const auto shifted = riccati_from_operator(parse_operator("D^2"), BigRat(3));
  CHECK(riccati_residual_x(shifted, RatFun::x_pow(-1)) == RatFun(BigRat(-3)));

  // log-derivative of x^(-1/2) e^(-x)
  const auto bessel = riccati_from_operator(bessel_operator(kHalf), BigRat(1));
  CHECK(riccati_residual_x(bessel, fn("-1/(2*x) - 1")).is_zero());
}

TEST_CASE("riccati_residual_t") {
  CHECK(riccati_residual_t(fn("1/2 - x"), kHalf).is_zero());
  CHECK(riccati_residual_t(fn("1/2 + x"), -kHalf).is_zero());
  CHECK(riccati_residual_t(RatFun::x(), BigRat(0)) == -RatFun::x());
}

TEST_CASE("t-form residual agrees with the x-form through f_t = -x f_x") {
  // For the Bessel operator, psi'/psi = g gives f = -x g and
  // residual_t(f) = x^2 residual_x(g).
  testing::Gen gen(21);
  for (int i = 0; i < 20; ++i) {
    const BigRat beta = gen.rational();
    const RatFun g = gen.ratfun(3);
    const auto form = riccati_from_operator(bessel_operator(beta), BigRat(1));
    const RatFun x2 = RatFun::x() * RatFun::x();
    CHECK(riccati_residual_t(-RatFun::x() * g, beta) == x2 * riccati_residual_x(form, g));
  }
}

TEST_CASE("raise_order") {
  SUBCASE("first ladder step") {
    const auto s = raise_order(fn("1/2 - x"), kHalf);
    CHECK(s.f == fn("3/2 + x^2/(1 - x)"));
    CHECK(s.beta == make_rat(3, 2));
  }
  SUBCASE("fixed point") {
    const auto s = raise_order(fn("1/2 + x"), -kHalf);
    CHECK(s.f == fn("1/2 + x"));
    CHECK(s.beta == kHalf);
  }
  SUBCASE("plus branch matches -x K'/K for K_3/2") {
    const auto s = raise_order(fn("1/2 + x"), kHalf);
    CHECK(s.f == fn("3/2 + x^2/(1 + x)"));
    for (double x0 : {0.5, 1.0, 2.0, 4.0}) {
      CHECK(eval_double(s.f, x0) == doctest::Approx(log_deriv_t_k({1}, x0)).epsilon(1e-13));
    }
  }
  SUBCASE("degenerate") {
    CHECK_THROWS_WITH(raise_order(RatFun(-kHalf), kHalf), "degenerate step: f + β vanishes identically");
  }
  SUBCASE("solutions map to solutions for general lambda") {
    const BigRat lambda(4);
    for (const auto& fp : fixed_points(lambda)) {
      auto cur = raise_order(fp.f, kHalf, lambda);
      for (int i = 0; i < 4; ++i) {
        CHECK(riccati_residual_t(cur.f, cur.beta, lambda).is_zero());
        cur = raise_order(cur.f, cur.beta, lambda);
      }
    }
  }
}

TEST_CASE("lower_order") {
  const auto down = lower_order(fn("3/2 + x^2/(1 - x)"), make_rat(3, 2));
  CHECK(down.f == fn("1/2 - x"));
  CHECK(down.beta == kHalf);
  const auto fixed = lower_order(fn("1/2 + x"), kHalf);
  CHECK(fixed.f == fn("1/2 + x"));
  CHECK(fixed.beta == -kHalf);
  CHECK_THROWS_AS(lower_order(RatFun(kHalf), kHalf), std::domain_error);

  testing::Gen gen(22);
  for (int i = 0; i < 20; ++i) {
    const RatFun f = gen.ratfun(4);
    const BigRat beta = gen.rational();
    if ((f + RatFun(beta)).is_zero()) continue;
    const auto up = raise_order(f, beta);
    CHECK(lower_order(up.f, up.beta) == RiccatiSolution{f, beta});
  }
}

TEST_CASE("fixed_points") {
  const auto unit = fixed_points();
  REQUIRE(unit.size() == 2);
  CHECK(unit[0] == RiccatiSolution{fn("1/2 + x"), -kHalf});
  CHECK(unit[1] == RiccatiSolution{fn("1/2 - x"), -kHalf});
  for (const auto& fp : unit) {
    CHECK(raise_order(fp.f, fp.beta) == RiccatiSolution{fp.f, kHalf});
  }
  // (beta + 1)^2 = beta^2 has the single root -1/2.
  const BigRat beta = -kHalf;
  CHECK((beta + 1) * (beta + 1) == beta * beta);

  const auto four = fixed_points(BigRat(4));
  CHECK(four[0].f == fn("1/2 + 2*x"));
  CHECK(four[1].f == fn("1/2 - 2*x"));
  for (const auto& fp : four) CHECK(riccati_residual_t(fp.f, fp.beta, BigRat(4)).is_zero());

  CHECK_THROWS_AS(fixed_points(BigRat(2)), std::domain_error);
  CHECK_THROWS_AS(fixed_points(BigRat(0)), std::invalid_argument);
}

TEST_CASE("ladder") {
  const auto minus = ladder(3);
  CHECK(minus[1].f == fn("3/2 + x^2/(1 - x)"));
  CHECK(minus[2].f == fn("5/2 + (x^2 - x^3)/(x^2 - 3*x + 3)"));
  const auto plus = ladder(1, Branch::plus);
  CHECK(plus[0].f == fn("1/2 + x"));
  CHECK_THROWS_AS(ladder(0), std::invalid_argument);

  for (Branch b : {Branch::minus, Branch::plus}) {
    const auto states = ladder(12, b);
    for (const auto& s : states) {
      CHECK(s.beta == make_rat(2 * s.j - 1, 2));
      CHECK(s.branch == b);
      CHECK(riccati_residual_t(s.f, s.beta).is_zero());
    }
  }
}

TEST_CASE("printed third and fourth rungs fail the residual") {
  CHECK_FALSE(riccati_residual_t(fn("5/2 + x^2/(x^2 - 3*x + 3)"), make_rat(5, 2)).is_zero());
  CHECK_FALSE(riccati_residual_t(fn("7/2 + x^2/(6*x^2 - 15*x + 15)"), make_rat(7, 2)).is_zero());
  CHECK(ladder(4)[3].f == fn("7/2 + x^2*(x^2 - 3*x + 3)/(15 - 15*x + 6*x^2 - x^3)"));
}

TEST_CASE("minus branch tracks x^(-1/2) e^x") {
  // -x d/dx log(x^(-1/2) e^x) = 1/2 - x
  for (double x0 : {0.3, 1.0, 2.5}) {
    const double h = 1e-6;
    const auto psi = [](double x) { return std::log(std::pow(x, -0.5) * std::exp(x)); };
    const double numeric = -x0 * (psi(x0 + h) - psi(x0 - h)) / (2 * h);
    CHECK(numeric == doctest::Approx(eval_double(ladder(1)[0].f, x0)).epsilon(1e-8));
  }
}

TEST_CASE("ladder_continued_fraction") {
  const auto two = ladder_continued_fraction(2);
  CHECK(two.head == RatFun(make_rat(3, 2)));
  REQUIRE(two.terms.size() == 1);
  CHECK(two.terminal() == fn("1 - x"));
  CHECK(collapse(two) == fn("3/2 + x^2/(1 - x)"));

  const auto three = ladder_continued_fraction(3);
  CHECK(collapse(three) == fn("5/2 + x^2/(3 + x^2/(1 - x))"));
  CHECK(collapse(three) == ladder(3).back().f);
  CHECK(to_string(three) == "5/2 + x^2/(3 + x^2/(-x + 1))");

  for (Branch b : {Branch::minus, Branch::plus}) {
    const auto states = ladder(15, b);
    for (int depth = 1; depth <= 15; ++depth) {
      const auto cf = ladder_continued_fraction(depth, b);
      CHECK(collapse(cf) == states[static_cast<std::size_t>(depth - 1)].f);
      CHECK(collapse(cf)(BigRat(0)) == make_rat(2 * depth - 1, 2));
      for (const auto& level : cf.terms) CHECK(level.partial_numerator == fn("x^2"));
    }
  }
}

TEST_CASE("cf_eval") {
  const auto two = ladder_continued_fraction(2);
  CHECK(cf_eval(two, 0.5) == doctest::Approx(2.0).epsilon(1e-15));
  for (int depth = 1; depth <= 8; ++depth) {
    CHECK(cf_eval(ladder_continued_fraction(depth), 0.0) == doctest::Approx(depth - 0.5));
  }
  try {
    (void)cf_eval(two, 1.0);
    FAIL("expected a pole");
  } catch (const ContinuedFractionPole& e) {
    CHECK(e.level() == 1);
  }
  // Agreement with the exact collapse away from poles.
  for (int depth = 2; depth <= 12; ++depth) {
    const auto cf = ladder_continued_fraction(depth, Branch::plus);
    const RatFun exact = collapse(cf);
    for (double x0 : {0.25, 0.75, 1.5, 3.0}) {
      CHECK(cf_eval(cf, x0) == doctest::Approx(eval_double(exact, x0)).epsilon(1e-12));
    }
  }
}
