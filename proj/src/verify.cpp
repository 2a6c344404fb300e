#include "darboux/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <random>
#include <sstream>
#include <stdexcept>

#include "darboux/bessel.hpp"
#include "darboux/chebyshev.hpp"
#include "darboux/diffop.hpp"
#include "darboux/euler.hpp"
#include "darboux/expr.hpp"
#include "darboux/riccati.hpp"

namespace darboux {

namespace {

std::string padded(long value, int width = 2) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%0*ld", width, value);
  return buf;
}

class Recorder {
 public:
  explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

  void check(std::string id, bool ok, std::string detail) {
    report_.cases.push_back({std::move(id), ok ? CaseStatus::pass : CaseStatus::fail, std::move(detail)});
  }

  void flag(std::string id, std::string detail) {
    report_.cases.push_back({std::move(id), CaseStatus::flagged, std::move(detail)});
  }

  // Runs body; an exception turns into a failed case.
  template <typename Body>
  void guarded(const std::string& id, Body&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(id, false, std::string("exception: ") + e.what());
    }
  }

  VerificationReport finish() {
    std::stable_sort(report_.cases.begin(), report_.cases.end(),
                     [](const auto& a, const auto& b) { return a.id < b.id; });
    return std::move(report_);
  }

 private:
  VerificationReport report_;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  BigRat rational() {
    BigRat r(integer(-9, 9), integer(1, 5));
    r.canonicalize();
    return r;
  }

  Poly poly(int max_degree) {
    std::vector<BigRat> c(static_cast<std::size_t>(integer(0, max_degree) + 1));
    for (auto& v : c) v = rational();
    return Poly(std::move(c));
  }

  // Nonzero rational function with degrees <= max_degree.
  RatFun ratfun(int max_degree) {
    while (true) {
      Poly num = poly(max_degree);
      Poly den = poly(max_degree);
      if (num.is_zero() || den.is_zero()) continue;
      return RatFun(std::move(num), std::move(den));
    }
  }

  EulerOp euler(long max_m, int max_degree) {
    while (true) {
      Poly k = poly(max_degree);
      if (!k.is_zero()) return {integer(-max_m, max_m), std::move(k)};
    }
  }

 private:
  std::mt19937_64 rng_;
};

std::string zero_or(const RatFun& r) { return r.is_zero() ? "0" : to_string(r); }

}  // namespace

std::string_view to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::pass:
      return "pass";
    case CaseStatus::fail:
      return "fail";
    case CaseStatus::flagged:
      return "flagged";
  }
  return "?";
}

bool VerificationReport::passed() const { return count(CaseStatus::fail) == 0; }

std::size_t VerificationReport::count(CaseStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [s](const auto& c) { return c.status == s; }));
}

VerificationReport verify_riccati(int max_n) {
  if (max_n < 1) throw std::invalid_argument("max_n must be >= 1");
  Recorder rec("riccati");

  for (Branch branch : {Branch::minus, Branch::plus}) {
    const std::string prefix = "ladder/" + std::string(to_string(branch)) + "/j=";
    const auto states = ladder(max_n, branch);
    for (const auto& s : states) {
      const RatFun residual = riccati_residual_t(s.f, s.beta);
      const bool beta_ok = s.beta == BigRat(2 * s.j - 1, 2);
      rec.check(prefix + padded(s.j), residual.is_zero() && beta_ok,
                "beta = " + to_string(s.beta) + ", residual = " + zero_or(residual));
    }
    // Collapse of the unrolled fraction against the ladder itself.
    const std::string cf_id = "cf-collapse/" + std::string(to_string(branch));
    rec.guarded(cf_id, [&] {
      int bad = 0;
      for (const auto& s : states) {
        if (collapse(ladder_continued_fraction(s.j, branch)) != s.f) ++bad;
      }
      rec.check(cf_id, bad == 0,
                std::to_string(states.size() - static_cast<std::size_t>(bad)) + "/" +
                    std::to_string(states.size()) + " depths collapse to f_j");
    });
  }

  if (max_n >= 2) {
    const RatFun printed_f2 = parse_function("3/2 + x^2/(1 - x)");
    const RatFun f2 = ladder(2).back().f;
    rec.check("printed-f2", f2 == printed_f2, "f_2 = " + to_string(f2));
  }

  rec.guarded("fixed-points", [&] {
    bool ok = true;
    std::string detail;
    for (const auto& fp : fixed_points()) {
      const auto image = raise_order(fp.f, fp.beta);
      ok = ok && image.f == fp.f && image.beta == BigRat(1, 2) &&
           riccati_residual_t(fp.f, fp.beta).is_zero() &&
           riccati_residual_t(fp.f, image.beta).is_zero();
      detail += "f = " + to_string(fp.f) + " at beta = -1/2 -> beta = " + to_string(image.beta) + "; ";
    }
    rec.check("fixed-points", ok, detail);
  });

  rec.guarded("step-roundtrip", [&] {
    Sampler sample(2024);
    int good = 0;
    constexpr int kSamples = 20;
    for (int i = 0; i < kSamples; ++i) {
      const RatFun f = sample.ratfun(4);
      const BigRat beta = sample.rational();
      if ((f + RatFun(beta)).is_zero()) continue;
      const auto up = raise_order(f, beta);
      const auto down = lower_order(up.f, up.beta);
      if (down.f == f && down.beta == beta) ++good;
    }
    rec.check("step-roundtrip", good == kSamples,
              std::to_string(good) + "/" + std::to_string(kSamples) + " exact round-trips");
  });

  {
    const RatFun mu = RatFun(Poly::monomial(BigRat(1), 2));
    rec.check("mu-law", derivative_t(mu) == RatFun(BigRat(-2)) * mu,
              "d/dt x^2 = " + to_string(derivative_t(mu)));
  }

  // The printed third and fourth rungs drop factors; compare against the
  // residual oracle and show the recurrence output.
  rec.guarded("printed-f3-f4", [&] {
    const auto states = ladder(4);
    const RatFun printed_f3 = parse_function("5/2 + x^2/(x^2 - 3*x + 3)");
    const RatFun printed_f4 = parse_function("7/2 + x^2/(6*x^2 - 15*x + 15)");
    const RatFun r3 = riccati_residual_t(printed_f3, BigRat(5, 2));
    const RatFun r4 = riccati_residual_t(printed_f4, BigRat(7, 2));
    const bool derived_ok = riccati_residual_t(states[2].f, states[2].beta).is_zero() &&
                            riccati_residual_t(states[3].f, states[3].beta).is_zero();
    const std::string detail =
        "printed f_3 residual " + zero_or(r3) + "; printed f_4 residual " + zero_or(r4) +
        "; derived f_3 = 5/2 + " + to_string(states[2].f - RatFun(BigRat(5, 2))) +
        "; derived f_4 = 7/2 + " + to_string(states[3].f - RatFun(BigRat(7, 2)));
    if (!derived_ok) {
      rec.check("printed-f3-f4", false, "derived rungs fail the residual: " + detail);
    } else if (r3.is_zero() && r4.is_zero()) {
      rec.check("printed-f3-f4", true, detail);
    } else {
      rec.flag("printed-f3-f4", detail);
    }
  });

  return rec.finish();
}

VerificationReport verify_chebyshev(int max_n) {
  if (max_n < 1) throw std::invalid_argument("max_n must be >= 1");
  Recorder rec("chebyshev");
  const auto n_max = static_cast<unsigned>(max_n);
  {
    std::vector<Poly> t;
    for (unsigned n = 0; n <= n_max + 1; ++n) t.push_back(chebyshev_t(n));
    int bad = 0;
    for (unsigned n = 1; n <= n_max; ++n) {
      const Poly r = t[n + 1] + t[n - 1] - Poly::monomial(BigRat(2), 1) * t[n];
      const bool shape = t[n].degree() == static_cast<int>(n) &&
                         t[n].leading() == BigRat(BigInt(1) << (n - 1));
      if (!r.is_zero() || !shape) ++bad;
    }
    rec.check("recurrence", bad == 0,
              "T_(n+1) + T_(n-1) - 2x T_n = 0 for n = 1.." + std::to_string(n_max) + ", " +
                  std::to_string(bad) + " failures");
  }

  for (unsigned n = 0; n <= n_max; ++n) {
    const Poly r = chebyshev_ode_residual(n);
    rec.check("ode/n=" + padded(n), r.is_zero(), "residual = " + to_string(r));
  }

  for (unsigned n = 1; n <= n_max; ++n) {
    const RatFun r = chebyshev_pair_residual(n);
    rec.check("pair/corrected_minus/n=" + padded(n), r.is_zero(), "residual = " + zero_or(r));
  }

  {
    const RatFun f1 = chebyshev_ratio(1, ChebyshevConvention::paper_plus);
    rec.check("paper_plus/f1", f1 == parse_function("x + 1/x"), "f_1 = " + to_string(f1));
  }

  rec.guarded("paper_plus/pair-identity", [&] {
    const RatFun r = chebyshev_pair_residual(1, ChebyshevConvention::paper_plus);
    const BigRat witness = r(BigRat(1, 2));
    const std::string detail = "(f_1 - x)(f_2 + x) + 1 = " + zero_or(r) +
                               ", equal to " + to_string(witness) +
                               " at x = 1/2; corrected f_n = T_(n-1)/T_n - x gives 0";
    if (r.is_zero()) {
      rec.check("paper_plus/pair-identity", true, detail);
    } else {
      rec.flag("paper_plus/pair-identity", detail);
    }
  });

  rec.guarded("cf-collapse", [&] {
    const unsigned top = std::min(n_max, 20U);
    unsigned bad = 0;
    for (unsigned n = 1; n <= top; ++n) {
      if (collapse(chebyshev_continued_fraction(n)) != chebyshev_ratio(n)) ++bad;
    }
    rec.check("cf-collapse", bad == 0,
              std::to_string(top - bad) + "/" + std::to_string(top) + " fractions collapse to f_n");
  });

  return rec.finish();
}

VerificationReport verify_darboux(int max_n) {
  if (max_n < 0) throw std::invalid_argument("max_n must be >= 0");
  Recorder rec("darboux");

  for (int k = 0; k <= max_n; ++k) {
    const std::string id = "bessel-shift/k=" + padded(k);
    rec.guarded(id, [&] {
      const BigRat beta = make_rat(k, 2);
      const DiffOp a = bessel_operator(beta);
      const RatFun g = RatFun(beta) * RatFun::x_pow(-1);
      const DiffOp hat = darboux_transform(a, g);
      const DiffOp factor = first_order_factor(g);
      const bool shifted = hat == bessel_operator(beta + 1);
      const bool intertwines = compose(hat, factor) == compose(factor, a);
      rec.check(id, shifted && intertwines,
                "beta = " + to_string(beta) + ": " + to_string(hat) +
                    (intertwines ? ", intertwining exact" : ", intertwining FAILED"));
    });
  }

  rec.guarded("kernel-criterion", [&] {
    Sampler sample(7);
    int good = 0;
    constexpr int kSamples = 20;
    for (int i = 0; i < kSamples; ++i) {
      // D^2 + a1 D + a2 with x^s in the kernel by construction.
      const BigRat s(sample.integer(-4, 4));
      const RatFun a1 = sample.ratfun(2);
      const RatFun xs_inv = RatFun::x_pow(-1);
      const RatFun a2 = -(RatFun(s * (s - 1)) * xs_inv * xs_inv + a1 * RatFun(s) * xs_inv);
      const DiffOp a({a2, a1, RatFun(BigRat(1))});
      const RatFun g = RatFun(s) * xs_inv;
      const bool in_kernel = right_divide(a, g).remainder.is_zero();
      const DiffOp perturbed = a + DiffOp::multiply(RatFun(BigRat(1)));
      const bool rejected = !right_divide(perturbed, g).remainder.is_zero();
      if (in_kernel && rejected) ++good;
    }
    rec.check("kernel-criterion", good == kSamples,
              std::to_string(good) + "/" + std::to_string(kSamples) +
                  " operators divisible iff x^s is in the kernel");
  });

  rec.guarded("inverse-substitution/symbolic", [&] {
    Sampler sample(11);
    int good = 0;
    constexpr int kSamples = 10;
    for (int i = 0; i < kSamples; ++i) {
      const BigRat beta = make_rat(sample.integer(0, 8), 2);
      const DiffOp a = bessel_operator(beta);
      const RatFun g = RatFun(beta) * RatFun::x_pow(-1);
      const auto [q, r] = right_divide(a, g);
      const RatFun psi = sample.ratfun(3);
      const RatFun psihat = apply(first_order_factor(g), psi);
      if (r.is_zero() && apply(q, psihat) == apply(a, psi)) ++good;
    }
    rec.check("inverse-substitution/symbolic", good == kSamples,
              std::to_string(good) + "/" + std::to_string(kSamples) + " exact Q((D-g) psi) = A psi");
  });

  rec.guarded("inverse-substitution/k-half", [&] {
    const BigRat beta(1, 2);
    const RatFun g = RatFun(beta) * RatFun::x_pow(-1);
    const DiffOp q = right_divide(bessel_operator(beta), g).quotient;
    double worst = 0.0;
    for (double x0 : {1.0, 2.0, 3.0}) {
      const auto jet = k_half_jet({0}, x0, 3);
      const auto psihat = apply_to_jet(first_order_factor(g), x0, jet);
      const auto back = apply_to_jet(q, x0, psihat);
      worst = std::max(worst, std::abs(back[0] - jet[0]));
    }
    rec.check("inverse-substitution/k-half", worst <= 1e-10,
              "max |Q((D-g) K_1/2) - K_1/2| = " + std::to_string(worst) + " on x = 1, 2, 3");
  });

  rec.guarded("schrodinger", [&] {
    bool ok = true;
    for (int k = 0; k <= 6; ++k) {
      const BigRat beta = make_rat(k, 2);
      const DiffOp a = bessel_operator(beta);
      const auto form = normalize_to_schrodinger(a);
      const RatFun expected_q = RatFun(BigRat(1, 4) - beta * beta) * RatFun::x_pow(-2);
      const DiffOp conj = gauge_conjugate(a, form.gauge_logderiv);
      ok = ok && form.q == expected_q && form.gauge_logderiv == RatFun(BigRat(-1, 2)) * RatFun::x_pow(-1) &&
           conj.coeff(1).is_zero() && conj.coeff(0) == form.q;
    }
    const RatFun g = RatFun::x_pow(-1);
    ok = ok && schrodinger_factor_q(g) == derivative_x(g) - g * g;
    rec.check("schrodinger", ok, "Bessel gauge w = -1/(2x), q = (1/4 - beta^2)/x^2; (D-g)(D+g) = D^2 + g' - g^2");
  });

  return rec.finish();
}

VerificationReport verify_euler(int max_n) {
  if (max_n < 1) throw std::invalid_argument("max_n must be >= 1");
  Recorder rec("euler");

  rec.guarded("functoriality", [&] {
    Sampler sample(42);
    int good = 0;
    for (int i = 0; i < max_n; ++i) {
      const EulerOp a = sample.euler(3, 4);
      const EulerOp b = sample.euler(3, 4);
      if (to_diffop(compose(a, b)) == compose(to_diffop(a), to_diffop(b))) ++good;
    }
    rec.check("functoriality", good == max_n,
              std::to_string(good) + "/" + std::to_string(max_n) + " random pairs");
  });

  rec.guarded("roundtrip", [&] {
    Sampler sample(43);
    int good = 0;
    for (int i = 0; i < max_n; ++i) {
      const EulerOp a = sample.euler(3, 4);
      if (euler_from_diffop(to_diffop(a)) == a) ++good;
    }
    rec.check("roundtrip", good == max_n,
              std::to_string(good) + "/" + std::to_string(max_n) + " euler -> x-form -> euler");
  });

  rec.guarded("bessel-factorization", [&] {
    bool ok = true;
    for (int k = 0; k <= 8; ++k) {
      const BigRat beta = make_rat(k, 2);
      const EulerOp left{1, Poly{-beta - 1, BigRat(1)}};
      const EulerOp right{1, Poly{beta, BigRat(1)}};
      const EulerOp product = compose(left, right);
      const EulerOp expected{2, Poly{-beta * beta, BigRat(0), BigRat(1)}};
      ok = ok && product == expected && to_diffop(product) == bessel_operator(beta) &&
           euler_from_diffop(bessel_operator(beta)) == expected;
    }
    rec.check("bessel-factorization", ok, "exp(t)(D_t - beta - 1) ∘ exp(t)(D_t + beta) = exp(2t)(D_t^2 - beta^2)");
  });

  {
    const DiffOp dx = DiffOp::d();
    const EulerOp e1 = euler_from_diffop(dx);
    const EulerOp e2 = euler_from_diffop(compose(dx, dx));
    const bool ok = e1 == EulerOp{1, Poly{BigRat(0), BigRat(-1)}} &&
                    e2 == EulerOp{2, Poly{BigRat(0), BigRat(1), BigRat(1)}} &&
                    compose(e1, e1) == e2;
    rec.check("change-of-variable", ok, "D_x = " + to_string(e1) + ", D_x^2 = " + to_string(e2));
  }

  {
    const EulerOp op{2, Poly{BigRat(-1, 4), BigRat(0), BigRat(1)}};
    const auto image = apply_exp(op, BigRat(3));
    rec.check("apply-exp", image.coefficient == BigRat(35, 4) && image.exponent == BigRat(5),
              "exp(2t)(D^2 - 1/4) exp(3t) = " + to_string(image.coefficient) + " exp(" +
                  to_string(image.exponent) + "t)");
  }

  return rec.finish();
}

VerificationReport verify_all(std::optional<int> max_n) {
  auto launch = [](auto fn, int n) { return std::async(std::launch::async, fn, n); };
  auto r = launch(verify_riccati, max_n.value_or(25));
  auto c = launch(verify_chebyshev, max_n.value_or(50));
  auto d = launch(verify_darboux, max_n.value_or(20));
  auto e = launch(verify_euler, max_n.value_or(100));
  VerificationReport all{"all", {}};
  for (auto* part : {&r, &c, &d, &e}) {
    VerificationReport sub = part->get();
    for (auto& item : sub.cases) all.cases.push_back({sub.suite + "/" + item.id, item.status, std::move(item.detail)});
  }
  std::stable_sort(all.cases.begin(), all.cases.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return all;
}

VerificationReport run_suite(std::string_view suite, std::optional<int> max_n) {
  if (suite == "riccati") return verify_riccati(max_n.value_or(25));
  if (suite == "chebyshev") return verify_chebyshev(max_n.value_or(50));
  if (suite == "darboux") return verify_darboux(max_n.value_or(20));
  if (suite == "euler") return verify_euler(max_n.value_or(100));
  if (suite == "all") return verify_all(max_n);
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

std::string format_text(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& c : report.cases) {
    out << "[" << to_string(c.status) << "] " << report.suite << "/" << c.id << ": " << c.detail << "\n";
  }
  out << report.suite << ": " << (report.passed() ? "PASS" : "FAIL") << " (" << report.count(CaseStatus::pass)
      << " passed, " << report.count(CaseStatus::fail) << " failed, " << report.count(CaseStatus::flagged)
      << " flagged)\n";
  return out.str();
}

nlohmann::json to_json_value(const VerificationReport& report) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : report.cases) {
    cases.push_back({{"id", c.id}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}});
  }
  return {{"suite", report.suite}, {"overall", report.passed() ? "pass" : "fail"}, {"cases", std::move(cases)}};
}

}  // namespace darboux
