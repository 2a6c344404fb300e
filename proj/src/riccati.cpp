#include "darboux/riccati.hpp"

#include <stdexcept>
#include <string>

namespace darboux {

namespace {

RatFun mu(const BigRat& lambda) { return RatFun(Poly::monomial(lambda, 2)); }

RatFun start_of(Branch b) {
  const BigRat s = b == Branch::minus ? BigRat(-1) : BigRat(1);
  return RatFun(Poly{BigRat(1, 2), s});
}

}  // namespace

RiccatiForm riccati_from_operator(const DiffOp& op, const BigRat& lambda) {
  if (op.order() != 2) throw std::invalid_argument("Riccati form needs a second order operator");
  return {op.a(0), op.a(1), op.a(2), lambda};
}

RatFun riccati_residual_x(const RiccatiForm& form, const RatFun& f) {
  return form.a0 * (derivative_x(f) + f * f) + form.a1 * f + form.a2 - RatFun(form.lambda);
}

RatFun riccati_residual_t(const RatFun& f, const BigRat& beta, const BigRat& lambda) {
  return derivative_t(f) + f * f - RatFun(beta * beta) - mu(lambda);
}

RiccatiSolution raise_order(const RatFun& f, const BigRat& beta, const BigRat& lambda) {
  const RatFun shifted = f + RatFun(beta);
  if (shifted.is_zero()) throw std::domain_error("degenerate step: f + β vanishes identically");
  const BigRat next = beta + 1;
  return {RatFun(next) + mu(lambda) / shifted, next};
}

RiccatiSolution lower_order(const RatFun& fhat, const BigRat& betahat, const BigRat& lambda) {
  const RatFun shifted = fhat - RatFun(betahat);
  if (shifted.is_zero()) throw std::domain_error("degenerate step: f̂ − β̂ vanishes identically");
  const BigRat prev = betahat - 1;
  return {mu(lambda) / shifted - RatFun(prev), prev};
}

std::vector<RiccatiSolution> fixed_points(const BigRat& lambda) {
  if (sgn(lambda) <= 0) throw std::invalid_argument("fixed points need lambda > 0");
  const auto root = rational_sqrt(lambda);
  if (!root) {
    throw std::domain_error("lambda = " + lambda.get_str() + " has no rational square root");
  }
  const BigRat half(1, 2);
  return {{RatFun(Poly{half, *root}), -half}, {RatFun(Poly{half, BigRat(-*root)}), -half}};
}

std::string_view to_string(Branch b) { return b == Branch::minus ? "minus" : "plus"; }

Branch parse_branch(std::string_view text) {
  if (text == "minus") return Branch::minus;
  if (text == "plus") return Branch::plus;
  throw std::invalid_argument("unknown branch '" + std::string(text) + "'");
}

std::vector<LadderState> ladder(int depth, Branch branch) {
  if (depth < 1) throw std::invalid_argument("ladder depth must be >= 1");
  std::vector<LadderState> states;
  states.reserve(static_cast<std::size_t>(depth));
  states.push_back({1, BigRat(1, 2), start_of(branch), branch});
  for (int j = 2; j <= depth; ++j) {
    const LadderState& prev = states.back();
    auto [f, beta] = raise_order(prev.f, prev.beta);
    states.push_back({j, std::move(beta), std::move(f), branch});
  }
  return states;
}

ContinuedFraction ladder_continued_fraction(int depth, Branch branch) {
  if (depth < 1) throw std::invalid_argument("continued fraction depth must be >= 1");
  const RatFun f1 = start_of(branch);
  if (depth == 1) return {f1, {}};
  const RatFun x2 = RatFun(Poly::monomial(BigRat(1), 2));
  ContinuedFraction cf{RatFun(BigRat(depth) - BigRat(1, 2)), {}};
  // Intermediate levels carry 2 beta_j = 2j - 1 for j = depth-1 .. 2.
  for (int j = depth - 1; j >= 2; --j) cf.terms.push_back({x2, RatFun(BigRat(2 * j - 1))});
  cf.terms.push_back({x2, f1 + RatFun(BigRat(1, 2))});
  return cf;
}

}  // namespace darboux
