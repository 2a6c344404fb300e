#pragma once

#include <string_view>
#include <vector>

#include "darboux/bigrat.hpp"
#include "darboux/continued_fraction.hpp"
#include "darboux/diffop.hpp"
#include "darboux/ratfun.hpp"

namespace darboux {

/// a0 (f' + f^2) + a1 f + a2 = lambda, the equation satisfied by the
/// logarithmic derivative f = psi'/psi of a solution of A psi = lambda psi.
struct RiccatiForm {
  RatFun a0;
  RatFun a1;
  RatFun a2;
  BigRat lambda;
};

/// Packages (a0, a1, a2, lambda) for a second order operator.
RiccatiForm riccati_from_operator(const DiffOp& op, const BigRat& lambda);

/// a0 (f_x + f^2) + a1 f + a2 - lambda; zero iff f solves the form.
RatFun riccati_residual_x(const RiccatiForm& form, const RatFun& f);

/// f_t + f^2 - beta^2 - lambda x^2 with f_t = -x f_x. Zero iff f is the
/// t-logarithmic derivative of a solution of the order-beta Bessel
/// equation with eigenvalue lambda.
RatFun riccati_residual_t(const RatFun& f, const BigRat& beta, const BigRat& lambda = BigRat(1));

/// A t-form Riccati solution at order beta.
struct RiccatiSolution {
  RatFun f;
  BigRat beta;

  friend bool operator==(const RiccatiSolution&, const RiccatiSolution&) = default;
};

/// Raises the order by one: fhat = (beta + 1) + lambda x^2 / (f + beta).
/// Solutions at beta map to solutions at beta + 1. Throws
/// std::domain_error when f + beta vanishes identically.
RiccatiSolution raise_order(const RatFun& f, const BigRat& beta, const BigRat& lambda = BigRat(1));

/// Inverse of raise_order, from (f + beta)(fhat - betahat) = lambda x^2.
RiccatiSolution lower_order(const RatFun& fhat, const BigRat& betahat,
                            const BigRat& lambda = BigRat(1));

/// Solutions left unchanged by raise_order up to the order relabeling
/// beta = -1/2 -> 1/2: f = 1/2 ± sqrt(lambda) x. Requires lambda > 0 with
/// a rational square root.
std::vector<RiccatiSolution> fixed_points(const BigRat& lambda = BigRat(1));

enum class Branch { minus, plus };

std::string_view to_string(Branch b);
/// Throws std::invalid_argument for anything but "minus"/"plus".
Branch parse_branch(std::string_view text);

struct LadderState {
  int j;
  BigRat beta;  // j - 1/2
  RatFun f;
  Branch branch;
};

/// States j = 1..depth starting from f_1 = 1/2 ∓ x at beta_1 = 1/2, each
/// obtained from the previous with raise_order at lambda = 1.
std::vector<LadderState> ladder(int depth, Branch branch = Branch::minus);

/// The ladder's last state unrolled:
///   beta_J + x^2/(2 beta_(J-1) + x^2/(... + x^2/(f_1 + beta_1))).
ContinuedFraction ladder_continued_fraction(int depth, Branch branch = Branch::minus);

}  // namespace darboux
