#include "darboux/diffop.hpp"

#include <stdexcept>

#include "darboux/error.hpp"

namespace darboux {

namespace {

BigRat binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return BigRat(out);
}

}  // namespace

DiffOp::DiffOp(std::vector<RatFun> by_power) : by_power_(std::move(by_power)) { trim(); }

void DiffOp::trim() {
  while (!by_power_.empty() && by_power_.back().is_zero()) by_power_.pop_back();
}

DiffOp DiffOp::multiply(const RatFun& f) { return DiffOp(std::vector<RatFun>{f}); }

DiffOp DiffOp::from_leading(const std::vector<RatFun>& leading_first) {
  return DiffOp(std::vector<RatFun>(leading_first.rbegin(), leading_first.rend()));
}

RatFun DiffOp::coeff(std::size_t k) const { return k < by_power_.size() ? by_power_[k] : RatFun(); }

RatFun DiffOp::a(std::size_t j) const {
  const int k = order() - static_cast<int>(j);
  return k < 0 ? RatFun() : by_power_[static_cast<std::size_t>(k)];
}

DiffOp DiffOp::operator-() const {
  DiffOp out = *this;
  for (auto& c : out.by_power_) c = -c;
  return out;
}

DiffOp& DiffOp::operator+=(const DiffOp& rhs) {
  if (by_power_.size() < rhs.by_power_.size()) by_power_.resize(rhs.by_power_.size());
  for (std::size_t k = 0; k < rhs.by_power_.size(); ++k) by_power_[k] += rhs.by_power_[k];
  trim();
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& rhs) { return *this += -rhs; }

DiffOp& DiffOp::operator*=(const RatFun& f) {
  for (auto& c : by_power_) c *= f;
  trim();
  return *this;
}

RatFun apply(const DiffOp& op, const RatFun& psi) {
  RatFun out;
  RatFun dk = psi;
  for (std::size_t k = 0; k < op.by_power().size(); ++k) {
    if (k > 0) dk = derivative_x(dk);
    if (!op.by_power()[k].is_zero()) out += op.by_power()[k] * dk;
  }
  return out;
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  if (a.is_zero() || b.is_zero()) return DiffOp();
  const auto na = static_cast<unsigned>(a.order());
  const auto nb = static_cast<unsigned>(b.order());
  std::vector<RatFun> out(na + nb + 1);
  // Derivatives of b's coefficients up to order na.
  std::vector<std::vector<RatFun>> db(nb + 1);
  for (unsigned k = 0; k <= nb; ++k) {
    db[k].push_back(b.by_power()[k]);
    for (unsigned l = 1; l <= na; ++l) db[k].push_back(derivative_x(db[k].back()));
  }
  for (unsigned i = 0; i <= na; ++i) {
    const RatFun& ai = a.by_power()[i];
    if (ai.is_zero()) continue;
    for (unsigned k = 0; k <= nb; ++k) {
      for (unsigned l = 0; l <= i; ++l) {
        if (db[k][l].is_zero()) continue;
        out[i - l + k] += ai * binomial(i, l) * db[k][l];
      }
    }
  }
  return DiffOp(std::move(out));
}

DiffOp first_order_factor(const RatFun& g) { return DiffOp({-g, RatFun(BigRat(1))}); }

DiffOp bessel_operator(const BigRat& beta) {
  return DiffOp({RatFun(-beta * beta) * RatFun::x_pow(-2), RatFun::x_pow(-1), RatFun(BigRat(1))});
}

RightDivision right_divide(const DiffOp& op, const RatFun& g) {
  if (op.order() < 1) throw std::invalid_argument("right division needs an operator of order >= 1");
  const DiffOp factor = first_order_factor(g);
  DiffOp rest = op;
  std::vector<RatFun> quotient(static_cast<std::size_t>(op.order()));
  while (rest.order() >= 1) {
    const auto k = static_cast<std::size_t>(rest.order());
    std::vector<RatFun> term(k);
    term[k - 1] = rest.by_power()[k];
    quotient[k - 1] += term[k - 1];
    rest -= compose(DiffOp(std::move(term)), factor);
  }
  return {DiffOp(std::move(quotient)), rest.coeff(0)};
}

DiffOp darboux_transform(const DiffOp& op, const RatFun& g) {
  auto [quotient, remainder] = right_divide(op, g);
  if (!remainder.is_zero()) throw std::domain_error("g is not a kernel logarithmic derivative");
  return compose(first_order_factor(g), quotient);
}

RatFun inverse_substitution(const DiffOp& quotient, const RatFun& psihat, const BigRat& lambda) {
  if (sgn(lambda) == 0) throw std::domain_error("inverse undefined at λ=0");
  return apply(quotient, psihat) / RatFun(lambda);
}

DiffOp gauge_conjugate(const DiffOp& op, const RatFun& w) {
  // sum_k c_k (D + w)^k
  const DiffOp shifted({w, RatFun(BigRat(1))});
  DiffOp power = DiffOp::identity();
  DiffOp out;
  for (std::size_t k = 0; k < op.by_power().size(); ++k) {
    if (k > 0) power = compose(power, shifted);
    out += op.by_power()[k] * power;
  }
  return out;
}

SchrodingerForm normalize_to_schrodinger(const DiffOp& op) {
  if (op.order() != 2) throw std::invalid_argument("Schrodinger normalization needs order 2");
  const RatFun p = op.a(1) / op.a(0);
  const RatFun r = op.a(2) / op.a(0);
  const RatFun w = -(p * RatFun(BigRat(1, 2)));
  const RatFun q = r - p * p * RatFun(BigRat(1, 4)) - derivative_x(p) * RatFun(BigRat(1, 2));
  return {q, w};
}

RatFun schrodinger_factor_q(const RatFun& g) {
  const DiffOp product = compose(first_order_factor(g), DiffOp({g, RatFun(BigRat(1))}));
  return product.coeff(0);
}

}  // namespace darboux
