#include "darboux/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "darboux/error.hpp"
#include "darboux/riccati.hpp"

namespace darboux {

namespace {

void require_positive(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("x must be positive, got " + std::to_string(x));
}

// Index n' with K_(nu) = K_(n' + 1/2) for nu = index + 1/2, index possibly
// negative (K_(-nu) = K_nu).
unsigned reflect(long index) { return static_cast<unsigned>(index >= 0 ? index : -index - 1); }

double binomial(unsigned n, unsigned k) {
  double out = 1.0;
  for (unsigned i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

double k_half(HalfOrder order, double x) {
  require_positive(x);
  const unsigned n = order.n;
  // term_k = (n+k)!/(k!(n-k)!) (2x)^(-k)
  double term = 1.0;
  double sum = 1.0;
  for (unsigned k = 0; k < n; ++k) {
    term *= static_cast<double>(n + k + 1) * static_cast<double>(n - k) /
            (static_cast<double>(k + 1) * 2.0 * x);
    sum += term;
  }
  return std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) * sum;
}

double k_half_derivative(HalfOrder order, unsigned m, double x) {
  require_positive(x);
  // K^(m)_nu = (-1/2)^m sum_i C(m, i) K_(nu - m + 2i)
  double sum = 0.0;
  for (unsigned i = 0; i <= m; ++i) {
    const long index = static_cast<long>(order.n) - static_cast<long>(m) + 2 * static_cast<long>(i);
    sum += binomial(m, i) * k_half({reflect(index)}, x);
  }
  return std::pow(-0.5, static_cast<int>(m)) * sum;
}

std::vector<double> k_half_jet(HalfOrder order, double x, unsigned count) {
  std::vector<double> jet(count);
  for (unsigned m = 0; m < count; ++m) jet[m] = k_half_derivative(order, m, x);
  return jet;
}

double log_deriv_t_k(HalfOrder order, double x) {
  require_positive(x);
  const double below = k_half({reflect(static_cast<long>(order.n) - 1)}, x);
  const double above = k_half({order.n + 1}, x);
  const double derivative = -0.5 * (below + above);
  return -x * derivative / k_half(order, x);
}

std::vector<double> apply_to_jet(const DiffOp& op, double x0, std::span<const double> jet) {
  if (op.is_zero()) return std::vector<double>(jet.size(), 0.0);
  const auto n = static_cast<std::size_t>(op.order());
  if (jet.size() <= n) throw std::invalid_argument("jet too short for the operator order");
  const std::size_t out_len = jet.size() - n;
  // coefficient derivatives c_k^(l)(x0), l < out_len
  std::vector<std::vector<double>> cd(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    RatFun c = op.coeff(k);
    for (std::size_t l = 0; l < out_len; ++l) {
      cd[k].push_back(c.is_zero() ? 0.0 : eval_double(c, x0));
      c = derivative_x(c);
    }
  }
  // (L psi)^(m) = sum_k sum_l C(m,l) c_k^(l) psi^(k + m - l)
  std::vector<double> out(out_len, 0.0);
  for (std::size_t m = 0; m < out_len; ++m) {
    for (std::size_t k = 0; k <= n; ++k) {
      for (std::size_t l = 0; l <= m; ++l) {
        out[m] += binomial(static_cast<unsigned>(m), static_cast<unsigned>(l)) * cd[k][l] *
                  jet[k + m - l];
      }
    }
  }
  return out;
}

BesselComparison compare_ladder_to_bessel(int max_j, std::span<const double> grid) {
  if (max_j < 1) throw std::invalid_argument("max order must be >= 1");
  for (double x : grid) require_positive(x);
  BesselComparison report;
  for (const LadderState& s : ladder(max_j, Branch::plus)) {
    for (double x : grid) {
      BesselComparisonRow row{s.j, x, std::nullopt,
                              log_deriv_t_k({static_cast<unsigned>(s.j - 1)}, x), std::nullopt};
      try {
        row.ladder_value = eval_double(s.f, x);
        row.abs_err = std::abs(*row.ladder_value - row.bessel_value);
        report.max_abs_err = std::max(report.max_abs_err, *row.abs_err);
      } catch (const PoleError&) {
        // pole of f_j: kept as a flagged row
      }
      report.rows.push_back(row);
    }
  }
  return report;
}

}  // namespace darboux
