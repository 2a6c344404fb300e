#pragma once

#include <optional>
#include <span>
#include <vector>

#include "darboux/diffop.hpp"

namespace darboux {

/// Half-integer order nu = n + 1/2.
struct HalfOrder {
  unsigned n = 0;

  double nu() const noexcept { return n + 0.5; }
};

/// K_(n+1/2)(x) = sqrt(pi/(2x)) e^(-x) sum_k (n+k)!/(k!(n-k)!) (2x)^(-k).
/// Requires x > 0.
double k_half(HalfOrder order, double x);

/// m-th derivative of K_(n+1/2), from K'_nu = -(K_(nu-1) + K_(nu+1))/2
/// and K_(-nu) = K_nu.
double k_half_derivative(HalfOrder order, unsigned m, double x);

/// Derivatives K, K', ..., K^(count-1) at x.
std::vector<double> k_half_jet(HalfOrder order, double x, unsigned count);

/// t-logarithmic derivative -x K'_nu(x) / K_nu(x).
double log_deriv_t_k(HalfOrder order, double x);

/// Applies op to a function known through its derivative jet at x0
/// (jet[i] = psi^(i)(x0)). Returns the jet of op(psi), which is shorter by
/// the order of op.
std::vector<double> apply_to_jet(const DiffOp& op, double x0, std::span<const double> jet);

struct BesselComparisonRow {
  int j;
  double x;
  std::optional<double> ladder_value;  // empty at a pole of f_j
  double bessel_value;
  std::optional<double> abs_err;
};

struct BesselComparison {
  std::vector<BesselComparisonRow> rows;
  double max_abs_err = 0.0;
};

/// Compares the plus-branch ladder f_j (j = 1..max_j) with
/// log_deriv_t_k(j - 1, x) over the grid. Rows at a pole of f_j are kept but
/// excluded from the maximum. Throws std::invalid_argument for x <= 0.
BesselComparison compare_ladder_to_bessel(int max_j, std::span<const double> grid);

}  // namespace darboux
