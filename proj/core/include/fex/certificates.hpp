#pragma once

#include <span>
#include <vector>

#include "fex/extension.hpp"
#include "fex/spectral.hpp"

namespace fex {

/// Exact mean of |sum_j eps_j a_j| over all 2^n sign patterns.
/// Throws Error(budget) for n > max_n and Error(length_mismatch) for n == 0.
double khinchin_average(std::span<const Complex> a, std::size_t max_n = 20);

struct KhinchinReport {
  std::size_t n = 0;
  std::vector<Complex> a;
  double exact_average = 0.0;
  double rhs = 0.0;    // ||a||_2 / sqrt(2)
  double ratio = 1.0;  // exact_average / rhs; 1 when a == 0
  bool passed = true;
};

/// Compares the exact sign average against ||a||_2 / sqrt(2); a violation
/// (ratio < 1 - tolerance) is reported, not thrown.
KhinchinReport khinchin_check(std::span<const Complex> a, double tolerance = 1e-12,
                              std::size_t max_n = 20);

struct ChainReport {
  std::size_t n = 0;
  double norm_hi = 0.0;       // certified upper bound on the operator norm
  double square_function = 0.0;  // 2^-1/2 sum_x (sum_j |phi_j(x)|^2)^1/2
  double image_norm_sum = 0.0;   // 2^-1/2 sum_j ||psi_j||_A
  double lower_bound = 0.0;      // sqrt(n / 2)

  double square_function_margin = 0.0;  // norm_hi - square_function
  double image_norm_margin = 0.0;       // sqrt(n) norm_hi - image_norm_sum
  double lower_bound_margin = 0.0;      // norm_hi - lower_bound

  /// max_x (sum_j |phi_j(x)| - sqrt(n) (sum_j |phi_j(x)|^2)^1/2), should be <= 0.
  double cauchy_schwarz_excess = 0.0;
  /// min_j ||psi_j||_A, should be >= 1.
  double min_image_norm = 0.0;

  bool passed = true;
};

/// Evaluates the lower-bound proof chain for a concrete operator against its
/// certified norm at resolution M.
ChainReport chain_check(const ExtensionOperator& op, std::size_t resolution,
                        double tolerance = 1e-9, const EnumerationBudget& budget = {});

}  // namespace fex
