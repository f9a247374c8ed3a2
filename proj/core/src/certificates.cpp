#include "fex/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fex/error.hpp"
#include "fex/phase_grid.hpp"
#include "fex/summation.hpp"

namespace fex {

double khinchin_average(std::span<const Complex> a, std::size_t max_n) {
  if (a.empty()) throw Error(ErrorKind::length_mismatch, "coefficient vector must be nonempty");
  if (a.size() > max_n) {
    throw Error(ErrorKind::budget, "2^" + std::to_string(a.size()) +
                                       " sign patterns exceed the budget of n <= " +
                                       std::to_string(max_n));
  }
  // Each a_j is a one-point generator; the M = 2 phase grid is {+1, -1}.
  // Pinning eps_1 = +1 halves the work without changing the mean.
  return maximize_on_phase_grid(a, a.size(), 1, 2).mean;
}

KhinchinReport khinchin_check(std::span<const Complex> a, double tolerance, std::size_t max_n) {
  KhinchinReport report;
  report.n = a.size();
  report.a.assign(a.begin(), a.end());
  report.exact_average = khinchin_average(a, max_n);
  CompensatedSum energy;
  for (const auto& z : a) energy.add(std::norm(z));
  report.rhs = std::sqrt(energy.value() / 2.0);
  report.ratio = report.rhs > 0.0 ? report.exact_average / report.rhs : 1.0;
  report.passed = report.ratio >= 1.0 - tolerance;
  return report;
}

ChainReport chain_check(const ExtensionOperator& op, std::size_t resolution, double tolerance,
                        const EnumerationBudget& budget) {
  const auto n = op.size();
  const auto order = op.spec().order();
  const double root_n = std::sqrt(static_cast<double>(n));
  const double inv_root2 = 1.0 / std::sqrt(2.0);

  ChainReport report;
  report.n = n;
  report.norm_hi = norm_certified(op, resolution, budget).hi();
  report.lower_bound = std::sqrt(static_cast<double>(n) / 2.0);

  CompensatedSum square_fn;
  double cs_excess = -std::numeric_limits<double>::infinity();
  for (ElementIndex x = 0; x < order; ++x) {
    CompensatedSum energy;
    CompensatedSum mass;
    for (const auto& phi : op.generators()) {
      energy.add(std::norm(phi[x]));
      mass.add(std::abs(phi[x]));
    }
    const double l2 = std::sqrt(energy.value());
    square_fn.add(l2);
    cs_excess = std::max(cs_excess, mass.value() - root_n * l2);
  }
  report.square_function = inv_root2 * square_fn.value();
  report.cauchy_schwarz_excess = cs_excess;

  CompensatedSum images;
  report.min_image_norm = std::numeric_limits<double>::infinity();
  for (const auto& psi : op.images()) {
    const double v = a_norm(psi);
    images.add(v);
    report.min_image_norm = std::min(report.min_image_norm, v);
  }
  report.image_norm_sum = inv_root2 * images.value();

  report.square_function_margin = report.norm_hi - report.square_function;
  report.image_norm_margin = root_n * report.norm_hi - report.image_norm_sum;
  report.lower_bound_margin = report.norm_hi - report.lower_bound;

  report.passed = report.square_function_margin >= -tolerance &&
                  report.image_norm_margin >= -tolerance &&
                  report.lower_bound_margin >= -tolerance &&
                  report.cauchy_schwarz_excess <= 1e-12 &&
                  report.min_image_norm >= 1.0 - tolerance;
  return report;
}

}  // namespace fex
