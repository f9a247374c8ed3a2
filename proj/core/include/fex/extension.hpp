#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fex/group.hpp"
#include "fex/peak.hpp"
#include "fex/spectral.hpp"

namespace fex {

/// Limits on exhaustive enumeration.
struct EnumerationBudget {
  std::uint64_t max_grid_points = 10'000'000;  // M^n
  std::size_t max_sign_points = 20;            // n for 2^n sign patterns
};

/// Linear extension operator from functions on K to A(Gamma), given by its
/// time-side generators phi_j and their transforms psi_j = synthesize(phi_j).
/// psi_j interpolates the j-th point indicator: psi_j(t_i) = delta_ij.
class ExtensionOperator {
 public:
  /// psi_j is computed by synthesize. Throws Error(invalid_operator) when the
  /// interpolation conditions fail by more than `tolerance`.
  ExtensionOperator(GroupSpec spec, PointSet points, std::vector<GroupFunction> generators,
                    double tolerance = 1e-9);

  /// Both sides given explicitly (e.g. exact autocorrelation images).
  ExtensionOperator(GroupSpec spec, PointSet points, std::vector<GroupFunction> generators,
                    std::vector<GroupFunction> images, double tolerance = 1e-9);

  const GroupSpec& spec() const noexcept { return spec_; }
  const PointSet& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<GroupFunction>& generators() const noexcept { return generators_; }
  const std::vector<GroupFunction>& images() const noexcept { return images_; }

  /// Generators as one row-major n x |G| block.
  std::vector<Complex> generator_matrix() const;

  /// max_{i,j} |psi_j(t_i) - delta_ij|.
  double interpolation_error() const noexcept;

 private:
  void validate(double tolerance) const;

  GroupSpec spec_;
  PointSet points_;
  std::vector<GroupFunction> generators_;
  std::vector<GroupFunction> images_;
};

/// psi_j(t) = delta(t - t_j), phi_j(x) = (x, t_j) lambda(x).
/// Throws Error(invalid_peak) if the peak does not vanish on (K - K) \ {0}
/// or fails any peak property.
ExtensionOperator canonical_operator(const GroupSpec& spec, const PointSet& points,
                                     const PeakFunction& peak);

/// sum_j f_j psi_j. Throws Error(length_mismatch) unless f has n entries.
GroupFunction apply(const ExtensionOperator& op, std::span<const Complex> f);

/// ||apply(op, f)||_A evaluated on the time side as ||sum_j f_j phi_j||_1.
double image_norm(const ExtensionOperator& op, std::span<const Complex> f);

/// Certified enclosure of the operator norm.
///
/// The norm is a sup over unimodular f (the extreme points of the l^inf
/// ball). grid_max is attained on the M-point phase grid with f_1 pinned to 1;
/// any unimodular f is within 2 sin(pi / 2M) per free coordinate of a grid
/// point, so norm <= grid_max + slack.
struct NormCertificate {
  double grid_max = 0.0;
  double slack = 0.0;
  std::size_t grid_resolution = 0;
  std::vector<std::size_t> argmax;  // phase indices of a maximizing grid point

  double lo() const noexcept { return grid_max; }
  double hi() const noexcept { return grid_max + slack; }
};

/// 2 sin(pi / 2M) * sum_{j >= 2} ||psi_j||_A.
double certificate_slack(std::span<const double> image_norms, std::size_t resolution);

/// Throws Error(resolution) for M < 4 and Error(budget) when M^n exceeds the
/// enumeration budget.
NormCertificate norm_certified(const ExtensionOperator& op, std::size_t resolution,
                               const EnumerationBudget& budget = {});

struct SignStatistics {
  double max = 0.0;      // max over eps in {+-1}^n of ||apply(op, eps)||_A
  double average = 0.0;  // mean over all 2^n patterns
};

/// Throws Error(budget) if n exceeds budget.max_sign_points.
SignStatistics sign_statistics(const ExtensionOperator& op, const EnumerationBudget& budget = {});
double sign_max(const ExtensionOperator& op, const EnumerationBudget& budget = {});
double rademacher_average(const ExtensionOperator& op, const EnumerationBudget& budget = {});

}  // namespace fex
