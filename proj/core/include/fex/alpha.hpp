#pragma once

#include <cstdint>
#include <vector>

#include "fex/extension.hpp"
#include "fex/group.hpp"
#include "fex/peak.hpp"
#include "fex/spectral.hpp"

namespace fex {

struct TheoremBounds {
  double lower = 0.0;  // sqrt(n / 2)
  double upper = 0.0;  // sqrt(n)
};

/// Bounds on the best extension-operator norm for an n-point set.
/// Throws Error(invalid_element) for n == 0.
TheoremBounds theorem_bounds(std::size_t n);

/// Orthogonal projection of each phi_j onto {phi : phi^(t_i) = delta_ij}.
/// The rows c_i(g) = (-g, t_i) are orthogonal with squared norm |G|, so
/// phi_j <- phi_j - |G|^-1 sum_i conj(c_i) (<c_i, phi_j> - delta_ij).
std::vector<GroupFunction> project_constraints(const GroupSpec& spec, const PointSet& points,
                                               std::vector<GroupFunction> generators);

/// A feasible operator: seeded random generators, then projected.
ExtensionOperator random_feasible_operator(const GroupSpec& spec, const PointSet& points,
                                           std::uint64_t seed);

struct AlphaOptions {
  std::size_t resolution = 32;
  std::size_t budget = 2000;  // total descent iterations across all starts
  std::uint64_t seed = 0;
  std::size_t restarts = 3;   // perturbed starts in addition to the canonical one
  double perturbation = 0.1;  // relative noise scale of perturbed starts
  double step_scale = 0.1;    // first step removes about this fraction of the objective
  EnumerationBudget limits{};
};

struct AlphaReport {
  std::size_t n = 0;
  double theorem_lower = 0.0;
  double theorem_upper = 0.0;
  NormCertificate canonical;
  NormCertificate optimized;
  std::size_t iterations = 0;
  /// Best certified upper bound seen so far, one entry per evaluated iterate.
  std::vector<double> trace;
  ExtensionOperator best_operator;
};

/// Projected-subgradient descent on max_{f in phase grid} ||sum_j f_j phi_j||_1
/// over feasible generators, starting from the canonical operator. The best
/// iterate (by certified upper bound) is returned; it is never worse than the
/// canonical start.
AlphaReport optimize_alpha(const GroupSpec& spec, const PointSet& points, const PeakFunction& peak,
                           const AlphaOptions& options = {});

}  // namespace fex
