#include "fex/extension.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fex/error.hpp"
#include "fex/phase_grid.hpp"
#include "fex/summation.hpp"

namespace fex {

namespace {

std::vector<GroupFunction> synthesize_all(const std::vector<GroupFunction>& generators) {
  std::vector<GroupFunction> images;
  images.reserve(generators.size());
  for (const auto& phi : generators) images.push_back(synthesize(phi));
  return images;
}

void check_resolution(std::size_t resolution) {
  if (resolution < 4) {
    throw Error(ErrorKind::resolution,
                "phase grid resolution must be >= 4, got " + std::to_string(resolution));
  }
}

}  // namespace

ExtensionOperator::ExtensionOperator(GroupSpec spec, PointSet points,
                                     std::vector<GroupFunction> generators, double tolerance)
    : spec_(std::move(spec)), points_(std::move(points)), generators_(std::move(generators)) {
  for (const auto& phi : generators_) {
    if (phi.side() != Side::time) {
      throw Error(ErrorKind::side_mismatch, "operator generators must be time-side functions");
    }
    if (!(phi.spec() == spec_)) {
      throw Error(ErrorKind::invalid_operator, "generator defined on a different group");
    }
  }
  images_ = synthesize_all(generators_);
  validate(tolerance);
}

ExtensionOperator::ExtensionOperator(GroupSpec spec, PointSet points,
                                     std::vector<GroupFunction> generators,
                                     std::vector<GroupFunction> images, double tolerance)
    : spec_(std::move(spec)),
      points_(std::move(points)),
      generators_(std::move(generators)),
      images_(std::move(images)) {
  for (const auto& phi : generators_) {
    if (phi.side() != Side::time || !(phi.spec() == spec_)) {
      throw Error(ErrorKind::invalid_operator, "generators must be time-side functions on the group");
    }
  }
  for (const auto& psi : images_) {
    if (psi.side() != Side::frequency || !(psi.spec() == spec_)) {
      throw Error(ErrorKind::invalid_operator, "images must be frequency-side functions on the group");
    }
  }
  validate(tolerance);
}

void ExtensionOperator::validate(double tolerance) const {
  if (generators_.size() != points_.size() || images_.size() != points_.size()) {
    throw Error(ErrorKind::length_mismatch, "operator needs exactly one generator per point");
  }
  const double err = interpolation_error();
  if (!(err <= tolerance)) {
    throw Error(ErrorKind::invalid_operator,
                "interpolation conditions violated by " + std::to_string(err));
  }
}

double ExtensionOperator::interpolation_error() const noexcept {
  double err = 0.0;
  for (std::size_t j = 0; j < size(); ++j) {
    for (std::size_t i = 0; i < size(); ++i) {
      const Complex target = (i == j) ? 1.0 : 0.0;
      err = std::max(err, std::abs(images_[j][points_[i]] - target));
    }
  }
  return err;
}

std::vector<Complex> ExtensionOperator::generator_matrix() const {
  std::vector<Complex> out;
  out.reserve(size() * spec_.order());
  for (const auto& phi : generators_) out.insert(out.end(), phi.values().begin(), phi.values().end());
  return out;
}

ExtensionOperator canonical_operator(const GroupSpec& spec, const PointSet& points,
                                     const PeakFunction& peak) {
  if (!(peak.spec == spec)) {
    throw Error(ErrorKind::invalid_peak, "peak function built for a different group");
  }
  const auto forbidden = difference_set(spec, points);
  const auto validation = validate_peak(peak, forbidden);
  if (!validation.all_passed()) {
    std::string failed;
    for (const auto& c : validation.checks) {
      if (!c.passed) failed += (failed.empty() ? "" : ", ") + c.name;
    }
    throw Error(ErrorKind::invalid_peak, "peak function fails: " + failed);
  }

  std::vector<GroupFunction> generators;
  std::vector<GroupFunction> images;
  for (auto t : points.points()) {
    auto phi = GroupFunction::zeros(spec, Side::time);
    auto psi = GroupFunction::zeros(spec, Side::frequency);
    for (ElementIndex x = 0; x < spec.order(); ++x) {
      phi[x] = spec.pairing(x, t) * peak.lambda[x];
      psi[x] = peak.delta[spec.sub(x, t)];
    }
    generators.push_back(std::move(phi));
    images.push_back(std::move(psi));
  }
  return ExtensionOperator(spec, points, std::move(generators), std::move(images));
}

GroupFunction apply(const ExtensionOperator& op, std::span<const Complex> f) {
  if (f.size() != op.size()) {
    throw Error(ErrorKind::length_mismatch, "expected " + std::to_string(op.size()) +
                                                " values on K, got " + std::to_string(f.size()));
  }
  const auto order = op.spec().order();
  std::vector<CompensatedComplexSum> acc(order);
  for (std::size_t j = 0; j < op.size(); ++j) {
    if (f[j] == Complex{}) continue;
    const auto& psi = op.images()[j];
    for (ElementIndex t = 0; t < order; ++t) acc[t].add(f[j] * psi[t]);
  }
  std::vector<Complex> values(order);
  for (ElementIndex t = 0; t < order; ++t) values[t] = acc[t].value();
  return GroupFunction(op.spec(), Side::frequency, std::move(values));
}

double image_norm(const ExtensionOperator& op, std::span<const Complex> f) {
  if (f.size() != op.size()) {
    throw Error(ErrorKind::length_mismatch, "expected " + std::to_string(op.size()) +
                                                " values on K, got " + std::to_string(f.size()));
  }
  const auto order = op.spec().order();
  std::vector<Complex> sum(order);
  for (std::size_t j = 0; j < op.size(); ++j) {
    const auto& phi = op.generators()[j];
    for (ElementIndex x = 0; x < order; ++x) sum[x] += f[j] * phi[x];
  }
  return l1_norm(sum);
}

double certificate_slack(std::span<const double> image_norms, std::size_t resolution) {
  CompensatedSum free_mass;
  for (std::size_t j = 1; j < image_norms.size(); ++j) free_mass.add(image_norms[j]);
  return 2.0 * std::sin(std::numbers::pi / (2.0 * static_cast<double>(resolution))) *
         free_mass.value();
}

NormCertificate norm_certified(const ExtensionOperator& op, std::size_t resolution,
                               const EnumerationBudget& budget) {
  check_resolution(resolution);
  const auto points = grid_size(resolution, op.size());
  if (points > budget.max_grid_points) {
    throw Error(ErrorKind::budget, "phase grid " + std::to_string(resolution) + "^" +
                                       std::to_string(op.size()) + " exceeds the budget of " +
                                       std::to_string(budget.max_grid_points) + " points");
  }
  const auto matrix = op.generator_matrix();
  auto best = maximize_on_phase_grid(matrix, op.size(), op.spec().order(), resolution);

  std::vector<double> norms;
  norms.reserve(op.size());
  for (const auto& psi : op.images()) norms.push_back(a_norm(psi));

  NormCertificate cert;
  cert.grid_max = best.value;
  cert.slack = certificate_slack(norms, resolution);
  cert.grid_resolution = resolution;
  cert.argmax = std::move(best.argmax);
  return cert;
}

SignStatistics sign_statistics(const ExtensionOperator& op, const EnumerationBudget& budget) {
  if (op.size() > budget.max_sign_points) {
    throw Error(ErrorKind::budget, "2^" + std::to_string(op.size()) +
                                       " sign patterns exceed the budget of n <= " +
                                       std::to_string(budget.max_sign_points));
  }
  // Patterns come in +-eps pairs of equal norm, so the M = 2 grid with the
  // first sign pinned covers every value with the right multiplicity.
  const auto matrix = op.generator_matrix();
  const auto grid = maximize_on_phase_grid(matrix, op.size(), op.spec().order(), 2);
  return {grid.value, grid.mean};
}

double sign_max(const ExtensionOperator& op, const EnumerationBudget& budget) {
  return sign_statistics(op, budget).max;
}

double rademacher_average(const ExtensionOperator& op, const EnumerationBudget& budget) {
  return sign_statistics(op, budget).average;
}

}  // namespace fex
