#include "fex/peak.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fex/error.hpp"
#include "fex/summation.hpp"

namespace fex {

std::vector<ElementIndex> greedy_base_set(const GroupSpec& spec,
                                          std::span<const ElementIndex> forbidden) {
  std::vector<bool> banned(spec.order(), false);
  for (auto d : forbidden) {
    if (d < spec.order()) banned[d] = true;
  }
  std::vector<ElementIndex> base{0};
  for (ElementIndex e = 1; e < spec.order(); ++e) {
    const bool admissible = std::none_of(base.begin(), base.end(), [&](ElementIndex b) {
      return banned[spec.sub(e, b)] || banned[spec.sub(b, e)];
    });
    if (admissible) base.push_back(e);
  }
  return base;
}

PeakFunction build_peak(const GroupSpec& spec, std::span<const ElementIndex> base_set) {
  if (base_set.empty()) {
    throw Error(ErrorKind::invalid_base_set, "base set must be nonempty");
  }
  std::vector<ElementIndex> base(base_set.begin(), base_set.end());
  std::sort(base.begin(), base.end());
  if (base.front() != 0) {
    throw Error(ErrorKind::invalid_base_set, "base set must contain 0");
  }
  if (base.back() >= spec.order() || std::adjacent_find(base.begin(), base.end()) != base.end()) {
    throw Error(ErrorKind::invalid_base_set, "base set has duplicate or out-of-range elements");
  }

  // delta(t) = |I cap (I + t)| / |I|, counted exactly.
  std::vector<std::size_t> overlap(spec.order(), 0);
  for (auto p : base) {
    for (auto q : base) ++overlap[spec.sub(p, q)];
  }
  const auto size = static_cast<double>(base.size());
  auto delta = GroupFunction::zeros(spec, Side::frequency);
  for (ElementIndex t = 0; t < spec.order(); ++t) {
    delta[t] = static_cast<double>(overlap[t]) / size;
  }

  // lambda = |xi|^2 |G| / |I| with xi = analyze(1_I).
  const auto xi = analyze(GroupFunction::indicator(spec, Side::frequency, base));
  const double scale = static_cast<double>(spec.order()) / size;
  auto lambda = GroupFunction::zeros(spec, Side::time);
  for (ElementIndex x = 0; x < spec.order(); ++x) {
    lambda[x] = std::norm(xi[x]) * scale;
  }
  return PeakFunction{spec, std::move(base), std::move(delta), std::move(lambda)};
}

bool PeakValidation::all_passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

double PeakValidation::worst_violation() const noexcept {
  double w = 0.0;
  for (const auto& c : checks) w = std::max(w, c.worst_violation);
  return w;
}

double PeakValidation::margin() const noexcept {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& c : checks) m = std::min(m, c.tolerance - c.worst_violation);
  return m;
}

const PropertyCheck& PeakValidation::at(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no peak property named " + std::string(name));
}

PeakValidation validate_peak(const PeakFunction& peak, std::span<const ElementIndex> forbidden,
                             double tolerance, double transform_tolerance) {
  const auto& spec = peak.spec;
  const auto order = spec.order();
  const auto& delta = peak.delta;
  const auto& lambda = peak.lambda;

  auto finish = [](std::string name, double worst, double tol) {
    return PropertyCheck{std::move(name), worst <= tol, worst, tol};
  };

  if (delta.size() != order || lambda.size() != order) {
    throw Error(ErrorKind::length_mismatch, "peak function does not match its group");
  }

  std::vector<bool> in_span(order, false);  // I - I
  for (auto p : peak.base_set) {
    for (auto q : peak.base_set) {
      if (p < order && q < order) in_span[spec.sub(p, q)] = true;
    }
  }

  double support = 0.0;
  double range = 0.0;
  for (ElementIndex t = 0; t < order; ++t) {
    const Complex v = delta[t];
    if (!in_span[t]) support = std::max(support, std::abs(v));
    range = std::max({range, std::abs(v.imag()), -v.real(), v.real() - 1.0});
  }

  double negativity = 0.0;
  CompensatedSum mass;
  for (ElementIndex x = 0; x < order; ++x) {
    negativity = std::max({negativity, -lambda[x].real(), std::abs(lambda[x].imag())});
    mass.add(lambda[x].real());
  }

  double on_differences = 0.0;
  for (auto d : forbidden) {
    if (d < order) on_differences = std::max(on_differences, std::abs(delta[d]));
  }

  double transform = 0.0;
  const auto image = synthesize(lambda);
  for (ElementIndex t = 0; t < order; ++t) {
    transform = std::max(transform, std::abs(image[t] - delta[t]));
  }

  PeakValidation report;
  report.checks.push_back(finish("support", support, tolerance));
  report.checks.push_back(finish("unit_peak", std::abs(delta[0] - Complex{1.0}), tolerance));
  report.checks.push_back(finish("range", std::max(range, 0.0), tolerance));
  report.checks.push_back(finish("density_nonnegative", std::max(negativity, 0.0), tolerance));
  report.checks.push_back(finish("density_mass", std::abs(mass.value() - 1.0), tolerance));
  report.checks.push_back(finish("vanishes_on_differences", on_differences, tolerance));
  report.checks.push_back(finish("transform_consistency", transform, transform_tolerance));
  return report;
}

}  // namespace fex
