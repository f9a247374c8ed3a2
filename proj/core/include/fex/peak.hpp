#pragma once

#include <span>
#include <string>
#include <vector>

#include "fex/group.hpp"
#include "fex/spectral.hpp"

namespace fex {

/// Peak function delta = |I|^-1 1_I * 1_{-I} on the dual, together with its
/// nonnegative time-side density lambda (delta = synthesize(lambda)).
struct PeakFunction {
  GroupSpec spec;
  std::vector<ElementIndex> base_set;
  GroupFunction delta;   // frequency side
  GroupFunction lambda;  // time side
};

/// Greedy base set: walks the group in enumeration order starting from 0 and
/// keeps every element whose differences with the kept ones avoid `forbidden`.
/// `forbidden` must exclude 0 and be closed under negation.
std::vector<ElementIndex> greedy_base_set(const GroupSpec& spec,
                                          std::span<const ElementIndex> forbidden);

/// Throws Error(invalid_base_set) if the base set is empty, lacks 0, or has
/// duplicate / out-of-range entries.
PeakFunction build_peak(const GroupSpec& spec, std::span<const ElementIndex> base_set);

struct PropertyCheck {
  std::string name;
  bool passed = true;
  double worst_violation = 0.0;
  double tolerance = 0.0;
};

struct PeakValidation {
  // support, unit_peak, range, density_nonnegative, density_mass,
  // vanishes_on_differences, transform_consistency
  std::vector<PropertyCheck> checks;

  bool all_passed() const noexcept;
  double worst_violation() const noexcept;
  /// min over checks of (tolerance - worst_violation); negative on failure.
  double margin() const noexcept;
  const PropertyCheck& at(std::string_view name) const;
};

/// Checks the five peak properties at `tolerance` and that delta vanishes on
/// `forbidden`; transform consistency (synthesize(lambda) == delta) is checked
/// at `transform_tolerance`. Failures are reported, never thrown.
PeakValidation validate_peak(const PeakFunction& peak, std::span<const ElementIndex> forbidden,
                             double tolerance = 1e-12, double transform_tolerance = 1e-9);

}  // namespace fex
