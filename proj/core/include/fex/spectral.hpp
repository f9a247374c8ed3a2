#pragma once

#include <complex>
#include <span>
#include <vector>

#include "fex/group.hpp"

namespace fex {

using Complex = std::complex<double>;

/// Which side of the duality a function lives on: time functions are
/// densities on G (the L^1 side), frequency functions live on the dual,
/// where A(Gamma) sits.
enum class Side { time, frequency };

const char* to_string(Side side) noexcept;

class GroupFunction {
 public:
  /// Throws Error(length_mismatch) unless values.size() == spec.order().
  GroupFunction(GroupSpec spec, Side side, std::vector<Complex> values);

  static GroupFunction zeros(GroupSpec spec, Side side);
  static GroupFunction indicator(GroupSpec spec, Side side, std::span<const ElementIndex> support);

  const GroupSpec& spec() const noexcept { return spec_; }
  Side side() const noexcept { return side_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const Complex> values() const noexcept { return values_; }
  std::span<Complex> values() noexcept { return values_; }

  const Complex& operator[](ElementIndex i) const noexcept { return values_[i]; }
  Complex& operator[](ElementIndex i) noexcept { return values_[i]; }

 private:
  GroupSpec spec_;
  Side side_;
  std::vector<Complex> values_;
};

/// Fourier transform of a time-side density:
/// f(gamma) = sum_g (-g, gamma) lambda(g).
GroupFunction synthesize(const GroupFunction& density);

/// Inverse of synthesize: lambda(g) = |G|^-1 sum_gamma (g, gamma) f(gamma).
GroupFunction analyze(const GroupFunction& f);

/// ||f||_A = ||analyze(f)||_1.
double a_norm(const GroupFunction& f);

double sup_norm(const GroupFunction& f) noexcept;
double l1_time_norm(const GroupFunction& density) noexcept;

}  // namespace fex
