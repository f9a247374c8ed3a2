#pragma once

#include <cmath>
#include <complex>
#include <span>

namespace fex {

/// Neumaier-compensated accumulator. The result does not depend on the
/// magnitude ordering of the addends to within a couple of ulps.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(std::complex<double> z) noexcept {
    re_.add(z.real());
    im_.add(z.imag());
  }

  std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

inline double compensated_total(std::span<const double> xs) noexcept {
  CompensatedSum s;
  for (double x : xs) s.add(x);
  return s.value();
}

/// Sum of moduli, compensated.
inline double l1_norm(std::span<const std::complex<double>> xs) noexcept {
  CompensatedSum s;
  for (const auto& z : xs) s.add(std::abs(z));
  return s.value();
}

}  // namespace fex
