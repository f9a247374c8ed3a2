#include "fex/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fex/error.hpp"
#include "fex/summation.hpp"

namespace fex {

namespace {

void require_side(const GroupFunction& f, Side expected, const char* op) {
  if (f.side() != expected) {
    throw Error(ErrorKind::side_mismatch, std::string(op) + " expects a " + to_string(expected) +
                                              "-side function, got " + to_string(f.side()));
  }
}

// out[a] = scale * sum_b pairing(a, b)^{+-1} in[b], compensated per entry.
std::vector<Complex> character_apply(const GroupSpec& spec, std::span<const Complex> in,
                                     bool conjugate, double scale) {
  const std::size_t order = spec.order();
  std::vector<Complex> out(order);
  for (ElementIndex a = 0; a < order; ++a) {
    CompensatedComplexSum acc;
    for (ElementIndex b = 0; b < order; ++b) {
      if (in[b] == Complex{}) continue;
      const Complex w = spec.pairing(a, b);
      acc.add((conjugate ? std::conj(w) : w) * in[b]);
    }
    out[a] = acc.value() * scale;
  }
  return out;
}

}  // namespace

const char* to_string(Side side) noexcept {
  return side == Side::time ? "time" : "frequency";
}

GroupFunction::GroupFunction(GroupSpec spec, Side side, std::vector<Complex> values)
    : spec_(std::move(spec)), side_(side), values_(std::move(values)) {
  if (values_.size() != spec_.order()) {
    throw Error(ErrorKind::length_mismatch, "function has " + std::to_string(values_.size()) +
                                                " values but the group has order " +
                                                std::to_string(spec_.order()));
  }
}

GroupFunction GroupFunction::zeros(GroupSpec spec, Side side) {
  const auto n = spec.order();
  return GroupFunction(std::move(spec), side, std::vector<Complex>(n));
}

GroupFunction GroupFunction::indicator(GroupSpec spec, Side side,
                                       std::span<const ElementIndex> support) {
  auto f = zeros(std::move(spec), side);
  for (auto i : support) {
    if (i >= f.size()) throw Error(ErrorKind::invalid_element, "indicator support outside the group");
    f[i] = 1.0;
  }
  return f;
}

GroupFunction synthesize(const GroupFunction& density) {
  require_side(density, Side::time, "synthesize");
  // (-g, gamma) = conj((g, gamma))
  return GroupFunction(density.spec(), Side::frequency,
                       character_apply(density.spec(), density.values(), true, 1.0));
}

GroupFunction analyze(const GroupFunction& f) {
  require_side(f, Side::frequency, "analyze");
  const double scale = 1.0 / static_cast<double>(f.spec().order());
  return GroupFunction(f.spec(), Side::time, character_apply(f.spec(), f.values(), false, scale));
}

double a_norm(const GroupFunction& f) {
  require_side(f, Side::frequency, "a_norm");
  return l1_norm(analyze(f).values());
}

double sup_norm(const GroupFunction& f) noexcept {
  double m = 0.0;
  for (const auto& z : f.values()) m = std::max(m, std::abs(z));
  return m;
}

double l1_time_norm(const GroupFunction& density) noexcept {
  return l1_norm(density.values());
}

}  // namespace fex
