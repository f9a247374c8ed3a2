#include "fex/alpha.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fex/error.hpp"
#include "fex/phase_grid.hpp"
#include "fex/random.hpp"
#include "fex/summation.hpp"

namespace fex {

namespace {

// In-place projection of a row-major n x |G| generator block.
void project_rows(const GroupSpec& spec, const PointSet& points, std::span<Complex> rows) {
  const std::size_t order = spec.order();
  const std::size_t n = points.size();
  const double inv_order = 1.0 / static_cast<double>(order);
  std::vector<Complex> residual(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto row = rows.subspan(j * order, order);
    for (std::size_t i = 0; i < n; ++i) {
      // <c_i, phi_j> = sum_g (-g, t_i) phi_j(g)
      CompensatedComplexSum acc;
      for (ElementIndex g = 0; g < order; ++g) {
        acc.add(std::conj(spec.pairing(g, points[i])) * row[g]);
      }
      residual[i] = acc.value() - (i == j ? Complex{1.0} : Complex{});
    }
    for (ElementIndex g = 0; g < order; ++g) {
      Complex correction{};
      for (std::size_t i = 0; i < n; ++i) correction += spec.pairing(g, points[i]) * residual[i];
      row[g] -= correction * inv_order;
    }
  }
}

std::vector<GroupFunction> to_functions(const GroupSpec& spec, std::size_t n,
                                        std::span<const Complex> rows) {
  const std::size_t order = spec.order();
  std::vector<GroupFunction> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto row = rows.subspan(j * order, order);
    out.emplace_back(spec, Side::time, std::vector<Complex>(row.begin(), row.end()));
  }
  return out;
}

double row_slack(std::span<const Complex> rows, std::size_t n, std::size_t order,
                 std::size_t resolution) {
  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) norms[j] = l1_norm(rows.subspan(j * order, order));
  return certificate_slack(norms, resolution);
}

}  // namespace

TheoremBounds theorem_bounds(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::invalid_element, "point set size must be >= 1");
  const auto dn = static_cast<double>(n);
  return {std::sqrt(dn / 2.0), std::sqrt(dn)};
}

std::vector<GroupFunction> project_constraints(const GroupSpec& spec, const PointSet& points,
                                               std::vector<GroupFunction> generators) {
  if (generators.size() != points.size()) {
    throw Error(ErrorKind::length_mismatch, "need one generator per point of K");
  }
  std::vector<Complex> rows;
  rows.reserve(points.size() * spec.order());
  for (const auto& phi : generators) {
    if (phi.side() != Side::time || !(phi.spec() == spec)) {
      throw Error(ErrorKind::side_mismatch, "generators must be time-side functions on the group");
    }
    rows.insert(rows.end(), phi.values().begin(), phi.values().end());
  }
  project_rows(spec, points, rows);
  return to_functions(spec, points.size(), rows);
}

ExtensionOperator random_feasible_operator(const GroupSpec& spec, const PointSet& points,
                                           std::uint64_t seed) {
  Rng rng(seed);
  const double scale = 1.0 / static_cast<double>(spec.order());
  std::vector<Complex> rows(points.size() * spec.order());
  for (auto& z : rows) z = Complex{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)} * scale;
  project_rows(spec, points, rows);
  return ExtensionOperator(spec, points, to_functions(spec, points.size(), rows));
}

AlphaReport optimize_alpha(const GroupSpec& spec, const PointSet& points, const PeakFunction& peak,
                           const AlphaOptions& options) {
  const std::size_t n = points.size();
  const std::size_t order = spec.order();
  const std::size_t resolution = options.resolution;

  auto canonical = canonical_operator(spec, points, peak);
  const auto canonical_cert = norm_certified(canonical, resolution, options.limits);
  const auto bounds = theorem_bounds(n);

  const auto start = canonical.generator_matrix();
  std::vector<Complex> best_rows = start;
  double best_hi = std::numeric_limits<double>::infinity();
  bool improved = false;

  std::vector<double> trace;
  std::size_t iterations = 0;
  const std::size_t runs = options.restarts + 1;
  const std::size_t per_run = std::max<std::size_t>(1, options.budget / runs);
  const auto roots = unit_roots(resolution);

  std::vector<Complex> image(order);
  for (std::size_t run = 0; run < runs; ++run) {
    std::vector<Complex> rows = start;
    if (run > 0) {
      Rng rng(options.seed, run);
      for (std::size_t j = 0; j < n; ++j) {
        auto row = std::span<Complex>(rows).subspan(j * order, order);
        double peak_mod = 0.0;
        for (const auto& z : row) peak_mod = std::max(peak_mod, std::abs(z));
        const double scale = options.perturbation * peak_mod;
        for (auto& z : row) z += Complex{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)} * scale;
      }
      project_rows(spec, points, rows);
    }

    double step = 0.0;
    for (std::size_t k = 0; k < per_run; ++k) {
      const auto grid = maximize_on_phase_grid(rows, n, order, resolution);
      const double hi = grid.value + row_slack(rows, n, order, resolution);
      ++iterations;
      if (hi < best_hi) {
        if (iterations > 1) improved = true;
        best_hi = hi;
        best_rows = rows;
      }
      trace.push_back(best_hi);
      if (k + 1 == per_run) break;

      // Subgradient at the maximizing grid point: d/d phi_j of sum_x |S(x)|
      // is conj(f_j) sgn(S(x)), with sgn(0) = 0.
      std::fill(image.begin(), image.end(), Complex{});
      for (std::size_t j = 0; j < n; ++j) {
        const auto f = roots[grid.argmax[j]];
        for (std::size_t x = 0; x < order; ++x) image[x] += f * rows[j * order + x];
      }
      CompensatedSum magnitude;
      std::vector<Complex> direction(n * order);
      for (std::size_t j = 0; j < n; ++j) {
        const auto f = std::conj(roots[grid.argmax[j]]);
        for (std::size_t x = 0; x < order; ++x) {
          const double m = std::abs(image[x]);
          const Complex sgn = m > 0.0 ? image[x] / m : Complex{};
          direction[j * order + x] = f * sgn;
          magnitude.add(std::abs(sgn));
        }
      }
      if (k == 0) {
        if (magnitude.value() <= 0.0) break;
        step = options.step_scale * grid.value / magnitude.value();
      }
      const double alpha = step / std::sqrt(static_cast<double>(k + 1));
      for (std::size_t i = 0; i < rows.size(); ++i) rows[i] -= alpha * direction[i];
      project_rows(spec, points, rows);
    }
  }

  AlphaReport report{
      .n = n,
      .theorem_lower = bounds.lower,
      .theorem_upper = bounds.upper,
      .canonical = canonical_cert,
      .optimized = canonical_cert,
      .iterations = iterations,
      .trace = std::move(trace),
      .best_operator = canonical,
  };
  if (improved) {
    ExtensionOperator candidate(spec, points, to_functions(spec, n, best_rows));
    auto cert = norm_certified(candidate, resolution, options.limits);
    if (cert.hi() <= canonical_cert.hi()) {
      report.optimized = std::move(cert);
      report.best_operator = std::move(candidate);
    }
  }
  return report;
}

}  // namespace fex
