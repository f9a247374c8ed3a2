#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fex {

/// Maximum of ||sum_j f_j phi_j||_1 over unimodular f on the M-point phase
/// grid (f_j = exp(2 pi i k_j / M)).
///
/// The first coordinate is pinned to k_0 = 0: the L^1 norm is invariant under
/// a global phase, so every grid point is equivalent to one with k_0 = 0 and
/// only M^(n-1) points are visited. Partial sums are cached per depth, so each
/// visited point costs O(|G|) and equals the direct left-to-right sum.
struct GridMaximum {
  double value = 0.0;
  std::vector<std::size_t> argmax;  // phase indices k_j, argmax[0] == 0
  double mean = 0.0;                // mean over the visited points
  std::uint64_t points = 0;
};

/// `generators` is row-major n x length. Ties resolve to the first point in
/// lexicographic phase order.
GridMaximum maximize_on_phase_grid(std::span<const std::complex<double>> generators,
                                   std::size_t n, std::size_t length, std::size_t resolution);

/// M^n, saturating at UINT64_MAX.
std::uint64_t grid_size(std::size_t resolution, std::size_t n) noexcept;

}  // namespace fex
