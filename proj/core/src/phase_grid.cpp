#include "fex/phase_grid.hpp"

#include <cmath>
#include <limits>

#include "fex/group.hpp"
#include "fex/summation.hpp"

namespace fex {

std::uint64_t grid_size(std::size_t resolution, std::size_t n) noexcept {
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (resolution != 0 && total > std::numeric_limits<std::uint64_t>::max() / resolution) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= resolution;
  }
  return total;
}

namespace {

// Real and imaginary parts are kept in separate arrays so the per-point
// update and modulus loops vectorize.
class GridWalker {
 public:
  GridWalker(std::span<const std::complex<double>> generators, std::size_t n, std::size_t length,
             std::size_t resolution)
      : n_(n),
        length_(length),
        roots_(unit_roots(resolution)),
        gen_re_(n * length),
        gen_im_(n * length),
        part_re_(n * length),
        part_im_(n * length),
        moduli_(length),
        phase_(n, 0) {
    for (std::size_t i = 0; i < n * length; ++i) {
      gen_re_[i] = generators[i].real();
      gen_im_[i] = generators[i].imag();
    }
  }

  GridMaximum run() {
    // Depth 0 is pinned to phase 0, i.e. the first generator itself.
    for (std::size_t x = 0; x < length_; ++x) {
      part_re_[x] = gen_re_[x];
      part_im_[x] = gen_im_[x];
    }
    result_.argmax.assign(n_, 0);
    result_.value = -1.0;
    descend(1);
    result_.mean = total_.value() / static_cast<double>(result_.points);
    return result_;
  }

 private:
  void descend(std::size_t depth) {
    if (depth == n_) {
      visit();
      return;
    }
    const double* prev_re = part_re_.data() + (depth - 1) * length_;
    const double* prev_im = part_im_.data() + (depth - 1) * length_;
    double* cur_re = part_re_.data() + depth * length_;
    double* cur_im = part_im_.data() + depth * length_;
    const double* row_re = gen_re_.data() + depth * length_;
    const double* row_im = gen_im_.data() + depth * length_;
    for (std::size_t k = 0; k < roots_.size(); ++k) {
      const double wr = roots_[k].real();
      const double wi = roots_[k].imag();
      for (std::size_t x = 0; x < length_; ++x) {
        cur_re[x] = prev_re[x] + (wr * row_re[x] - wi * row_im[x]);
        cur_im[x] = prev_im[x] + (wr * row_im[x] + wi * row_re[x]);
      }
      phase_[depth] = k;
      descend(depth + 1);
    }
  }

  void visit() {
    const double* re = part_re_.data() + (n_ - 1) * length_;
    const double* im = part_im_.data() + (n_ - 1) * length_;
    for (std::size_t x = 0; x < length_; ++x) moduli_[x] = std::sqrt(re[x] * re[x] + im[x] * im[x]);
    CompensatedSum sum;
    for (std::size_t x = 0; x < length_; ++x) sum.add(moduli_[x]);
    const double v = sum.value();
    total_.add(v);
    ++result_.points;
    if (v > result_.value) {
      result_.value = v;
      result_.argmax = phase_;
    }
  }

  std::size_t n_;
  std::size_t length_;
  std::vector<std::complex<double>> roots_;
  std::vector<double> gen_re_, gen_im_;
  std::vector<double> part_re_, part_im_;
  std::vector<double> moduli_;
  std::vector<std::size_t> phase_;
  CompensatedSum total_;
  GridMaximum result_;
};

}  // namespace

GridMaximum maximize_on_phase_grid(std::span<const std::complex<double>> generators,
                                   std::size_t n, std::size_t length, std::size_t resolution) {
  if (n == 0) return GridMaximum{0.0, {}, 0.0, 1};
  return GridWalker(generators, n, length, resolution).run();
}

}  // namespace fex
