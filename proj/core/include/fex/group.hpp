#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace fex {

using ElementIndex = std::size_t;

/// A group element as its residue vector; residues[j] lies in [0, n_j).
struct GroupElement {
  std::vector<std::int64_t> residues;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Unit roots exp(2 pi i k / m) for k = 0..m-1. Quarter-turn points are exact.
std::vector<std::complex<double>> unit_roots(std::size_t m);

/// Finite abelian group Z_{n_1} x ... x Z_{n_k}. It also serves as its own
/// dual: the character pairing is exp(2 pi i sum_j g_j gamma_j / n_j).
///
/// Elements are enumerated lexicographically in their residue vectors (first
/// factor most significant); an ElementIndex is the position in that order.
/// Haar measure is counting measure on the time side and counting / |G| on
/// the frequency side.
class GroupSpec {
 public:
  /// Throws Error(invalid_spec) if any factor is < 1.
  explicit GroupSpec(std::vector<std::int64_t> factors);

  std::span<const std::int64_t> factors() const noexcept { return impl_->factors; }
  std::size_t rank() const noexcept { return impl_->factors.size(); }
  std::size_t order() const noexcept { return impl_->order; }

  bool contains(const GroupElement& g) const noexcept;
  ElementIndex index_of(const GroupElement& g) const;
  GroupElement element(ElementIndex i) const;
  std::span<const std::int64_t> residues(ElementIndex i) const noexcept {
    return {impl_->residues.data() + i * rank(), rank()};
  }

  GroupElement add(const GroupElement& g, const GroupElement& h) const;
  GroupElement neg(const GroupElement& g) const;
  GroupElement sub(const GroupElement& g, const GroupElement& h) const;

  ElementIndex add(ElementIndex g, ElementIndex h) const noexcept;
  ElementIndex neg(ElementIndex g) const noexcept;
  ElementIndex sub(ElementIndex g, ElementIndex h) const noexcept;

  std::complex<double> pairing(const GroupElement& g, const GroupElement& gamma) const;
  std::complex<double> pairing(ElementIndex g, ElementIndex gamma) const noexcept {
    return impl_->roots[phase(g, gamma)];
  }

  /// Exponent k with pairing(g, gamma) = exp(2 pi i k / exponent()).
  std::size_t phase(ElementIndex g, ElementIndex gamma) const noexcept;
  /// Least common multiple of the factors.
  std::size_t exponent() const noexcept { return impl_->roots.size(); }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) noexcept {
    return a.impl_ == b.impl_ || a.impl_->factors == b.impl_->factors;
  }

 private:
  struct Impl {
    std::vector<std::int64_t> factors;
    std::vector<std::size_t> strides;
    std::vector<std::size_t> phase_weights;  // exponent / n_j
    std::size_t order = 1;
    std::vector<std::int64_t> residues;      // order x rank, row-major
    std::vector<std::complex<double>> roots;  // exponent() unit roots
  };

  void check(const GroupElement& g) const;

  std::shared_ptr<const Impl> impl_;
};

inline GroupSpec make_group(std::vector<std::int64_t> factors) {
  return GroupSpec(std::move(factors));
}

/// A finite set of distinct points, stored sorted in enumeration order.
class PointSet {
 public:
  /// Throws Error(invalid_element) on empty input, out-of-range or duplicate
  /// points.
  PointSet(const GroupSpec& spec, std::vector<ElementIndex> points);
  PointSet(const GroupSpec& spec, const std::vector<GroupElement>& points);

  std::size_t size() const noexcept { return points_.size(); }
  std::span<const ElementIndex> points() const noexcept { return points_; }
  ElementIndex operator[](std::size_t j) const noexcept { return points_[j]; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<ElementIndex> points_;
};

/// (K - K) \ {0}, sorted in enumeration order.
std::vector<ElementIndex> difference_set(const GroupSpec& spec, const PointSet& points);

}  // namespace fex
