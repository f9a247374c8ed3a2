#include "fex/group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "fex/error.hpp"

namespace fex {

namespace {

// Residue tables are materialized, so keep groups at desk scale.
constexpr std::size_t kMaxOrder = std::size_t{1} << 22;

std::int64_t reduce(std::int64_t r, std::int64_t n) {
  const std::int64_t m = r % n;
  return m < 0 ? m + n : m;
}

}  // namespace

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_spec: return "invalid-spec";
    case ErrorKind::invalid_element: return "invalid-element";
    case ErrorKind::side_mismatch: return "side-mismatch";
    case ErrorKind::invalid_base_set: return "invalid-base-set";
    case ErrorKind::invalid_peak: return "invalid-peak";
    case ErrorKind::invalid_operator: return "invalid-operator";
    case ErrorKind::length_mismatch: return "length-mismatch";
    case ErrorKind::resolution: return "resolution";
    case ErrorKind::budget: return "budget";
    case ErrorKind::config: return "config";
  }
  return "unknown";
}

std::vector<std::complex<double>> unit_roots(std::size_t m) {
  std::vector<std::complex<double>> roots(m);
  for (std::size_t k = 0; k < m; ++k) {
    if ((4 * k) % m == 0) {
      static constexpr std::complex<double> quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      roots[k] = quarter[(4 * k) / m];
    } else {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
      roots[k] = {std::cos(angle), std::sin(angle)};
    }
  }
  return roots;
}

GroupSpec::GroupSpec(std::vector<std::int64_t> factors) {
  auto impl = std::make_shared<Impl>();
  if (factors.empty()) {
    throw Error(ErrorKind::invalid_spec, "group needs at least one cyclic factor");
  }
  std::size_t order = 1;
  std::size_t lcm = 1;
  for (auto n : factors) {
    if (n < 1) {
      throw Error(ErrorKind::invalid_spec, "cyclic factor must be >= 1, got " + std::to_string(n));
    }
    if (static_cast<std::size_t>(n) > kMaxOrder / order) {
      throw Error(ErrorKind::invalid_spec, "group order exceeds " + std::to_string(kMaxOrder));
    }
    order *= static_cast<std::size_t>(n);
    lcm = std::lcm(lcm, static_cast<std::size_t>(n));
  }
  const std::size_t rank = factors.size();
  impl->strides.assign(rank, 1);
  for (std::size_t j = rank - 1; j > 0; --j) {
    impl->strides[j - 1] = impl->strides[j] * static_cast<std::size_t>(factors[j]);
  }
  impl->phase_weights.resize(rank);
  for (std::size_t j = 0; j < rank; ++j) {
    impl->phase_weights[j] = lcm / static_cast<std::size_t>(factors[j]);
  }
  impl->order = order;
  impl->residues.resize(order * rank);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < rank; ++j) {
      impl->residues[i * rank + j] =
          static_cast<std::int64_t>((i / impl->strides[j]) % static_cast<std::size_t>(factors[j]));
    }
  }
  impl->roots = unit_roots(lcm);
  impl->factors = std::move(factors);
  impl_ = std::move(impl);
}

bool GroupSpec::contains(const GroupElement& g) const noexcept {
  if (g.residues.size() != rank()) return false;
  for (std::size_t j = 0; j < rank(); ++j) {
    if (g.residues[j] < 0 || g.residues[j] >= impl_->factors[j]) return false;
  }
  return true;
}

void GroupSpec::check(const GroupElement& g) const {
  if (!contains(g)) {
    throw Error(ErrorKind::invalid_element,
                "element has rank " + std::to_string(g.residues.size()) +
                    " or residues outside the group of rank " + std::to_string(rank()));
  }
}

ElementIndex GroupSpec::index_of(const GroupElement& g) const {
  check(g);
  ElementIndex i = 0;
  for (std::size_t j = 0; j < rank(); ++j) {
    i += static_cast<std::size_t>(g.residues[j]) * impl_->strides[j];
  }
  return i;
}

GroupElement GroupSpec::element(ElementIndex i) const {
  if (i >= order()) {
    throw Error(ErrorKind::invalid_element, "element index " + std::to_string(i) + " out of range");
  }
  const auto r = residues(i);
  return GroupElement{{r.begin(), r.end()}};
}

GroupElement GroupSpec::add(const GroupElement& g, const GroupElement& h) const {
  check(g);
  check(h);
  GroupElement out{std::vector<std::int64_t>(rank())};
  for (std::size_t j = 0; j < rank(); ++j) {
    out.residues[j] = reduce(g.residues[j] + h.residues[j], impl_->factors[j]);
  }
  return out;
}

GroupElement GroupSpec::neg(const GroupElement& g) const {
  check(g);
  GroupElement out{std::vector<std::int64_t>(rank())};
  for (std::size_t j = 0; j < rank(); ++j) {
    out.residues[j] = reduce(-g.residues[j], impl_->factors[j]);
  }
  return out;
}

GroupElement GroupSpec::sub(const GroupElement& g, const GroupElement& h) const {
  return add(g, neg(h));
}

ElementIndex GroupSpec::add(ElementIndex g, ElementIndex h) const noexcept {
  const auto a = residues(g);
  const auto b = residues(h);
  ElementIndex out = 0;
  for (std::size_t j = 0; j < rank(); ++j) {
    out += static_cast<std::size_t>(reduce(a[j] + b[j], impl_->factors[j])) * impl_->strides[j];
  }
  return out;
}

ElementIndex GroupSpec::neg(ElementIndex g) const noexcept {
  const auto a = residues(g);
  ElementIndex out = 0;
  for (std::size_t j = 0; j < rank(); ++j) {
    out += static_cast<std::size_t>(reduce(-a[j], impl_->factors[j])) * impl_->strides[j];
  }
  return out;
}

ElementIndex GroupSpec::sub(ElementIndex g, ElementIndex h) const noexcept {
  const auto a = residues(g);
  const auto b = residues(h);
  ElementIndex out = 0;
  for (std::size_t j = 0; j < rank(); ++j) {
    out += static_cast<std::size_t>(reduce(a[j] - b[j], impl_->factors[j])) * impl_->strides[j];
  }
  return out;
}

std::size_t GroupSpec::phase(ElementIndex g, ElementIndex gamma) const noexcept {
  const auto a = residues(g);
  const auto b = residues(gamma);
  const std::size_t lcm = exponent();
  std::size_t k = 0;
  for (std::size_t j = 0; j < rank(); ++j) {
    const auto n = static_cast<std::size_t>(impl_->factors[j]);
    const auto prod = (static_cast<std::size_t>(a[j]) * static_cast<std::size_t>(b[j])) % n;
    k = (k + prod * impl_->phase_weights[j]) % lcm;
  }
  return k;
}

std::complex<double> GroupSpec::pairing(const GroupElement& g, const GroupElement& gamma) const {
  return pairing(index_of(g), index_of(gamma));
}

PointSet::PointSet(const GroupSpec& spec, std::vector<ElementIndex> points)
    : points_(std::move(points)) {
  if (points_.empty()) {
    throw Error(ErrorKind::invalid_element, "point set must be nonempty");
  }
  std::sort(points_.begin(), points_.end());
  if (points_.back() >= spec.order()) {
    throw Error(ErrorKind::invalid_element, "point index outside the group");
  }
  if (std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
    throw Error(ErrorKind::invalid_element, "point set contains duplicate points");
  }
}

namespace {

std::vector<ElementIndex> indices_of(const GroupSpec& spec, const std::vector<GroupElement>& points) {
  std::vector<ElementIndex> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(spec.index_of(p));
  return out;
}

}  // namespace

PointSet::PointSet(const GroupSpec& spec, const std::vector<GroupElement>& points)
    : PointSet(spec, indices_of(spec, points)) {}

std::vector<ElementIndex> difference_set(const GroupSpec& spec, const PointSet& points) {
  std::vector<bool> seen(spec.order(), false);
  for (auto p : points.points()) {
    for (auto q : points.points()) {
      if (p != q) seen[spec.sub(p, q)] = true;
    }
  }
  std::vector<ElementIndex> out;
  for (ElementIndex i = 0; i < spec.order(); ++i) {
    if (seen[i]) out.push_back(i);
  }
  return out;
}

}  // namespace fex
