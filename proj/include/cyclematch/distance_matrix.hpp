#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace cyclematch {

// Symmetric, zero-diagonal, nonnegative n x n matrix, optionally carrying a
// sentinel mask of "effectively infinite" entries. Every masked off-diagonal
// entry exceeds every unmasked one. A masked diagonal entry marks a point
// that is absent from the filtration; all entries in its row are masked too.
// Immutable after construction.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  // values is row-major n*n; mask is empty (no sentinels) or n*n flags.
  DistanceMatrix(std::size_t n, std::vector<double> values, std::vector<std::uint8_t> mask = {});

  // Strict lower triangle listed row by row: d(1,0), d(2,0), d(2,1), ...
  static DistanceMatrix from_lower_triangle(std::size_t n, std::span<const double> lower);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return values_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const noexcept { return {values_.data() + i * n_, n_}; }
  std::span<const double> values() const noexcept { return values_; }

  bool has_mask() const noexcept { return !mask_.empty(); }
  bool masked(std::size_t i, std::size_t j) const noexcept {
    return !mask_.empty() && mask_[i * n_ + j] != 0;
  }
  bool present(std::size_t i) const noexcept { return !masked(i, i); }
  std::size_t present_count() const noexcept;
  // Smallest masked off-diagonal value, +inf without masked entries. A simplex
  // contains a masked entry iff its diameter is >= this value.
  double mask_floor() const noexcept { return mask_floor_; }

  // Principal submatrix on the given indices, in the given order.
  DistanceMatrix restricted(std::span<const std::size_t> indices) const;

  friend bool operator==(const DistanceMatrix& a, const DistanceMatrix& b) {
    return a.n_ == b.n_ && a.values_ == b.values_ && a.mask_ == b.mask_;
  }

 private:
  void validate() const;

  std::size_t n_ = 0;
  std::vector<double> values_;
  std::vector<std::uint8_t> mask_;
  double mask_floor_ = std::numeric_limits<double>::infinity();
};

// min over present points of the max distance to the other present points;
// masked entries count as infinite. 0 for a single point.
double enclosing_radius(const DistanceMatrix& dmat);

// Largest unmasked entry.
double enclosing_diameter(const DistanceMatrix& dmat);

}  // namespace cyclematch
