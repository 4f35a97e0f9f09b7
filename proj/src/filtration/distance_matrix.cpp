#include "cyclematch/distance_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cyclematch/error.hpp"
#include "cyclematch/kernels.hpp"

namespace cyclematch {

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> values,
                               std::vector<std::uint8_t> mask)
    : n_(n), values_(std::move(values)), mask_(std::move(mask)) {
  if (values_.size() != n_ * n_)
    throw InputError("distance matrix needs " + std::to_string(n_ * n_) + " entries, got " +
                     std::to_string(values_.size()));
  if (!mask_.empty() && mask_.size() != n_ * n_)
    throw InputError("sentinel mask size does not match the distance matrix");
  if (std::none_of(mask_.begin(), mask_.end(), [](std::uint8_t m) { return m != 0; }))
    mask_.clear();
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j && masked(i, j)) mask_floor_ = std::min(mask_floor_, (*this)(i, j));
  validate();
}

void DistanceMatrix::validate() const {
  double max_unmasked = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    if ((*this)(i, i) != 0.0)
      throw InputError("distance matrix diagonal entry " + std::to_string(i) + " is nonzero");
    for (std::size_t j = 0; j < n_; ++j) {
      const double d = (*this)(i, j);
      if (std::isnan(d) || d < 0.0)
        throw InputError("distance matrix entry (" + std::to_string(i) + ", " +
                         std::to_string(j) + ") is negative or NaN");
      if (d != (*this)(j, i) || masked(i, j) != masked(j, i))
        throw InputError("distance matrix is not symmetric at (" + std::to_string(i) + ", " +
                         std::to_string(j) + ")");
      if (!masked(i, i) || i == j) {
      } else if (!masked(i, j)) {
        throw InputError("row of absent point " + std::to_string(i) + " must be fully masked");
      }
      if (i != j && !masked(i, j)) {
        if (!std::isfinite(d))
          throw InputError("unmasked distance entries must be finite");
        max_unmasked = std::max(max_unmasked, d);
      }
    }
  }
  if (has_mask() && !(mask_floor_ > max_unmasked) && std::isfinite(mask_floor_))
    throw InputError("every sentinel-masked entry must exceed every unmasked entry");
}

DistanceMatrix DistanceMatrix::from_lower_triangle(std::size_t n, std::span<const double> lower) {
  if (lower.size() != n * (n - (n > 0 ? 1 : 0)) / 2)
    throw InputError("lower triangle size does not match point count");
  std::vector<double> values(n * n, 0.0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      values[i * n + j] = lower[k];
      values[j * n + i] = lower[k];
      ++k;
    }
  return DistanceMatrix(n, std::move(values));
}

std::size_t DistanceMatrix::present_count() const noexcept {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n_; ++i) count += present(i) ? 1 : 0;
  return count;
}

DistanceMatrix DistanceMatrix::restricted(std::span<const std::size_t> indices) const {
  const std::size_t m = indices.size();
  std::vector<double> values(m * m);
  std::vector<std::uint8_t> mask(has_mask() ? m * m : 0);
  for (std::size_t a = 0; a < m; ++a) {
    if (indices[a] >= n_) throw InputError("restriction index out of range");
    for (std::size_t b = 0; b < m; ++b) {
      values[a * m + b] = (*this)(indices[a], indices[b]);
      if (has_mask()) mask[a * m + b] = masked(indices[a], indices[b]) ? 1 : 0;
    }
  }
  return DistanceMatrix(m, std::move(values), std::move(mask));
}

double enclosing_radius(const DistanceMatrix& dmat) {
  const std::size_t n = dmat.size();
  double radius = std::numeric_limits<double>::infinity();
  bool any = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!dmat.present(i)) continue;
    any = true;
    double row_max = 0.0;
    if (!dmat.has_mask()) {
      row_max = kernels::reduce_max(dmat.row(i));
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || !dmat.present(j)) continue;
        row_max = dmat.masked(i, j) ? std::numeric_limits<double>::infinity()
                                    : std::max(row_max, dmat(i, j));
      }
    }
    radius = std::min(radius, row_max);
  }
  return any ? radius : 0.0;
}

double enclosing_diameter(const DistanceMatrix& dmat) {
  if (!dmat.has_mask()) return dmat.size() == 0 ? 0.0 : kernels::reduce_max(dmat.values());
  double diameter = 0.0;
  for (std::size_t i = 0; i < dmat.size(); ++i)
    for (std::size_t j = i + 1; j < dmat.size(); ++j)
      if (!dmat.masked(i, j)) diameter = std::max(diameter, dmat(i, j));
  return diameter;
}

}  // namespace cyclematch
