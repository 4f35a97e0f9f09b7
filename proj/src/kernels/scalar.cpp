#include <algorithm>
#include <cmath>
#include <limits>

#include "cyclematch/kernels.hpp"

namespace cyclematch::kernels::scalar {

void distance_row(std::span<const double> coords, std::size_t n, std::size_t dim, std::size_t i,
                  std::span<double> out) {
  for (std::size_t j = 0; j < n; ++j) {
    double acc = 0.0;
    for (std::size_t c = 0; c < dim; ++c) {
      const double diff = coords[c * n + j] - coords[c * n + i];
      const double square = diff * diff;
      acc = acc + square;
    }
    out[j] = std::sqrt(acc);
  }
}

void max_rows(std::span<const double* const> rows, std::span<double> out) {
  const std::size_t n = out.size();
  if (rows.empty()) {
    std::fill(out.begin(), out.end(), -std::numeric_limits<double>::infinity());
    return;
  }
  std::copy(rows[0], rows[0] + n, out.begin());
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const double* row = rows[r];
    for (std::size_t w = 0; w < n; ++w) out[w] = std::max(out[w], row[w]);
  }
}

double reduce_max(std::span<const double> values) {
  double best = -std::numeric_limits<double>::infinity();
  for (double v : values) best = std::max(best, v);
  return best;
}

}  // namespace cyclematch::kernels::scalar
