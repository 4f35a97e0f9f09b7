// Compiled with -mavx2 only; callers reach it through the runtime dispatcher.
#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "cyclematch/kernels.hpp"

namespace cyclematch::kernels::avx2 {

void distance_row(std::span<const double> coords, std::size_t n, std::size_t dim, std::size_t i,
                  std::span<double> out) {
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t c = 0; c < dim; ++c) {
      const __m256d xj = _mm256_loadu_pd(coords.data() + c * n + j);
      const __m256d xi = _mm256_set1_pd(coords[c * n + i]);
      const __m256d diff = _mm256_sub_pd(xj, xi);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(diff, diff));
    }
    _mm256_storeu_pd(out.data() + j, _mm256_sqrt_pd(acc));
  }
  for (; j < n; ++j) {
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
  std::size_t w = 0;
  for (; w + 4 <= n; w += 4) {
    __m256d m = _mm256_loadu_pd(rows[0] + w);
    for (std::size_t r = 1; r < rows.size(); ++r)
      m = _mm256_max_pd(m, _mm256_loadu_pd(rows[r] + w));
    _mm256_storeu_pd(out.data() + w, m);
  }
  for (; w < n; ++w) {
    double m = rows[0][w];
    for (std::size_t r = 1; r < rows.size(); ++r) m = std::max(m, rows[r][w]);
    out[w] = m;
  }
}

double reduce_max(std::span<const double> values) {
  const std::size_t n = values.size();
  double best = -std::numeric_limits<double>::infinity();
  std::size_t w = 0;
  if (n >= 4) {
    __m256d m = _mm256_loadu_pd(values.data());
    for (w = 4; w + 4 <= n; w += 4) m = _mm256_max_pd(m, _mm256_loadu_pd(values.data() + w));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, m);
    best = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
  }
  for (; w < n; ++w) best = std::max(best, values[w]);
  return best;
}

}  // namespace cyclematch::kernels::avx2
