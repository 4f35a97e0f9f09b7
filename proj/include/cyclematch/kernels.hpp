#pragma once

// Data-parallel inner loops with a scalar reference implementation and
// vector variants selected once at runtime. Every variant produces results
// bit-identical to the scalar reference: the per-element operation order is
// the same and no fused multiply-add is used.

#include <cstddef>
#include <span>

namespace cyclematch::kernels {

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa) noexcept;
bool isa_available(Isa isa) noexcept;

// The variant used by the dispatching entry points below. Chosen on first
// use: AVX2 when the CPU supports it, unless CYCLEMATCH_SIMD=scalar is set.
Isa active_isa() noexcept;

// Euclidean distances from point i to every point j. Coordinates are laid
// out structure-of-arrays: coordinate c of point j is coords[c * n + j].
// Squares are accumulated in increasing coordinate order.
void distance_row(std::span<const double> coords, std::size_t n, std::size_t dim, std::size_t i,
                  std::span<double> out);

// out[w] = max over r of rows[r][w], for w < out.size().
void max_rows(std::span<const double* const> rows, std::span<double> out);

// Largest element; -infinity for an empty span.
double reduce_max(std::span<const double> values);

namespace scalar {
void distance_row(std::span<const double> coords, std::size_t n, std::size_t dim, std::size_t i,
                  std::span<double> out);
void max_rows(std::span<const double* const> rows, std::span<double> out);
double reduce_max(std::span<const double> values);
}  // namespace scalar

#if defined(CYCLEMATCH_HAVE_AVX2)
namespace avx2 {
void distance_row(std::span<const double> coords, std::size_t n, std::size_t dim, std::size_t i,
                  std::span<double> out);
void max_rows(std::span<const double* const> rows, std::span<double> out);
double reduce_max(std::span<const double> values);
}  // namespace avx2
#endif

}  // namespace cyclematch::kernels
