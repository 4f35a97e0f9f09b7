#include <cstdlib>
#include <cstring>

#include "cyclematch/kernels.hpp"

namespace cyclematch::kernels {

namespace {

struct Table {
  Isa isa;
  void (*distance_row)(std::span<const double>, std::size_t, std::size_t, std::size_t,
                       std::span<double>);
  void (*max_rows)(std::span<const double* const>, std::span<double>);
  double (*reduce_max)(std::span<const double>);
};

Table select_table() {
  const char* forced = std::getenv("CYCLEMATCH_SIMD");
  const bool want_scalar = forced != nullptr && std::strcmp(forced, "scalar") == 0;
#if defined(CYCLEMATCH_HAVE_AVX2)
  if (!want_scalar && isa_available(Isa::avx2))
    return {Isa::avx2, &avx2::distance_row, &avx2::max_rows, &avx2::reduce_max};
#else
  (void)want_scalar;
#endif
  return {Isa::scalar, &scalar::distance_row, &scalar::max_rows, &scalar::reduce_max};
}

const Table& table() {
  static const Table t = select_table();
  return t;
}

}  // namespace

const char* isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(CYCLEMATCH_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() noexcept { return table().isa; }

void distance_row(std::span<const double> coords, std::size_t n, std::size_t dim, std::size_t i,
                  std::span<double> out) {
  table().distance_row(coords, n, dim, i, out);
}

void max_rows(std::span<const double* const> rows, std::span<double> out) {
  table().max_rows(rows, out);
}

double reduce_max(std::span<const double> values) { return table().reduce_max(values); }

}  // namespace cyclematch::kernels
