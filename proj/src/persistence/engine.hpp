#pragma once

// Shared reduction engine. The ordinary barcode is the image barcode of the
// identity inclusion, so both run through the same code: sub == super gives
// the ordinary barcode of super.

#include <optional>
#include <vector>

#include "cyclematch/distance_matrix.hpp"
#include "cyclematch/types.hpp"

namespace cyclematch::detail {

struct EngineConfig {
  const DistanceMatrix* super = nullptr;
  const DistanceMatrix* sub = nullptr;
  int maxdim = 1;
  double threshold = 0.0;
  coefficient_t field_char = 2;
  bool apparent_pairs = true;
};

struct RawPair {
  int dim;
  SimplexKey birth;
  std::optional<SimplexKey> death;
  double birth_value;
  double death_value;
};

std::vector<RawPair> run_engine(const EngineConfig& config);

}  // namespace cyclematch::detail
