#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace cyclematch {

using index_t = std::int64_t;
using coefficient_t = std::int64_t;

// A simplex named by its dimension and its rank in the combinatorial number
// system among all (dim + 1)-subsets of the point indices.
struct SimplexKey {
  int dim = 0;
  index_t cindex = 0;

  friend auto operator<=>(const SimplexKey&, const SimplexKey&) = default;
};

struct SimplexKeyHash {
  std::size_t operator()(const SimplexKey& key) const noexcept {
    return std::hash<index_t>{}(key.cindex * 8 + key.dim);
  }
};

}  // namespace cyclematch
