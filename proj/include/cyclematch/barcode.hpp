#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "cyclematch/filtration.hpp"
#include "cyclematch/types.hpp"

namespace cyclematch {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// One interval, annotated with the simplices that open and close it. Natural
// indices are -1 when they were not computed.
struct PersistencePair {
  int dim = 0;
  SimplexKey birth_simplex;
  std::optional<SimplexKey> death_simplex;
  index_t birth_index = -1;
  index_t death_index = -1;
  double birth_value = 0.0;
  double death_value = kInfinity;

  bool essential() const noexcept { return !death_simplex.has_value(); }
  double length() const noexcept { return death_value - birth_value; }

  friend bool operator==(const PersistencePair&, const PersistencePair&) = default;
};

// Orders by (dim, birth, death, birth cindex, death cindex).
bool pair_less(const PersistencePair& a, const PersistencePair& b);
void sort_pairs(std::vector<PersistencePair>& pairs);

struct Barcode {
  std::vector<PersistencePair> pairs;
  coefficient_t field_char = 2;
  index_t n_points = 0;
  int maxdim = 0;
  double threshold = kInfinity;
  std::optional<ReindexMap> reindex;

  std::vector<PersistencePair> in_dimension(int dim) const;
  friend bool operator==(const Barcode&, const Barcode&) = default;
};

// Drops intervals whose real endpoints coincide.
Barcode real_view(const Barcode& barcode);

// Recomputes real endpoints from natural indices, [t_b, t_{d+1}), and drops
// zero-length intervals. Throws ReindexError if a pair lacks indices or an
// index falls outside the map.
Barcode reindex_barcode(const Barcode& barcode, const ReindexMap& map);

}  // namespace cyclematch
