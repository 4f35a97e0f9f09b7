#pragma once

#include <span>
#include <utility>
#include <vector>

#include "cyclematch/distance_matrix.hpp"
#include "cyclematch/types.hpp"

namespace cyclematch {

// Simplex-wise refinement of the Vietoris-Rips filtration of a metric:
// dimension ascending, then diameter ascending, then cindex descending.
// Restricted to one dimension this is the order (diameter, -cindex), which is
// all the reduction needs; it is invariant under a uniform shift of vertex
// indices, so a sub-cloud placed first in a union keeps its own order.
class FiltrationOrder {
 public:
  FiltrationOrder(const DistanceMatrix& dmat, double threshold);

  const DistanceMatrix& metric() const noexcept { return *dmat_; }
  double threshold() const noexcept { return threshold_; }

  // All vertices present, no masked entry, diameter <= threshold.
  bool contains(std::span<const index_t> vertices) const;
  bool contains(const SimplexKey& key) const;
  double diameter(const SimplexKey& key) const;

  // Strict "comes before".
  bool operator()(const SimplexKey& a, const SimplexKey& b) const;

 private:
  const DistanceMatrix* dmat_;
  double threshold_;
};

// Every simplex of dimension <= maxdim + 1 in the filtration, in FiltrationOrder.
// Intended for small inputs (oracles, tests); the engine never materializes it.
std::vector<SimplexKey> simplexwise_stream(const DistanceMatrix& dmat, int maxdim, double threshold);

// Natural index i -> value t_i. Steps are the distinct (diameter, dimension)
// pairs of the filtration sorted by value then dimension, numbered from 1;
// t_0 = -inf and t_{M+1} = +inf.
class ReindexMap {
 public:
  ReindexMap() = default;
  // steps sorted by (value, dim), no duplicates
  explicit ReindexMap(std::vector<std::pair<double, int>> steps);

  index_t size() const noexcept { return static_cast<index_t>(steps_.size()); }
  // Throws ReindexError outside [0, size() + 1].
  double value(index_t i) const;
  // Step holding simplices of this dimension and diameter; ReindexError if none.
  index_t step_of(double value, int dim) const;
  const std::vector<std::pair<double, int>>& steps() const noexcept { return steps_; }

  friend bool operator==(const ReindexMap&, const ReindexMap&) = default;

 private:
  std::vector<std::pair<double, int>> steps_;
};

// Steps of the filtration of simplices up to dimension maxdim + 1, found
// without enumerating simplices of dimension >= 2.
ReindexMap natural_reindex_map(const DistanceMatrix& dmat, int maxdim, double threshold);

// Same, from an explicit stream.
ReindexMap reindex_map_from_stream(std::span<const SimplexKey> stream, const DistanceMatrix& dmat);

// Enclosing radius: above it every Vietoris-Rips complex is a cone.
double default_threshold(const DistanceMatrix& dmat);

}  // namespace cyclematch
