#pragma once

#include <cstddef>

#include "cyclematch/distance_matrix.hpp"
#include "cyclematch/point_cloud.hpp"

namespace cyclematch {

// Two clouds placed in one index space, X first. d_xp and d_yp carry the
// union metric on their own block and a masked sentinel elsewhere; the points
// of the other cloud are absent from those filtrations.
struct UnionProblem {
  PointCloud union_points;
  std::size_t n_x = 0;
  std::size_t n_y = 0;
  double sentinel = 0.0;
  DistanceMatrix d_z;
  DistanceMatrix d_xp;
  DistanceMatrix d_yp;
};

// Throws EmptyInputError if either cloud is empty, DimensionMismatchError on
// differing ambient dimensions.
UnionProblem build_union_problem(const PointCloud& x, const PointCloud& y);

}  // namespace cyclematch
