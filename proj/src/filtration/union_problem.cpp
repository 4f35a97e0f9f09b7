#include "cyclematch/union_problem.hpp"

#include <cstdint>
#include <vector>

#include "cyclematch/error.hpp"

namespace cyclematch {

namespace {

DistanceMatrix block_metric(const DistanceMatrix& d_z, std::size_t begin, std::size_t end,
                            double sentinel) {
  const std::size_t n = d_z.size();
  std::vector<double> values(n * n);
  std::vector<std::uint8_t> mask(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const bool in_i = i >= begin && i < end;
    for (std::size_t j = 0; j < n; ++j) {
      const bool in_j = j >= begin && j < end;
      if (in_i && in_j) {
        values[i * n + j] = d_z(i, j);
      } else {
        values[i * n + j] = i == j ? 0.0 : sentinel;
        mask[i * n + j] = 1;
      }
    }
  }
  return DistanceMatrix(n, std::move(values), std::move(mask));
}

}  // namespace

UnionProblem build_union_problem(const PointCloud& x, const PointCloud& y) {
  if (x.empty() || y.empty()) throw EmptyInputError("both clouds must be nonempty");
  UnionProblem problem;
  problem.union_points = concatenate(x, y, x.id() + "+" + y.id());
  problem.n_x = x.size();
  problem.n_y = y.size();
  problem.d_z = pairwise_distances(problem.union_points);
  const double diameter = enclosing_diameter(problem.d_z);
  problem.sentinel = diameter > 0.0 ? 2.0 * diameter : 1.0;
  const std::size_t n = problem.d_z.size();
  problem.d_xp = block_metric(problem.d_z, 0, problem.n_x, problem.sentinel);
  problem.d_yp = block_metric(problem.d_z, problem.n_x, n, problem.sentinel);
  return problem;
}

}  // namespace cyclematch
