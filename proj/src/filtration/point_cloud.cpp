#include "cyclematch/point_cloud.hpp"

#include <cmath>
#include <string>

#include "cyclematch/distance_matrix.hpp"
#include "cyclematch/error.hpp"
#include "cyclematch/kernels.hpp"

namespace cyclematch {

PointCloud::PointCloud(std::size_t ambient_dim, std::vector<double> coords, std::string id)
    : ambient_dim_(ambient_dim), coords_(std::move(coords)), id_(std::move(id)) {
  if (ambient_dim_ == 0 && !coords_.empty())
    throw DimensionMismatchError("points must have ambient dimension >= 1");
  if (ambient_dim_ != 0 && coords_.size() % ambient_dim_ != 0)
    throw DimensionMismatchError("coordinate count is not a multiple of the ambient dimension");
  for (double c : coords_)
    if (!std::isfinite(c)) throw InputError("point coordinates must be finite");
}

PointCloud PointCloud::from_points(const std::vector<std::vector<double>>& points, std::string id) {
  if (points.empty()) return PointCloud(0, {}, std::move(id));
  const std::size_t dim = points.front().size();
  std::vector<double> coords;
  coords.reserve(points.size() * dim);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != dim)
      throw DimensionMismatchError("point " + std::to_string(i) + " has dimension " +
                                   std::to_string(points[i].size()) + ", expected " +
                                   std::to_string(dim));
    coords.insert(coords.end(), points[i].begin(), points[i].end());
  }
  return PointCloud(dim, std::move(coords), std::move(id));
}

PointCloud concatenate(const PointCloud& a, const PointCloud& b, std::string id) {
  if (!a.empty() && !b.empty() && a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatchError("cannot concatenate clouds of ambient dimension " +
                                 std::to_string(a.ambient_dim()) + " and " +
                                 std::to_string(b.ambient_dim()));
  const std::size_t dim = a.empty() ? b.ambient_dim() : a.ambient_dim();
  std::vector<double> coords(a.coords().begin(), a.coords().end());
  coords.insert(coords.end(), b.coords().begin(), b.coords().end());
  return PointCloud(dim, std::move(coords), std::move(id));
}

DistanceMatrix pairwise_distances(const PointCloud& cloud) {
  if (cloud.empty()) throw EmptyInputError("point cloud is empty");
  const std::size_t n = cloud.size();
  const std::size_t dim = cloud.ambient_dim();
  std::vector<double> soa(n * dim);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t c = 0; c < dim; ++c) soa[c * n + j] = cloud.point(j)[c];
  std::vector<double> values(n * n);
  for (std::size_t i = 0; i < n; ++i)
    kernels::distance_row(soa, n, dim, i, std::span<double>(values.data() + i * n, n));
  return DistanceMatrix(n, std::move(values));
}

}  // namespace cyclematch
