#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace cyclematch {

class DistanceMatrix;

// An ordered list of points of equal ambient dimension. The index of a point
// is part of its identity.
class PointCloud {
 public:
  PointCloud() = default;
  // coords holds the points row-major; its size must be a multiple of ambient_dim.
  PointCloud(std::size_t ambient_dim, std::vector<double> coords, std::string id = {});

  // Throws DimensionMismatchError when points disagree in length.
  static PointCloud from_points(const std::vector<std::vector<double>>& points,
                                std::string id = {});

  std::size_t size() const noexcept { return ambient_dim_ == 0 ? 0 : coords_.size() / ambient_dim_; }
  bool empty() const noexcept { return size() == 0; }
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * ambient_dim_, ambient_dim_};
  }
  std::span<const double> coords() const noexcept { return coords_; }
  const std::string& id() const noexcept { return id_; }

  friend bool operator==(const PointCloud& a, const PointCloud& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.coords_ == b.coords_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<double> coords_;
  std::string id_;
};

// Concatenation: the points of a followed by the points of b.
PointCloud concatenate(const PointCloud& a, const PointCloud& b, std::string id = {});

// Euclidean distance matrix of the ambient space; no sentinel entries.
// Throws EmptyInputError on an empty cloud.
DistanceMatrix pairwise_distances(const PointCloud& cloud);

}  // namespace cyclematch
