#include <algorithm>
#include <random>

#include "cyclematch/error.hpp"
#include "cyclematch/prevalence.hpp"

namespace cyclematch {

PointCloud resample(const PointCloud& cloud, std::size_t n, double sigma, std::uint64_t seed) {
  if (cloud.empty()) throw EmptyInputError("cannot resample an empty point cloud");
  if (n == 0) throw InputError("resample size must be at least 1");
  if (!(sigma >= 0.0)) throw InputError("noise level must be non-negative");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, cloud.size() - 1);
  std::normal_distribution<double> noise(0.0, sigma);
  const std::size_t d = cloud.ambient_dim();
  std::vector<double> coords;
  coords.reserve(n * d);
  for (std::size_t i = 0; i < n; ++i) {
    const auto p = cloud.point(pick(rng));
    for (std::size_t c = 0; c < d; ++c) coords.push_back(sigma > 0.0 ? p[c] + noise(rng) : p[c]);
  }
  return PointCloud(d, std::move(coords));
}

PointCloud uniform_in_bounding_box(const PointCloud& cloud, std::size_t n, std::uint64_t seed) {
  if (cloud.empty()) throw EmptyInputError("cannot sample the bounding box of an empty point cloud");
  if (n == 0) throw InputError("resample size must be at least 1");
  const std::size_t d = cloud.ambient_dim();
  std::vector<double> lo(cloud.point(0).begin(), cloud.point(0).end()), hi = lo;
  for (std::size_t i = 1; i < cloud.size(); ++i) {
    const auto p = cloud.point(i);
    for (std::size_t c = 0; c < d; ++c) {
      lo[c] = std::min(lo[c], p[c]);
      hi[c] = std::max(hi[c], p[c]);
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> coords;
  coords.reserve(n * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < d; ++c) coords.push_back(lo[c] + (hi[c] - lo[c]) * unit(rng));
  return PointCloud(d, std::move(coords));
}

std::uint64_t resampling_seed(std::uint64_t seed, std::size_t k) {
  // splitmix64 step
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(k) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace cyclematch
