#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

#include "cyclematch/barcode.hpp"
#include "cyclematch/point_cloud.hpp"

namespace fixtures {

using namespace cyclematch;

inline PointCloud uniform_square(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> c(2 * n);
  for (auto& v : c) v = u(rng);
  return PointCloud(2, std::move(c));
}

inline PointCloud uniform_cube(std::size_t n, std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> c(dim * n);
  for (auto& v : c) v = u(rng);
  return PointCloud(dim, std::move(c));
}

// Unit-radius circle around (cx, 0) at uniform random angles.
inline PointCloud circle(std::size_t n, double cx, double sigma, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::normal_distribution<double> noise(0.0, sigma > 0.0 ? sigma : 1.0);
  std::vector<double> c;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = angle(rng);
    c.push_back(cx + std::cos(t) + (sigma > 0.0 ? noise(rng) : 0.0));
    c.push_back(std::sin(t) + (sigma > 0.0 ? noise(rng) : 0.0));
  }
  return PointCloud(2, std::move(c));
}

inline PointCloud triangle() {
  return PointCloud::from_points({{0.0, 0.0}, {1.0, 0.0}, {std::sqrt(3.0) / 2, std::sqrt(3.0) / 2}});
}

inline PointCloud unit_square() { return PointCloud::from_points({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

using PairSignature = std::tuple<int, SimplexKey, std::optional<SimplexKey>>;

inline std::vector<PairSignature> signature(const std::vector<PersistencePair>& pairs) {
  std::vector<PairSignature> s;
  for (const auto& p : pairs) s.emplace_back(p.dim, p.birth_simplex, p.death_simplex);
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace fixtures

#include "cyclematch/distance_matrix.hpp"
#include "cyclematch/union_problem.hpp"

namespace fixtures {

// A pair of nested metrics on at most max_n points: even seeds give the
// sentinel-extended sub-cloud metric of a union, odd seeds a random
// entrywise enlargement of a Euclidean metric.
struct NestedInstance {
  DistanceMatrix sub, super;
};

inline NestedInstance nested_instance(std::uint64_t seed, std::size_t max_n = 10) {
  std::mt19937_64 rng(seed * 7919 + 1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  if (seed % 2 == 0) {
    const std::size_t nx = 1 + rng() % (max_n / 2), ny = 1 + rng() % (max_n - nx);
    const auto u_problem = build_union_problem(uniform_square(nx, rng()), uniform_square(ny, rng()));
    return {seed % 4 == 0 ? u_problem.d_xp : u_problem.d_yp, u_problem.d_z};
  }
  const std::size_t n = 2 + rng() % (max_n - 1);
  const auto super = pairwise_distances(uniform_square(n, rng()));
  std::vector<double> v(super.values().begin(), super.values().end());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (rng() % 3 == 0) continue;
      v[i * n + j] = v[j * n + i] = super(i, j) + 0.4 * u(rng);
    }
  return {DistanceMatrix(n, std::move(v)), super};
}

}  // namespace fixtures
