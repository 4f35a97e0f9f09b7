#pragma once

#include <map>
#include <string>

#include "cyclematch/distance_matrix.hpp"
#include "cyclematch/linalg.hpp"
#include "cyclematch/representatives.hpp"
#include "cyclematch/simplex.hpp"

namespace fixtures {

using namespace cyclematch;

// Empty string when the cycle is valid, else what is wrong. Dense linear
// algebra over every simplex; small n only.
inline std::string check_cycle(const DistanceMatrix& d, const RepresentativeCycle& c) {
  const auto n = static_cast<index_t>(d.size());
  const int k = c.pair.dim;
  const double birth = c.pair.birth_value, death = c.pair.death_value;
  const PrimeField field(c.field_char);

  if (!chain_boundary(c.chain, c.coefficients, n, c.field_char).empty()) return "boundary is not zero";
  for (const auto& s : c.chain)
    if (s.dim != k || simplex_diameter(s, d) > birth) return "simplex outside the complex at birth";

  std::map<index_t, std::size_t> column;  // k-simplices present at death
  std::vector<index_t> faces_below;       // (k-1)-simplices
  for (index_t i = 0; i < simplex_count(k, n); ++i)
    if (simplex_diameter(SimplexKey{k, i}, d) <= death) column.emplace(i, column.size());
  const std::size_t width = column.size();
  auto as_vector = [&](const std::vector<SimplexKey>& keys, const std::vector<coefficient_t>& coeffs) {
    std::vector<coefficient_t> v(width, 0);
    for (std::size_t i = 0; i < keys.size(); ++i) v.at(column.at(keys[i].cindex)) = field.normalize(coeffs[i]);
    return v;
  };
  const auto target = as_vector(c.chain, c.coefficients);

  RowBasis span(width, field);
  // cycles already present before birth
  std::vector<index_t> early;
  for (const auto& [ci, col] : column)
    if (simplex_diameter(SimplexKey{k, ci}, d) < birth) early.push_back(ci);
  if (!early.empty()) {
    std::map<index_t, std::size_t> rows;
    for (index_t ci : early)
      for (const auto& f : boundary_faces(SimplexKey{k, ci}, n)) rows.emplace(f.key.cindex, 0);
    std::size_t r = 0;
    for (auto& [key, idx] : rows) idx = r++;
    DenseMatrix m(std::max<std::size_t>(rows.size(), 1), early.size());
    if (k > 0)
      for (std::size_t j = 0; j < early.size(); ++j)
        for (const auto& f : boundary_faces(SimplexKey{k, early[j]}, n))
          m.at(rows.at(f.key.cindex), j) = field.normalize(f.sign);
    for (const auto& z : nullspace(m, field)) {
      std::vector<SimplexKey> keys;
      for (index_t ci : early) keys.push_back({k, ci});
      span.insert(as_vector(keys, z));
    }
  }
  auto add_boundaries = [&](auto&& keep) {
    for (index_t i = 0; i < simplex_count(k + 1, n); ++i) {
      const SimplexKey s{k + 1, i};
      if (!keep(simplex_diameter(s, d))) continue;
      std::vector<SimplexKey> keys;
      std::vector<coefficient_t> coeffs;
      for (const auto& f : boundary_faces(s, n)) {
        keys.push_back(f.key);
        coeffs.push_back(f.sign);
      }
      span.insert(as_vector(keys, coeffs));
    }
  };
  add_boundaries([&](double diam) { return diam < death; });
  if (span.contains(target)) return "class is not alive on [birth, death)";
  add_boundaries([&](double diam) { return diam == death; });
  if (!span.contains(target)) return "class survives its death";
  return {};
}

}  // namespace fixtures
