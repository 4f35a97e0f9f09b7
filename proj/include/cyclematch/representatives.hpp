#pragma once

#include <vector>

#include "cyclematch/barcode.hpp"
#include "cyclematch/distance_matrix.hpp"

namespace cyclematch {

// A cycle whose class is born with pair.birth_simplex and killed by
// pair.death_simplex. chain[i] carries coefficients[i] (nonzero in Z/p).
struct RepresentativeCycle {
  PersistencePair pair;
  std::vector<SimplexKey> chain;  // sorted by cindex
  std::vector<coefficient_t> coefficients;
  coefficient_t field_char = 2;

  friend bool operator==(const RepresentativeCycle&, const RepresentativeCycle&) = default;
};

// One cycle per finite positive-length pair of degree >= 1, from reducing
// the boundary columns of the death simplices alone, in filtration order.
// Throws CompatibilityError when the barcode was not computed from dmat.
std::vector<RepresentativeCycle> representative_cycles(const DistanceMatrix& dmat, const Barcode& barcode);

// Boundary of a weighted chain over Z/p, as sorted (face, coefficient) with
// zero terms dropped.
std::vector<std::pair<SimplexKey, coefficient_t>> chain_boundary(const std::vector<SimplexKey>& chain,
                                                                  const std::vector<coefficient_t>& coefficients,
                                                                  index_t n, coefficient_t field_char);

}  // namespace cyclematch
