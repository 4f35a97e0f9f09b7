#pragma once

#include <optional>

#include "cyclematch/barcode.hpp"
#include "cyclematch/distance_matrix.hpp"

namespace cyclematch {

struct PersistenceOptions {
  int maxdim = 1;
  // Default: enclosing radius of the metric.
  std::optional<double> threshold;
  coefficient_t field_char = 2;
  // Pair a column with its first equal-value cofacet without reduction when
  // that cofacet is still unclaimed.
  bool apparent_pairs = true;
  // Fill birth_index/death_index and Barcode::reindex.
  bool natural_indices = true;
};

// Barcode of H_0..H_maxdim of the Vietoris-Rips filtration, including
// zero-length intervals. Degree 0 by union-find, higher degrees by
// coboundary reduction with clearing.
Barcode compute_barcode(const DistanceMatrix& dmat, const PersistenceOptions& options = {});
Barcode compute_barcode(const DistanceMatrix& dmat, int maxdim, double threshold,
                        coefficient_t field_char = 2);

// Textbook left-to-right reduction of the full boundary matrix. Small inputs only.
Barcode brute_force_barcode(const DistanceMatrix& dmat, int maxdim, double threshold,
                            coefficient_t field_char = 2);

}  // namespace cyclematch
