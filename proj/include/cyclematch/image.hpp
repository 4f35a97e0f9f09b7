#pragma once

#include <vector>

#include "cyclematch/barcode.hpp"
#include "cyclematch/distance_matrix.hpp"

namespace cyclematch {

// Inclusion VR(d_sub) -> VR(d_super) over one index set; d_sub >= d_super
// entrywise and every masked entry of d_super is masked in d_sub.
struct ImageProblem {
  const DistanceMatrix& d_sub;
  const DistanceMatrix& d_super;
  int maxdim = 1;
  double threshold = kInfinity;
  coefficient_t field_char = 2;
  bool apparent_pairs = true;
};

// Barcode of the image of H_*(sub) in H_*(super). Births are simplices of
// the sub filtration (valued by d_sub), deaths simplices of the super
// filtration (valued by d_super). Natural indices are not filled.
struct ImageBarcode {
  std::vector<PersistencePair> finite_pairs;
  std::vector<PersistencePair> essential_pairs;
  coefficient_t field_char = 2;
  index_t n_points = 0;
  int maxdim = 0;
  double threshold = kInfinity;

  std::vector<PersistencePair> all_pairs() const;
  friend bool operator==(const ImageBarcode&, const ImageBarcode&) = default;
};

// Throws NotNestedError unless the problem's metrics are nested.
void validate_nested(const DistanceMatrix& d_sub, const DistanceMatrix& d_super);

ImageBarcode compute_image_barcode(const ImageProblem& problem);

// Image barcode recovered from the rank function of H_k(X_i) -> H_k(Z_j),
// computed by dense linear algebra. Refuses (OracleScaleError) above 12 points.
ImageBarcode oracle_image_barcode(const ImageProblem& problem);

// Ranks of H_k(X_i) -> H_k(Z_j) and of the dual restriction
// H^k(Z_j) -> H^k(X_i) over every pair of steps i <= j of the merged
// filtration timeline (step 0 is the empty complex).
struct ImageRankTable {
  int dim = 0;
  std::size_t steps = 0;
  std::vector<index_t> homology;    // row-major (steps + 1)^2, entries with i > j unused
  std::vector<index_t> cohomology;

  index_t homology_rank(std::size_t i, std::size_t j) const { return homology[i * (steps + 1) + j]; }
  index_t cohomology_rank(std::size_t i, std::size_t j) const { return cohomology[i * (steps + 1) + j]; }
};
std::vector<ImageRankTable> image_rank_tables(const ImageProblem& problem);

}  // namespace cyclematch
