#pragma once

#include <string>
#include <vector>

#include "cyclematch/barcode.hpp"
#include "cyclematch/image.hpp"

namespace cyclematch {

// Half-open real interval [lo, hi).
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// |I n J| / |I u J|; 0 when the union has zero length.
double jaccard(Interval a, Interval b);

enum class AffinityKind { A, B, C, D };

const char* affinity_name(AffinityKind kind) noexcept;
// Accepts "A".."D" (case-insensitive); InputError otherwise.
AffinityKind parse_affinity(const std::string& name);

struct Affinities {
  double A = 0.0, B = 0.0, C = 0.0, D = 0.0;

  double get(AffinityKind kind) const noexcept;
  friend bool operator==(const Affinities&, const Affinities&) = default;
};

// Bars truncated at `cap` before comparison.
Affinities compute_affinities(const PersistencePair& alpha, const PersistencePair& beta,
                              const PersistencePair& alpha_img, const PersistencePair& beta_img,
                              double cap = kInfinity);

struct IntervalMatch {
  int dim = 0;
  PersistencePair alpha, beta;
  PersistencePair alpha_img, beta_img;
  Affinities affinities;

  friend bool operator==(const IntervalMatch&, const IntervalMatch&) = default;
};

double affinity(const IntervalMatch& match, AffinityKind kind);

// Bars of X and Y matched through their image bars in the union: alpha and
// alpha_img share a birth simplex, alpha_img and beta_img a death simplex,
// beta_img and beta a birth simplex. Only finite bars of positive length
// take part. All four inputs must live in the union's index space
// (CompatibilityError otherwise); a repeated birth or death simplex in an
// image barcode raises InvariantError.
std::vector<IntervalMatch> match_intervals(const Barcode& bar_x, const Barcode& bar_y,
                                           const ImageBarcode& img_x, const ImageBarcode& img_y);

// Re-expresses a barcode computed on a cloud of its own in the index space
// of a union where that cloud starts at `offset` and the union has n_total points.
Barcode embed_barcode(const Barcode& barcode, index_t offset, index_t n_total);
SimplexKey shift_simplex(const SimplexKey& key, index_t n_from, index_t offset, index_t n_to);

}  // namespace cyclematch
