#pragma once

#include <span>
#include <vector>

#include "cyclematch/binomial.hpp"
#include "cyclematch/types.hpp"

namespace cyclematch {

class DistanceMatrix;

// Combinatorial number system rank of a strictly increasing vertex list:
//   cindex = sum_i C(v_i, i + 1).
// Throws InvalidSimplexError on unsorted, duplicate or out-of-range vertices.
SimplexKey cns_encode(std::span<const index_t> vertices, index_t n);

// Inverse of cns_encode; vertices returned in increasing order.
std::vector<index_t> cns_decode(const SimplexKey& key, index_t n);

// Table-backed variants used on hot paths; no validation.
index_t cns_encode(std::span<const index_t> vertices, const BinomialTable& binomial);
// Writes the dim + 1 vertices in decreasing order.
void cns_decode_descending(index_t cindex, int dim, index_t n, const BinomialTable& binomial,
                           std::vector<index_t>& out);

// Number of (dim + 1)-subsets of n points.
index_t simplex_count(int dim, index_t n);

// Max pairwise entry over the vertex set; 0 for a vertex.
double simplex_diameter(const SimplexKey& key, const DistanceMatrix& dmat);
double simplex_diameter(std::span<const index_t> vertices, const DistanceMatrix& dmat);

// True when no pairwise entry (nor, for vertices, the point itself) is sentinel-masked.
bool simplex_unmasked(std::span<const index_t> vertices, const DistanceMatrix& dmat);

// Faces obtained by dropping one vertex, paired with the sign (-1)^position
// of the dropped vertex in increasing order.
struct SignedFace {
  SimplexKey key;
  int sign;
};
std::vector<SignedFace> boundary_faces(const SimplexKey& key, index_t n);

}  // namespace cyclematch
