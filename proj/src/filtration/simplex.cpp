#include "cyclematch/simplex.hpp"

#include <algorithm>
#include <string>

#include "cyclematch/distance_matrix.hpp"
#include "cyclematch/error.hpp"

namespace cyclematch {

namespace {

// C(n, k) with overflow detection; -1 on overflow.
index_t checked_binomial(index_t n, index_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 result = 1;
  for (index_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > static_cast<__int128>(INT64_MAX)) return -1;
  }
  return static_cast<index_t>(result);
}

}  // namespace

index_t simplex_count(int dim, index_t n) {
  const index_t c = checked_binomial(n, dim + 1);
  if (c < 0) throw InvalidSimplexError("simplex count overflows 64 bits");
  return c;
}

SimplexKey cns_encode(std::span<const index_t> vertices, index_t n) {
  if (vertices.empty()) throw InvalidSimplexError("simplex must have at least one vertex");
  index_t cindex = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const index_t v = vertices[i];
    if (v < 0 || v >= n)
      throw InvalidSimplexError("vertex " + std::to_string(v) + " out of range for n = " +
                                std::to_string(n));
    if (i > 0 && v <= vertices[i - 1])
      throw InvalidSimplexError("simplex vertices must be strictly increasing");
    const index_t c = checked_binomial(v, static_cast<index_t>(i) + 1);
    if (c < 0 || cindex > INT64_MAX - c) throw InvalidSimplexError("simplex index overflows 64 bits");
    cindex += c;
  }
  return {static_cast<int>(vertices.size()) - 1, cindex};
}

std::vector<index_t> cns_decode(const SimplexKey& key, index_t n) {
  if (key.dim < 0 || key.cindex < 0) throw InvalidSimplexError("negative simplex key");
  if (key.dim + 1 > n || key.cindex >= simplex_count(key.dim, n))
    throw InvalidSimplexError("simplex index " + std::to_string(key.cindex) +
                              " out of range for dimension " + std::to_string(key.dim) +
                              " and n = " + std::to_string(n));
  std::vector<index_t> vertices(static_cast<std::size_t>(key.dim) + 1);
  index_t rest = key.cindex;
  index_t top = n - 1;
  for (int k = key.dim + 1; k >= 1; --k) {
    // largest v <= top with C(v, k) <= rest
    index_t lo = k - 1, hi = top;
    while (lo < hi) {
      const index_t mid = lo + (hi - lo + 1) / 2;
      if (checked_binomial(mid, k) <= rest && checked_binomial(mid, k) >= 0)
        lo = mid;
      else
        hi = mid - 1;
    }
    vertices[static_cast<std::size_t>(k - 1)] = lo;
    rest -= checked_binomial(lo, k);
    top = lo - 1;
  }
  return vertices;
}

index_t cns_encode(std::span<const index_t> vertices, const BinomialTable& binomial) {
  index_t cindex = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    cindex += binomial(vertices[i], static_cast<index_t>(i) + 1);
  return cindex;
}

void cns_decode_descending(index_t cindex, int dim, index_t n, const BinomialTable& binomial,
                           std::vector<index_t>& out) {
  out.clear();
  index_t top = n - 1;
  for (int k = dim + 1; k >= 1; --k) {
    index_t lo = k - 1, hi = top;
    while (lo < hi) {
      const index_t mid = lo + (hi - lo + 1) / 2;
      if (binomial(mid, k) <= cindex)
        lo = mid;
      else
        hi = mid - 1;
    }
    out.push_back(lo);
    cindex -= binomial(lo, k);
    top = lo - 1;
  }
}

double simplex_diameter(std::span<const index_t> vertices, const DistanceMatrix& dmat) {
  double diameter = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      diameter = std::max(diameter, dmat(static_cast<std::size_t>(vertices[i]),
                                         static_cast<std::size_t>(vertices[j])));
  return diameter;
}

double simplex_diameter(const SimplexKey& key, const DistanceMatrix& dmat) {
  const auto vertices = cns_decode(key, static_cast<index_t>(dmat.size()));
  return simplex_diameter(vertices, dmat);
}

bool simplex_unmasked(std::span<const index_t> vertices, const DistanceMatrix& dmat) {
  if (!dmat.has_mask()) return true;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i; j < vertices.size(); ++j)
      if (dmat.masked(static_cast<std::size_t>(vertices[i]), static_cast<std::size_t>(vertices[j])))
        return false;
  return true;
}

std::vector<SignedFace> boundary_faces(const SimplexKey& key, index_t n) {
  std::vector<SignedFace> faces;
  if (key.dim == 0) return faces;
  const auto vertices = cns_decode(key, n);
  std::vector<index_t> face;
  face.reserve(vertices.size() - 1);
  for (std::size_t drop = 0; drop < vertices.size(); ++drop) {
    face.clear();
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (i != drop) face.push_back(vertices[i]);
    faces.push_back({cns_encode(face, n), (drop & 1) ? -1 : 1});
  }
  return faces;
}

}  // namespace cyclematch
