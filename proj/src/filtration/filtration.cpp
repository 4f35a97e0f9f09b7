#include "cyclematch/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cyclematch/error.hpp"
#include "cyclematch/simplex.hpp"

namespace cyclematch {

FiltrationOrder::FiltrationOrder(const DistanceMatrix& dmat, double threshold)
    : dmat_(&dmat), threshold_(threshold) {
  if (std::isnan(threshold) || threshold < 0.0) throw InputError("threshold must be >= 0");
}

bool FiltrationOrder::contains(std::span<const index_t> vertices) const {
  if (!simplex_unmasked(vertices, *dmat_)) return false;
  return simplex_diameter(vertices, *dmat_) <= threshold_;
}

bool FiltrationOrder::contains(const SimplexKey& key) const {
  const auto vertices = cns_decode(key, static_cast<index_t>(dmat_->size()));
  return contains(vertices);
}

double FiltrationOrder::diameter(const SimplexKey& key) const { return simplex_diameter(key, *dmat_); }

bool FiltrationOrder::operator()(const SimplexKey& a, const SimplexKey& b) const {
  if (a.dim != b.dim) return a.dim < b.dim;
  const double da = diameter(a), db = diameter(b);
  if (da != db) return da < db;
  return a.cindex > b.cindex;
}

namespace {

// Extends every clique in `current` by vertices above its maximum.
void grow(const FiltrationOrder& order, index_t n, std::vector<std::vector<index_t>>& current) {
  std::vector<std::vector<index_t>> next;
  for (const auto& simplex : current) {
    for (index_t w = simplex.back() + 1; w < n; ++w) {
      auto cofacet = simplex;
      cofacet.push_back(w);
      if (order.contains(cofacet)) next.push_back(std::move(cofacet));
    }
  }
  current = std::move(next);
}

}  // namespace

std::vector<SimplexKey> simplexwise_stream(const DistanceMatrix& dmat, int maxdim, double threshold) {
  if (maxdim < 0) throw InputError("maxdim must be >= 0");
  const FiltrationOrder order(dmat, threshold);
  const auto n = static_cast<index_t>(dmat.size());
  struct Entry {
    SimplexKey key;
    double diameter;
  };
  std::vector<Entry> entries;
  std::vector<std::vector<index_t>> level;
  for (index_t v = 0; v < n; ++v)
    if (dmat.present(static_cast<std::size_t>(v))) level.push_back({v});
  for (int dim = 0; dim <= maxdim + 1 && !level.empty(); ++dim) {
    for (const auto& simplex : level)
      entries.push_back({cns_encode(simplex, n), simplex_diameter(simplex, dmat)});
    if (dim <= maxdim) grow(order, n, level);
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.key.dim != b.key.dim) return a.key.dim < b.key.dim;
    if (a.diameter != b.diameter) return a.diameter < b.diameter;
    return a.key.cindex > b.key.cindex;
  });
  std::vector<SimplexKey> stream;
  stream.reserve(entries.size());
  for (const auto& e : entries) stream.push_back(e.key);
  return stream;
}

ReindexMap::ReindexMap(std::vector<std::pair<double, int>> steps) : steps_(std::move(steps)) {
  for (std::size_t i = 1; i < steps_.size(); ++i)
    if (!(steps_[i - 1] < steps_[i])) throw ReindexError("reindex steps must be strictly increasing");
}

double ReindexMap::value(index_t i) const {
  if (i == 0) return -std::numeric_limits<double>::infinity();
  if (i == size() + 1) return std::numeric_limits<double>::infinity();
  if (i < 0 || i > size() + 1)
    throw ReindexError("natural index " + std::to_string(i) + " outside the map");
  return steps_[static_cast<std::size_t>(i - 1)].first;
}

index_t ReindexMap::step_of(double value, int dim) const {
  const std::pair<double, int> probe{value, dim};
  const auto it = std::lower_bound(steps_.begin(), steps_.end(), probe);
  if (it == steps_.end() || *it != probe)
    throw ReindexError("no filtration step for value " + std::to_string(value) + " in dimension " +
                       std::to_string(dim));
  return static_cast<index_t>(it - steps_.begin()) + 1;
}

namespace {

// Is there a clique of `need` vertices among candidates[from..], pairwise
// within `limit` and unmasked?
bool clique_exists(const DistanceMatrix& dmat, const std::vector<std::size_t>& candidates,
                   std::vector<std::size_t>& chosen, std::size_t from, int need, double limit) {
  if (need == 0) return true;
  for (std::size_t i = from; i < candidates.size(); ++i) {
    const std::size_t w = candidates[i];
    bool ok = true;
    for (std::size_t u : chosen)
      if (dmat.masked(u, w) || dmat(u, w) > limit) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(w);
    const bool found = clique_exists(dmat, candidates, chosen, i + 1, need - 1, limit);
    chosen.pop_back();
    if (found) return true;
  }
  return false;
}

}  // namespace

ReindexMap natural_reindex_map(const DistanceMatrix& dmat, int maxdim, double threshold) {
  if (maxdim < 0) throw InputError("maxdim must be >= 0");
  const FiltrationOrder order(dmat, threshold);
  const std::size_t n = dmat.size();
  std::vector<std::pair<double, int>> steps;
  if (dmat.present_count() > 0) steps.push_back({0.0, 0});

  struct Edge {
    double length;
    std::size_t u, v;
  };
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = 0; u < v; ++u)
      if (!dmat.masked(u, v) && dmat(u, v) <= threshold) edges.push_back({dmat(u, v), u, v});
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.length < b.length; });

  std::vector<std::size_t> candidates;
  std::vector<std::size_t> chosen;
  for (std::size_t begin = 0; begin < edges.size();) {
    std::size_t end = begin;
    while (end < edges.size() && edges[end].length == edges[begin].length) ++end;
    const double length = edges[begin].length;
    steps.push_back({length, 1});
    for (int dim = 2; dim <= maxdim + 1; ++dim) {
      bool found = false;
      for (std::size_t e = begin; e < end && !found; ++e) {
        candidates.clear();
        for (std::size_t w = 0; w < n; ++w) {
          if (w == edges[e].u || w == edges[e].v) continue;
          if (dmat.masked(edges[e].u, w) || dmat.masked(edges[e].v, w)) continue;
          if (dmat(edges[e].u, w) <= length && dmat(edges[e].v, w) <= length) candidates.push_back(w);
        }
        if (candidates.size() + 1 < static_cast<std::size_t>(dim)) continue;
        chosen.clear();
        found = clique_exists(dmat, candidates, chosen, 0, dim - 1, length);
      }
      if (!found) break;  // no d-simplex of this diameter implies none of higher dimension
      steps.push_back({length, dim});
    }
    begin = end;
  }
  std::sort(steps.begin(), steps.end());
  return ReindexMap(std::move(steps));
}

ReindexMap reindex_map_from_stream(std::span<const SimplexKey> stream, const DistanceMatrix& dmat) {
  std::vector<std::pair<double, int>> steps;
  steps.reserve(stream.size());
  for (const auto& key : stream) steps.push_back({simplex_diameter(key, dmat), key.dim});
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  return ReindexMap(std::move(steps));
}

double default_threshold(const DistanceMatrix& dmat) { return enclosing_radius(dmat); }

}  // namespace cyclematch
