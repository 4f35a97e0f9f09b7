#include "cyclematch/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "cyclematch/distance_matrix.hpp"
#include "cyclematch/error.hpp"
#include "cyclematch/persistence.hpp"
#include "cyclematch/union_problem.hpp"

namespace cyclematch {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool matchable(const PersistencePair& p) { return !p.essential() && p.death_value > p.birth_value; }

}  // namespace

double match_threshold(const PointCloud& x, const PointCloud& y) {
  const UnionProblem problem = build_union_problem(x, y);
  return std::max({enclosing_radius(pairwise_distances(x)), enclosing_radius(pairwise_distances(y)),
                   enclosing_radius(problem.d_z)});
}

MatchResult match_point_clouds(const PointCloud& x, const PointCloud& y, const MatchOptions& options,
                               const Barcode* bar_x) {
  const UnionProblem problem = build_union_problem(x, y);
  const DistanceMatrix dx = pairwise_distances(x);
  const DistanceMatrix dy = pairwise_distances(y);
  MatchResult out;
  out.n_x = problem.n_x;
  out.n_y = problem.n_y;
  out.threshold = options.threshold.value_or(
      std::max({enclosing_radius(dx), enclosing_radius(dy), enclosing_radius(problem.d_z)}));
  const auto n = static_cast<index_t>(problem.n_x + problem.n_y);

  PersistenceOptions popts;
  popts.maxdim = options.maxdim;
  popts.threshold = out.threshold;
  popts.field_char = options.field_char;
  popts.apparent_pairs = options.apparent_pairs;

  auto t0 = Clock::now();
  if (bar_x) {
    if (bar_x->n_points != static_cast<index_t>(problem.n_x) || bar_x->field_char != options.field_char ||
        bar_x->maxdim < options.maxdim)
      throw CompatibilityError("supplied barcode does not belong to the first point cloud");
    out.bar_x = embed_barcode(*bar_x, 0, n);
  } else {
    out.bar_x = embed_barcode(compute_barcode(dx, popts), 0, n);
  }
  out.bar_y = embed_barcode(compute_barcode(dy, popts), static_cast<index_t>(problem.n_x), n);
  out.timings.barcode = seconds_since(t0);

  t0 = Clock::now();
  ImageProblem ix{problem.d_xp, problem.d_z, options.maxdim, out.threshold, options.field_char,
                  options.apparent_pairs};
  ImageProblem iy{problem.d_yp, problem.d_z, options.maxdim, out.threshold, options.field_char,
                  options.apparent_pairs};
  out.img_x = compute_image_barcode(ix);
  out.img_y = compute_image_barcode(iy);
  out.timings.image = seconds_since(t0);

  t0 = Clock::now();
  out.matches = match_intervals(out.bar_x, out.bar_y, out.img_x, out.img_y);
  out.timings.match = seconds_since(t0);
  return out;
}

TrackResult track(const std::vector<PointCloud>& frames, const MatchOptions& options) {
  if (frames.size() < 2) throw InputError("tracking needs at least two frames");
  TrackResult out;
  const std::size_t F = frames.size();
  for (const auto& f : frames) out.frames.push_back(f.id());
  out.matches.resize(F - 1);

  // each frame's barcode, in its own index space
  std::vector<std::optional<Barcode>> bars(F);
  std::vector<std::vector<std::size_t>> order(F);  // indices of matchable bars, sorted
  for (std::size_t f = 0; f < F; ++f) {
    try {
      const DistanceMatrix d = pairwise_distances(frames[f]);
      PersistenceOptions popts;
      popts.maxdim = options.maxdim;
      popts.threshold = options.threshold.value_or(enclosing_radius(d));
      popts.field_char = options.field_char;
      popts.apparent_pairs = options.apparent_pairs;
      bars[f] = compute_barcode(d, popts);
      for (std::size_t i = 0; i < bars[f]->pairs.size(); ++i)
        if (matchable(bars[f]->pairs[i])) order[f].push_back(i);
      std::stable_sort(order[f].begin(), order[f].end(), [&](std::size_t a, std::size_t b) {
        return pair_less(bars[f]->pairs[a], bars[f]->pairs[b]);
      });
    } catch (const std::exception& e) {
      out.diagnostics.push_back({f, std::string("frame ") + std::to_string(f) + ": " + e.what()});
    }
  }

  auto find_by_birth = [&](std::size_t f, const SimplexKey& key, int dim) -> std::optional<std::size_t> {
    for (std::size_t i : order[f])
      if (bars[f]->pairs[i].dim == dim && bars[f]->pairs[i].birth_simplex == key) return i;
    return std::nullopt;
  };

  std::vector<std::vector<std::optional<std::size_t>>> next(F), prev(F);
  for (std::size_t f = 0; f < F; ++f) {
    const std::size_t m = bars[f] ? bars[f]->pairs.size() : 0;
    next[f].assign(m, std::nullopt);
    prev[f].assign(m, std::nullopt);
  }
  for (std::size_t f = 0; f + 1 < F; ++f) {
    if (!bars[f] || !bars[f + 1]) continue;
    try {
      MatchResult r = match_point_clouds(frames[f], frames[f + 1], options, &*bars[f]);
      const auto n_total = static_cast<index_t>(r.n_x + r.n_y);
      const auto n_next = static_cast<index_t>(r.n_y);
      for (const auto& m : r.matches) {
        const auto a = find_by_birth(f, m.alpha.birth_simplex, m.dim);
        const auto b = find_by_birth(
            f + 1, shift_simplex(m.beta.birth_simplex, n_total, -static_cast<index_t>(r.n_x), n_next), m.dim);
        if (!a || !b) throw InvariantError("matched bar not found in its frame's barcode");
        next[f][*a] = *b;
        prev[f + 1][*b] = *a;
      }
      out.matches[f] = std::move(r.matches);
    } catch (const std::exception& e) {
      out.diagnostics.push_back({f, "frames " + std::to_string(f) + "-" + std::to_string(f + 1) + ": " + e.what()});
    }
  }

  for (std::size_t f = 0; f < F; ++f) {
    if (!bars[f]) continue;
    for (std::size_t i : order[f]) {
      if (prev[f][i]) continue;
      TrackChain chain;
      chain.id = out.chains.size();
      chain.dim = bars[f]->pairs[i].dim;
      std::optional<std::size_t> cur = i;
      for (std::size_t g = f; cur; ++g) {
        chain.links.push_back({g, bars[g]->pairs[*cur]});
        cur = next[g][*cur];
      }
      out.chains.push_back(std::move(chain));
    }
  }
  // order[f] is sorted by (dim, birth, death) and frames are visited in order,
  // so chain ids already follow (first frame, dim, birth, death)
  return out;
}

}  // namespace cyclematch
