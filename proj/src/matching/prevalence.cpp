#include "cyclematch/prevalence.hpp"

#include <atomic>
#include <map>
#include <thread>

#include "cyclematch/distance_matrix.hpp"
#include "cyclematch/error.hpp"
#include "cyclematch/persistence.hpp"

namespace cyclematch {

namespace {

struct Outcome {
  bool failed = false;
  std::string message;
  std::map<SimplexKey, Affinities> by_birth;  // reference bar birth simplex -> affinities
  StageTimings timings;
};

}  // namespace

PrevalenceReport prevalence(const PointCloud& reference, const PrevalenceOptions& options) {
  if (reference.empty()) throw EmptyInputError("reference point cloud is empty");
  if (options.resamples == 0) throw InputError("number of resamplings must be at least 1");
  if (!(options.noise >= 0.0)) throw InputError("noise level must be non-negative");
  if (options.match.maxdim < 0) throw InputError("maxdim must be non-negative");

  PrevalenceReport report;
  auto& params = report.params;
  params.resamples = options.resamples;
  params.resample_size = options.resample_size ? options.resample_size : reference.size();
  params.reference_size = reference.size();
  params.noise = options.noise;
  params.seed = options.seed;
  params.kind = options.kind;
  params.maxdim = options.match.maxdim;
  params.min_dim = options.min_dim;
  params.field_char = options.match.field_char;
  params.mode = options.mode;

  const DistanceMatrix d_ref = pairwise_distances(reference);
  PersistenceOptions popts;
  popts.maxdim = options.match.maxdim;
  popts.threshold = options.match.threshold.value_or(enclosing_radius(d_ref));
  popts.field_char = options.match.field_char;
  popts.apparent_pairs = options.match.apparent_pairs;
  const Barcode ref_bar = compute_barcode(d_ref, popts);

  std::vector<std::size_t> scored;
  for (std::size_t i = 0; i < ref_bar.pairs.size(); ++i) {
    const auto& p = ref_bar.pairs[i];
    if (p.dim >= options.min_dim && !p.essential() && p.death_value > p.birth_value) scored.push_back(i);
  }

  const std::size_t K = options.resamples;
  std::vector<Outcome> outcomes(K);
  auto run = [&](std::size_t k) {
    Outcome& o = outcomes[k];
    try {
      const std::uint64_t seed_k = resampling_seed(options.seed, k);
      const PointCloud sample = options.sampler ? options.sampler(params.resample_size, seed_k)
                                                : resample(reference, params.resample_size, options.noise, seed_k);
      MatchResult r = match_point_clouds(reference, sample, options.match, &ref_bar);
      o.timings = r.timings;
      // reference vertices keep their indices in the union, and so do the keys
      for (const auto& m : r.matches) o.by_birth.emplace(m.alpha.birth_simplex, m.affinities);
    } catch (const std::exception& e) {
      o.failed = true;
      o.message = e.what();
      o.by_birth.clear();
    }
  };

  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, K));
  if (jobs == 1) {
    for (std::size_t k = 0; k < K; ++k) run(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (std::size_t j = 0; j < jobs; ++j)
      workers.emplace_back([&] {
        for (std::size_t k; (k = next.fetch_add(1)) < K;) run(k);
      });
  }

  for (std::size_t i : scored) {
    BarPrevalence bar;
    bar.bar = ref_bar.pairs[i];
    double sum = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
      ResamplingEntry e;
      e.failed = outcomes[k].failed;
      const auto it = outcomes[k].by_birth.find(bar.bar.birth_simplex);
      if (it != outcomes[k].by_birth.end()) {
        e.matched = true;
        e.affinities = it->second;
      }
      sum += e.affinities.get(options.kind);
      bar.per_resampling.push_back(e);
    }
    bar.prevalence = sum / static_cast<double>(K);
    report.bars.push_back(std::move(bar));
  }
  for (std::size_t k = 0; k < K; ++k) {
    if (outcomes[k].failed) report.failures.push_back({k, outcomes[k].message});
    report.timings.push_back(outcomes[k].timings);
  }
  return report;
}

PrevalenceReport prevalence(const PointCloud& reference, std::size_t resamples, std::size_t resample_size,
                            double noise, AffinityKind kind, std::uint64_t seed) {
  PrevalenceOptions options;
  options.resamples = resamples;
  options.resample_size = resample_size;
  options.noise = noise;
  options.kind = kind;
  options.seed = seed;
  return prevalence(reference, options);
}

}  // namespace cyclematch
