#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cyclematch/barcode.hpp"
#include "cyclematch/matching.hpp"
#include "cyclematch/pipeline.hpp"
#include "cyclematch/point_cloud.hpp"

namespace cyclematch {

// n draws with replacement, each coordinate perturbed by N(0, sigma^2).
PointCloud resample(const PointCloud& cloud, std::size_t n, double sigma, std::uint64_t seed);

// n points uniform in the axis-aligned bounding box of the cloud.
PointCloud uniform_in_bounding_box(const PointCloud& cloud, std::size_t n, std::uint64_t seed);

// Seed of resampling k, derived from the run seed.
std::uint64_t resampling_seed(std::uint64_t seed, std::size_t k);

using Sampler = std::function<PointCloud(std::size_t n, std::uint64_t seed)>;

struct PrevalenceOptions {
  std::size_t resamples = 20;
  std::size_t resample_size = 0;  // 0: size of the reference
  double noise = 0.1;
  std::uint64_t seed = 0;
  AffinityKind kind = AffinityKind::A;
  std::size_t jobs = 1;
  int min_dim = 1;  // bars of lower degree are not scored
  MatchOptions match;
  // Replaces bootstrap-plus-noise when set; receives (resample_size, seed_k).
  Sampler sampler;
  std::string mode = "bootstrap";  // recorded in the report only
};

struct ResamplingEntry {
  bool matched = false;
  bool failed = false;
  Affinities affinities;

  friend bool operator==(const ResamplingEntry&, const ResamplingEntry&) = default;
};

struct BarPrevalence {
  PersistencePair bar;
  double prevalence = 0.0;
  std::vector<ResamplingEntry> per_resampling;

  friend bool operator==(const BarPrevalence&, const BarPrevalence&) = default;
};

struct ResamplingFailure {
  std::size_t k = 0;
  std::string message;

  friend bool operator==(const ResamplingFailure&, const ResamplingFailure&) = default;
};

struct PrevalenceParams {
  std::size_t resamples = 0;
  std::size_t resample_size = 0;
  std::size_t reference_size = 0;
  double noise = 0.0;
  std::uint64_t seed = 0;
  AffinityKind kind = AffinityKind::A;
  int maxdim = 1;
  int min_dim = 1;
  coefficient_t field_char = 2;
  std::string mode;

  friend bool operator==(const PrevalenceParams&, const PrevalenceParams&) = default;
};

struct PrevalenceReport {
  PrevalenceParams params;
  std::vector<BarPrevalence> bars;  // reference bars, sorted
  std::vector<ResamplingFailure> failures;
  std::vector<StageTimings> timings;  // per resampling; not part of the report proper

  friend bool operator==(const PrevalenceReport& a, const PrevalenceReport& b) {
    return a.params == b.params && a.bars == b.bars && a.failures == b.failures;
  }
};

// Scores the finite positive-length bars of the reference (degree >= min_dim)
// by their mean affinity over the resamplings; unmatched or failed
// resamplings contribute 0. Up to `jobs` resamplings run at once; the result
// does not depend on the number of jobs.
PrevalenceReport prevalence(const PointCloud& reference, const PrevalenceOptions& options);
PrevalenceReport prevalence(const PointCloud& reference, std::size_t resamples, std::size_t resample_size,
                            double noise, AffinityKind kind, std::uint64_t seed);

}  // namespace cyclematch
