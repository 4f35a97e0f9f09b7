// One PASS/FAIL line per acceptance criterion. `acceptance --full` runs the
// noise-prevalence profile at N = 1000 instead of the reduced N = 300.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "cycle_check.hpp"
#include "cyclematch/image.hpp"
#include "cyclematch/io.hpp"
#include "cyclematch/persistence.hpp"
#include "cyclematch/pipeline.hpp"
#include "cyclematch/prevalence.hpp"
#include "cyclematch/representatives.hpp"
#include "cyclematch/simplex.hpp"
#include "fixtures.hpp"

using namespace cyclematch;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned tolerances and budgets.
constexpr double kTriangleSeconds = 1.0;
constexpr double kPersistenceOracleSeconds = 60.0;
constexpr int kCircleShifts = 15;
constexpr int kCircleTrials = 15;
constexpr int kCircleViolationsAllowed = 1;
constexpr double kCircleFarShift = 1.25;
constexpr double kPrevalenceLow = 0.55;
constexpr double kPrevalenceHigh = 0.8;
constexpr double kReducedPrevalenceSeconds = 300.0;
constexpr double kSlopeLow = 2.3;
constexpr double kSlopeHigh = 4.2;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool matchable(const PersistencePair& p) { return !p.essential() && p.death_value > p.birth_value; }

Outcome triangle_ground_truth() {
  const auto t0 = Clock::now();
  const auto d = pairwise_distances(fixtures::triangle());
  const auto b = compute_barcode(d, 1, kInfinity);
  const double h = std::sqrt(3.0) / 2;
  const double short_edge = std::sqrt((1.0 - h) * (1.0 - h) + h * h);

  std::vector<std::pair<index_t, index_t>> h0, h1;
  for (const auto& p : b.pairs) (p.dim == 0 ? h0 : h1).emplace_back(p.birth_index, p.death_index);
  std::sort(h0.begin(), h0.end());
  const bool indices = h0 == std::vector<std::pair<index_t, index_t>>{{1, 1}, {1, 2}, {1, 5}} &&
                       h1 == std::vector<std::pair<index_t, index_t>>{{4, 4}};

  const auto real = real_view(b);
  std::vector<double> deaths;
  bool real_ok = true;
  for (const auto& p : real.pairs) {
    real_ok &= p.dim == 0 && p.birth_value == 0.0;
    deaths.push_back(p.death_value);
  }
  std::sort(deaths.begin(), deaths.end());
  real_ok &= deaths.size() == 3 && deaths[0] == short_edge && deaths[1] == 1.0 && std::isinf(deaths[2]);
  const double secs = seconds_since(t0);
  return {indices && real_ok && secs < kTriangleSeconds,
          fmt("natural indices %s, real view %s, %.4f s", indices ? "ok" : "WRONG", real_ok ? "ok" : "WRONG", secs)};
}

Outcome persistence_oracle() {
  const auto t0 = Clock::now();
  int mismatches = 0, runs = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 3 + seed % 10;  // 3..12
    const auto d = pairwise_distances(fixtures::uniform_cube(n, 2 + seed % 3, 10'000 + seed));
    for (coefficient_t p : {2, 3}) {
      const double thr = seed % 4 == 0 ? enclosing_radius(d) : kInfinity;
      ++runs;
      mismatches += fixtures::signature(compute_barcode(d, 2, thr, p).pairs) !=
                    fixtures::signature(brute_force_barcode(d, 2, thr, p).pairs);
    }
  }
  const double secs = seconds_since(t0);
  return {mismatches == 0 && secs < kPersistenceOracleSeconds,
          fmt("%d/%d barcodes differ, %.2f s", mismatches, runs, secs)};
}

Outcome image_oracle() {
  int mismatches = 0, rank_failures = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto inst = fixtures::nested_instance(20'000 + seed, 10);
    const ImageProblem problem{inst.sub, inst.super, 1};
    const auto fast = compute_image_barcode(problem);
    const auto oracle = oracle_image_barcode(problem);
    mismatches += fixtures::signature(fast.finite_pairs) != fixtures::signature(oracle.finite_pairs) ||
                  fixtures::signature(fast.essential_pairs) != fixtures::signature(oracle.essential_pairs);
    for (const auto& t : image_rank_tables(problem)) rank_failures += t.homology != t.cohomology;
  }
  return {mismatches == 0 && rank_failures == 0,
          fmt("%d/50 image barcodes differ, %d rank tables disagree", mismatches, rank_failures)};
}

Outcome self_matching() {
  int bad = 0;
  std::size_t bars = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 20 + (seed * 37) % 81;  // 20..100
    const auto x = fixtures::uniform_cube(n, 2 + seed % 2, 30'000 + seed);
    const auto r = match_point_clouds(x, x);
    const auto ni = static_cast<index_t>(n);
    std::size_t expected = 0;
    for (const auto& p : r.bar_x.pairs) expected += matchable(p);
    bars += expected;
    bad += r.matches.size() != expected;
    for (const auto& m : r.matches) {
      const auto copy = shift_simplex(m.alpha.birth_simplex, 2 * ni, ni, 2 * ni);
      bad += !(m.beta.birth_simplex == copy && m.affinities == Affinities{1, 1, 1, 1});
    }
  }
  return {bad == 0, fmt("%zu finite bars, %d not matched to their copy with affinity 1", bars, bad)};
}

Outcome circle_shift() {
  const auto t0 = Clock::now();
  std::vector<double> mean_a(kCircleShifts), mean_d(kCircleShifts);
  for (int s = 0; s < kCircleShifts; ++s) {
    const double shift = static_cast<double>(s) / (kCircleShifts - 1);
    for (int t = 0; t < kCircleTrials; ++t) {
      const std::uint64_t seed = 40'000 + 100 * s + 2 * t;
      const auto r = match_point_clouds(fixtures::circle(100, 0.0, 0.0, seed), fixtures::circle(100, shift, 0.0, seed + 1));
      // the match of X's main loop, if any
      double longest = 0.0, a = 0.0, d = 0.0;
      for (const auto& p : r.bar_x.pairs)
        if (p.dim == 1 && matchable(p)) longest = std::max(longest, p.length());
      for (const auto& m : r.matches)
        if (m.dim == 1 && m.alpha.length() == longest) {
          a = m.affinities.A;
          d = m.affinities.D;
        }
      mean_a[s] += a / kCircleTrials;
      mean_d[s] += d / kCircleTrials;
    }
  }
  int violations = 0;
  for (int s = 1; s < kCircleShifts; ++s) violations += mean_a[s] > mean_a[s - 1];
  int d_below = 0;
  for (int s = 1; s + 1 < kCircleShifts; ++s) d_below += mean_d[s] < mean_a[s];

  int far_matches = 0;
  for (double shift : {kCircleFarShift, 1.5, 2.0})
    for (int t = 0; t < kCircleTrials; ++t) {
      const std::uint64_t seed = 50'000 + static_cast<std::uint64_t>(shift * 1000) + 2 * t;
      const auto r = match_point_clouds(fixtures::circle(100, 0.0, 0.0, seed), fixtures::circle(100, shift, 0.0, seed + 1));
      for (const auto& m : r.matches) far_matches += m.dim == 1;
    }

  std::string curve;
  for (int s = 0; s < kCircleShifts; ++s) curve += fmt("%s%.2f/%.2f", s ? " " : "", mean_a[s], mean_d[s]);
  return {violations <= kCircleViolationsAllowed && d_below == 0 && far_matches == 0,
          fmt("%d monotonicity violations, %d shifts with mean D < mean A, %d loop matches at shift >= %.2f, %.0f s; "
              "A/D: ",
              violations, d_below, far_matches, kCircleFarShift, seconds_since(t0)) +
              curve};
}

Outcome noise_prevalence(bool full) {
  const std::size_t n = full ? 1000 : 300;
  const auto t0 = Clock::now();
  const auto ref = fixtures::uniform_square(n, 60'000);
  PrevalenceOptions o;
  o.resamples = 20;
  o.seed = 60'001;
  o.kind = AffinityKind::D;
  o.mode = "fresh";
  o.sampler = [](std::size_t m, std::uint64_t seed) { return fixtures::uniform_square(m, seed); };
  const auto report = prevalence(ref, o);
  double max_d = 0.0, max_a = 0.0;
  for (const auto& bar : report.bars) {
    double a = 0.0;
    for (const auto& e : bar.per_resampling) a += e.affinities.A;
    max_a = std::max(max_a, a / static_cast<double>(bar.per_resampling.size()));
    max_d = std::max(max_d, bar.prevalence);
  }
  const double secs = seconds_since(t0);
  const bool in_budget = full || secs < kReducedPrevalenceSeconds;
  return {max_d >= kPrevalenceLow && max_d <= kPrevalenceHigh && max_a < max_d && report.failures.empty() && in_budget,
          fmt("N = %zu, %zu bars, max prevalence D %.3f (want [%.2f, %.2f]), A %.3f, %.0f s", n, report.bars.size(),
              max_d, kPrevalenceLow, kPrevalenceHigh, max_a, secs)};
}

Outcome representatives() {
  int bad = 0, cycles = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 4 + seed % 7;  // 4..10
    const auto d = pairwise_distances(fixtures::uniform_cube(n, 2 + seed % 2, 70'000 + seed));
    for (coefficient_t p : {2, 3}) {
      const auto b = compute_barcode(d, 2, kInfinity, p);
      for (const auto& c : representative_cycles(d, b)) {
        ++cycles;
        bad += !fixtures::check_cycle(d, c).empty();
      }
    }
  }
  return {bad == 0 && cycles > 0, fmt("%d cycles, %d invalid", cycles, bad)};
}

Outcome scaling() {
  const std::vector<std::size_t> sizes{100, 200, 300, 500};
  constexpr int kRepeats = 5;
  std::vector<double> xs, ys;
  std::string detail;
  for (std::size_t n : sizes) {
    std::vector<double> times;
    for (int r = 0; r < kRepeats; ++r) {
      const auto x = fixtures::uniform_square(n, 80'000 + 10 * n + 2 * r);
      const auto y = fixtures::uniform_square(n, 80'001 + 10 * n + 2 * r);
      const auto t0 = Clock::now();
      match_point_clouds(x, y);
      times.push_back(seconds_since(t0));
    }
    std::sort(times.begin(), times.end());
    const double median = times[kRepeats / 2];
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(median));
    detail += fmt("N=%zu %.3fs ", n, median);
  }
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = sxy / sxx;
  return {slope >= kSlopeLow && slope <= kSlopeHigh,
          fmt("log-log slope %.2f (want [%.1f, %.1f]); ", slope, kSlopeLow, kSlopeHigh) + detail};
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "cyclematch_acceptance";
  std::filesystem::create_directories(dir);
  const auto input = (dir / "reference.txt").string();
  {
    std::ofstream out(input);
    write_point_cloud(out, fixtures::circle(60, 0.0, 0.1, 90'000));
  }
  std::vector<std::string> outputs;
  for (const char* jobs : {"1", "4", "8"}) {
    const char* argv[] = {"cyclematch", "prevalence", input.c_str(), "--resamples", "8", "--seed", "90001",
                          "--noise",    "0.1",        "--jobs",      jobs};
    std::ostringstream out, err;
    if (run_cli(static_cast<int>(std::size(argv)), argv, out, err) != 0) return {false, "prevalence failed: " + err.str()};
    outputs.push_back(out.str());
  }
  const bool same = outputs[0] == outputs[1] && outputs[0] == outputs[2];
  return {same, fmt("jobs 1/4/8 outputs %s (%zu bytes)", same ? "identical" : "DIFFER", outputs[0].size())};
}

}  // namespace

int main(int argc, char** argv) {
  bool full = false;
  for (int i = 1; i < argc; ++i) full |= std::strcmp(argv[i], "--full") == 0;

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"triangle-ground-truth", triangle_ground_truth},
      {"persistence-oracle", persistence_oracle},
      {"image-oracle", image_oracle},
      {"self-matching", self_matching},
      {"circle-shift-curve", circle_shift},
      {"noise-prevalence-profile", [full] { return noise_prevalence(full); }},
      {"representative-cycles", representatives},
      {"scaling-shape", scaling},
      {"determinism-under-parallelism", determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
