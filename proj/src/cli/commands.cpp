#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "cyclematch/error.hpp"
#include "cyclematch/field.hpp"
#include "cyclematch/io.hpp"
#include "cyclematch/persistence.hpp"
#include "json_io.hpp"
#include "render.hpp"

namespace cyclematch {

namespace {

struct Config {
  std::vector<std::string> inputs;
  std::string format = "pointcloud";
  std::string output;
  int maxdim = 1;
  std::optional<double> threshold;
  coefficient_t field = 2;
  std::string affinity = "A";
  std::size_t resamples = 20;
  std::size_t resample_size = 0;
  std::size_t reference_size = 0;
  double noise = 0.1;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::string resample_mode = "bootstrap";
  bool keep_zero = false;
  bool timings = false;
  bool coordinates = false;
};

std::size_t default_jobs() {
  if (const char* env = std::getenv("CYCLEMATCH_JOBS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1;
}

MatchOptions match_options(const Config& c) {
  MatchOptions o;
  o.maxdim = c.maxdim;
  o.threshold = c.threshold;
  o.field_char = c.field;
  return o;
}

void validate(const Config& c) {
  if (c.maxdim < 0) throw InputError("--maxdim must be non-negative");
  if (c.threshold && !(*c.threshold > 0.0)) throw InputError("--threshold must be positive");
  require_prime_field(c.field);
  if (c.jobs == 0) throw InputError("--jobs must be positive");
}

PointCloud load_cloud(const Config& c, const std::string& path) {
  if (c.format != "pointcloud") throw InputError("this command needs point-cloud input (--format pointcloud)");
  return read_point_cloud_file(path);
}

void emit(const Config& c, std::ostream& out, const std::string& text) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + c.output + " for writing");
  file << text;
  if (!file) throw std::runtime_error("failed writing " + c.output);
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void print_timings(std::ostream& err, const char* label, const StageTimings& t) {
  err << label << " barcode " << t.barcode << " s, image " << t.image << " s, match " << t.match << " s\n";
}

void cmd_barcode(const Config& c, std::ostream& out) {
  DistanceMatrix d;
  if (c.format == "lowerdist")
    d = read_lower_distance_file(c.inputs.at(0));
  else
    d = pairwise_distances(read_point_cloud_file(c.inputs.at(0)));
  PersistenceOptions o;
  o.maxdim = c.maxdim;
  o.threshold = c.threshold;
  o.field_char = c.field;
  Barcode b = compute_barcode(d, o);
  if (!c.keep_zero) b = real_view(b);
  emit(c, out, dump(json_io::barcode_to_json(b.pairs)));
}

void cmd_match(const Config& c, std::ostream& out, std::ostream& err) {
  const PointCloud x = load_cloud(c, c.inputs.at(0));
  const PointCloud y = load_cloud(c, c.inputs.at(1));
  const MatchResult r = match_point_clouds(x, y, match_options(c));
  if (c.timings) print_timings(err, "match:", r.timings);
  emit(c, out, dump(json_io::matches_to_json(r.matches)));
}

int cmd_track(const Config& c, std::ostream& out, std::ostream& err) {
  std::vector<PointCloud> frames;
  for (const auto& path : c.inputs) {
    PointCloud f = load_cloud(c, path);
    frames.emplace_back(f.ambient_dim(), std::vector<double>(f.coords().begin(), f.coords().end()), path);
  }
  const TrackResult r = track(frames, match_options(c));
  for (const auto& d : r.diagnostics) err << "warning: " << d.message << '\n';
  emit(c, out, dump(json_io::track_to_json(r)));
  return r.diagnostics.empty() ? kExitOk : kExitInput;
}

PointCloud subsample(const PointCloud& cloud, std::size_t n, std::uint64_t seed) {
  if (n == 0 || n >= cloud.size()) return cloud;
  std::vector<std::size_t> all(cloud.size()), picked;
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::mt19937_64 rng(seed ^ 0x5eedf00dULL);
  std::sample(all.begin(), all.end(), std::back_inserter(picked), n, rng);
  std::vector<double> coords;
  for (std::size_t i : picked) {
    const auto p = cloud.point(i);
    coords.insert(coords.end(), p.begin(), p.end());
  }
  return PointCloud(cloud.ambient_dim(), std::move(coords));
}

void cmd_prevalence(const Config& c, std::ostream& out, std::ostream& err) {
  if (c.resamples == 0) throw InputError("--resamples must be positive");
  if (c.noise < 0.0) throw InputError("--noise must be non-negative");
  const PointCloud reference = subsample(load_cloud(c, c.inputs.at(0)), c.reference_size, c.seed);
  PrevalenceOptions o;
  o.resamples = c.resamples;
  o.resample_size = c.resample_size;
  o.noise = c.noise;
  o.seed = c.seed;
  o.kind = parse_affinity(c.affinity);
  o.jobs = c.jobs;
  o.match = match_options(c);
  o.mode = c.resample_mode;
  if (c.resample_mode == "fresh") {
    o.noise = 0.0;
    o.sampler = [&reference](std::size_t n, std::uint64_t seed) { return uniform_in_bounding_box(reference, n, seed); };
  }
  const PrevalenceReport r = prevalence(reference, o);
  for (const auto& f : r.failures) err << "warning: resampling " << f.k << " failed: " << f.message << '\n';
  if (c.timings)
    for (std::size_t k = 0; k < r.timings.size(); ++k)
      print_timings(err, ("resampling " + std::to_string(k) + ":").c_str(), r.timings[k]);
  emit(c, out, dump(json_io::prevalence_to_json(r)));
}

void cmd_cycles(const Config& c, std::ostream& out) {
  std::optional<PointCloud> cloud;
  DistanceMatrix d;
  if (c.format == "lowerdist") {
    d = read_lower_distance_file(c.inputs.at(0));
  } else {
    cloud = read_point_cloud_file(c.inputs.at(0));
    d = pairwise_distances(*cloud);
  }
  PersistenceOptions o;
  o.maxdim = c.maxdim;
  o.threshold = c.threshold;
  o.field_char = c.field;
  const Barcode b = compute_barcode(d, o);
  const auto cycles = representative_cycles(d, b);
  const PointCloud* points = (cloud && c.coordinates) ? &*cloud : nullptr;
  emit(c, out, dump(json_io::cycles_to_json(cycles, static_cast<index_t>(d.size()), points)));
}

void cmd_render(const Config& c, std::ostream& out) {
  std::ifstream in(c.inputs.at(0), std::ios::binary);
  if (!in) throw InputError("cannot open " + c.inputs.at(0));
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(c.inputs.at(0) + ": " + e.what());
  }
  emit(c, out, render_svg(render_bars_from_json(doc)));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  c.jobs = default_jobs();
  CLI::App app{"Cycle matching and prevalence for Vietoris-Rips persistence", "cyclematch"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--maxdim", c.maxdim, "Highest homology degree")->capture_default_str();
    sub->add_option("--threshold", c.threshold, "Filtration threshold (default: enclosing radius)");
    sub->add_option("--field", c.field, "Prime field characteristic")->capture_default_str();
    sub->add_option("--format", c.format, "Input format")
        ->check(CLI::IsMember({"pointcloud", "lowerdist"}))
        ->capture_default_str();
    sub->add_option("-o,--output", c.output, "Output file (default: stdout)");
  };

  auto* barcode = app.add_subcommand("barcode", "Persistence barcode as JSON");
  common(barcode);
  barcode->add_option("input", c.inputs, "Input file")->required()->expected(1);
  barcode->add_flag("--keep-zero", c.keep_zero, "Keep zero-length intervals");

  auto* match = app.add_subcommand("match", "Match the bars of two point clouds");
  common(match);
  match->add_option("inputs", c.inputs, "Two point-cloud files")->required()->expected(2);
  match->add_flag("--timings", c.timings, "Report stage timings on stderr");

  auto* trk = app.add_subcommand("track", "Match consecutive frames and chain the matches");
  common(trk);
  trk->add_option("inputs", c.inputs, "Frames in order")->required()->expected(2, 1 << 20);

  auto* prev = app.add_subcommand("prevalence", "Prevalence scores of the bars of a reference cloud");
  common(prev);
  prev->add_option("input", c.inputs, "Reference point cloud")->required()->expected(1);
  prev->add_option("--affinity", c.affinity, "Affinity kind")
      ->check(CLI::IsMember({"A", "B", "C", "D"}, CLI::ignore_case))
      ->capture_default_str();
  prev->add_option("--resamples", c.resamples, "Number of resamplings K")->capture_default_str();
  prev->add_option("--resample-size", c.resample_size, "Points per resampling N (default: reference size)");
  prev->add_option("--reference-size", c.reference_size, "Seeded subsample of the reference (default: all)");
  prev->add_option("--noise", c.noise, "Gaussian noise per coordinate")->capture_default_str();
  prev->add_option("--seed", c.seed, "Random seed")->required();
  prev->add_option("--jobs", c.jobs, "Concurrent resamplings (default: $CYCLEMATCH_JOBS or 1)");
  prev->add_option("--resample-mode", c.resample_mode,
                   "bootstrap: draw from the reference with noise; fresh: uniform in its bounding box")
      ->check(CLI::IsMember({"bootstrap", "fresh"}))
      ->capture_default_str();
  prev->add_flag("--timings", c.timings, "Report stage timings on stderr");

  auto* cycles = app.add_subcommand("cycles", "Representative cycles of the finite bars");
  common(cycles);
  cycles->add_option("input", c.inputs, "Input file")->required()->expected(1);
  cycles->add_flag("--coordinates", c.coordinates, "Include vertex coordinates");

  auto* render = app.add_subcommand("render", "SVG of a barcode or prevalence report");
  render->add_option("input", c.inputs, "Barcode or prevalence JSON")->required()->expected(1);
  render->add_option("-o,--output", c.output, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    validate(c);
    if (barcode->parsed()) cmd_barcode(c, out);
    else if (match->parsed()) cmd_match(c, out, err);
    else if (trk->parsed()) return cmd_track(c, out, err);
    else if (prev->parsed()) cmd_prevalence(c, out, err);
    else if (cycles->parsed()) cmd_cycles(c, out);
    else if (render->parsed()) cmd_render(c, out);
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace cyclematch
