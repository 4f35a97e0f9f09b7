#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclematch/barcode.hpp"
#include "cyclematch/image.hpp"
#include "cyclematch/matching.hpp"
#include "cyclematch/point_cloud.hpp"

namespace cyclematch {

struct MatchOptions {
  int maxdim = 1;
  // Default: the largest enclosing radius among X, Y and their union, so
  // every bar in degree >= 1 of all four barcodes is finite.
  std::optional<double> threshold;
  coefficient_t field_char = 2;
  bool apparent_pairs = true;
};

// Wall-clock seconds per stage of one matching.
struct StageTimings {
  double barcode = 0.0;  // barcodes of the clouds (X skipped when supplied)
  double image = 0.0;    // both image barcodes in the union
  double match = 0.0;
};

// Everything in the union's index space: X occupies 0..n_x-1, Y follows.
struct MatchResult {
  std::size_t n_x = 0, n_y = 0;
  double threshold = 0.0;
  Barcode bar_x, bar_y;
  ImageBarcode img_x, img_y;
  std::vector<IntervalMatch> matches;
  StageTimings timings;
};

double match_threshold(const PointCloud& x, const PointCloud& y);

// bar_x may be supplied when it was computed on x alone with the same field
// and a threshold at or above the enclosing radius of x; positive-length
// bars do not depend on the threshold beyond that radius.
MatchResult match_point_clouds(const PointCloud& x, const PointCloud& y, const MatchOptions& options = {},
                               const Barcode* bar_x = nullptr);

// Bars of frame f are identified by their simplex keys in frame f's own
// index space.
struct TrackLink {
  std::size_t frame = 0;
  PersistencePair bar;

  friend bool operator==(const TrackLink&, const TrackLink&) = default;
};

struct TrackChain {
  std::size_t id = 0;
  int dim = 0;
  std::vector<TrackLink> links;  // consecutive frames

  friend bool operator==(const TrackChain&, const TrackChain&) = default;
};

struct FrameDiagnostic {
  std::size_t frame = 0;  // first frame of the failed pair
  std::string message;

  friend bool operator==(const FrameDiagnostic&, const FrameDiagnostic&) = default;
};

struct TrackResult {
  std::vector<std::string> frames;
  std::vector<std::optional<std::vector<IntervalMatch>>> matches;  // per consecutive pair
  std::vector<TrackChain> chains;
  std::vector<FrameDiagnostic> diagnostics;

  friend bool operator==(const TrackResult&, const TrackResult&) = default;
};

// Matches consecutive frames and links matched bars into chains. Every
// finite positive-length bar of every frame belongs to exactly one chain;
// chains are ordered by (first frame, dim, birth, death) and numbered in
// that order. A failing pair is reported and breaks the chains through it.
TrackResult track(const std::vector<PointCloud>& frames, const MatchOptions& options = {});

}  // namespace cyclematch
