#pragma once

#include <vector>

#include <json.hpp>

#include "cyclematch/barcode.hpp"
#include "cyclematch/image.hpp"
#include "cyclematch/matching.hpp"
#include "cyclematch/pipeline.hpp"
#include "cyclematch/point_cloud.hpp"
#include "cyclematch/prevalence.hpp"
#include "cyclematch/representatives.hpp"

namespace cyclematch::json_io {

using nlohmann::json;

// Readers throw InputError on malformed documents.

json pair_to_json(const PersistencePair& p);
PersistencePair pair_from_json(const json& j);

// Array ordered by (dim, birth, death).
json barcode_to_json(const std::vector<PersistencePair>& pairs);
std::vector<PersistencePair> barcode_from_json(const json& j);

// Same layout, each element tagged "kind": "image"; births are simplices of
// the sub filtration, deaths of the super filtration.
json image_barcode_to_json(const ImageBarcode& barcode);
std::vector<PersistencePair> image_barcode_from_json(const json& j);

json matches_to_json(const std::vector<IntervalMatch>& matches);
std::vector<IntervalMatch> matches_from_json(const json& j);

json prevalence_to_json(const PrevalenceReport& report);
PrevalenceReport prevalence_from_json(const json& j);

// points, when given, adds the coordinates of every vertex of every simplex.
json cycles_to_json(const std::vector<RepresentativeCycle>& cycles, index_t n_points,
                    const PointCloud* points = nullptr);
std::vector<RepresentativeCycle> cycles_from_json(const json& j);

json track_to_json(const TrackResult& result);
TrackResult track_from_json(const json& j);

}  // namespace cyclematch::json_io
