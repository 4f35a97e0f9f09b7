#pragma once

#include <iosfwd>
#include <string>

#include "cyclematch/distance_matrix.hpp"
#include "cyclematch/point_cloud.hpp"

namespace cyclematch {

// One point per line, coordinates separated by commas and/or whitespace.
// Blank lines and lines starting with '#' are skipped. Throws ParseError
// (with line and column), DimensionMismatchError, or EmptyInputError.
PointCloud read_point_cloud(std::istream& in, std::string id = {});
PointCloud read_point_cloud_file(const std::string& path);

// Strict lower triangle, one row per point, the first row empty or absent.
// Numbers are read in sequence regardless of line breaks; their count must
// be n(n-1)/2 for some n.
DistanceMatrix read_lower_distance(std::istream& in);
DistanceMatrix read_lower_distance_file(const std::string& path);

void write_point_cloud(std::ostream& out, const PointCloud& cloud);
void write_lower_distance(std::ostream& out, const DistanceMatrix& dmat);

}  // namespace cyclematch
