#include "cyclematch/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "cyclematch/error.hpp"

namespace cyclematch {

namespace {

bool is_separator(char c) { return c == ',' || c == ' ' || c == '\t' || c == '\r'; }

// Splits a line into numbers; `line_no` is 1-based.
void parse_numbers(const std::string& line, std::size_t line_no, std::vector<double>& out) {
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && is_separator(line[pos])) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !is_separator(line[end])) ++end;
    const char* first = line.data() + pos;
    const char* last = line.data() + end;
    if (*first == '+') ++first;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
      throw ParseError(line_no, pos + 1, "cannot parse '" + line.substr(pos, end - pos) + "' as a number");
    if (!std::isfinite(value)) throw ParseError(line_no, pos + 1, "number is not finite");
    out.push_back(value);
    pos = end;
  }
}

bool skippable(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!is_separator(c)) return false;
  }
  return true;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

}  // namespace

PointCloud read_point_cloud(std::istream& in, std::string id) {
  std::vector<double> coords;
  std::vector<double> row;
  std::size_t dim = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    row.clear();
    parse_numbers(line, line_no, row);
    if (dim == 0) {
      dim = row.size();
    } else if (row.size() != dim) {
      throw DimensionMismatchError("line " + std::to_string(line_no) + ": expected " +
                                   std::to_string(dim) + " coordinates, found " +
                                   std::to_string(row.size()));
    }
    coords.insert(coords.end(), row.begin(), row.end());
  }
  if (coords.empty()) throw EmptyInputError("point cloud file contains no points");
  return PointCloud(dim, std::move(coords), std::move(id));
}

PointCloud read_point_cloud_file(const std::string& path) {
  auto in = open(path);
  return read_point_cloud(in, path);
}

DistanceMatrix read_lower_distance(std::istream& in) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    parse_numbers(line, line_no, values);
  }
  if (values.empty()) throw EmptyInputError("distance matrix file contains no entries");
  std::size_t n = 1;
  while (n * (n - 1) / 2 < values.size()) ++n;
  if (n * (n - 1) / 2 != values.size())
    throw InputError(std::to_string(values.size()) +
                     " entries do not form the lower triangle of a square matrix");
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] < 0.0) throw InputError("negative distance in lower triangle");
  return DistanceMatrix::from_lower_triangle(n, values);
}

DistanceMatrix read_lower_distance_file(const std::string& path) {
  auto in = open(path);
  return read_lower_distance(in);
}

void write_point_cloud(std::ostream& out, const PointCloud& cloud) {
  out << std::setprecision(17);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto p = cloud.point(i);
    for (std::size_t c = 0; c < p.size(); ++c) out << (c ? "," : "") << p[c];
    out << '\n';
  }
}

void write_lower_distance(std::ostream& out, const DistanceMatrix& dmat) {
  out << std::setprecision(17);
  for (std::size_t i = 0; i < dmat.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) out << (j ? "," : "") << dmat(i, j);
    out << '\n';
  }
}

}  // namespace cyclematch
