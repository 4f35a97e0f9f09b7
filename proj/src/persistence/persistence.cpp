#include "cyclematch/persistence.hpp"

#include <cmath>
#include <map>
#include <unordered_map>

#include "cyclematch/error.hpp"
#include "cyclematch/field.hpp"
#include "cyclematch/simplex.hpp"
#include "engine.hpp"

namespace cyclematch {

namespace {

double resolve_threshold(const DistanceMatrix& dmat, const std::optional<double>& threshold) {
  const double thr = threshold ? *threshold : default_threshold(dmat);
  if (std::isnan(thr) || thr < 0.0) throw InputError("threshold must be >= 0");
  return thr;
}

void assign_natural_indices(Barcode& barcode, const ReindexMap& map) {
  for (auto& p : barcode.pairs) {
    p.birth_index = map.step_of(p.birth_value, p.dim);
    p.death_index = p.death_simplex ? map.step_of(p.death_value, p.dim + 1) - 1 : map.size();
  }
  barcode.reindex = map;
}

}  // namespace

Barcode compute_barcode(const DistanceMatrix& dmat, const PersistenceOptions& options) {
  require_prime_field(options.field_char);
  if (options.maxdim < 0) throw InputError("maxdim must be >= 0");
  const double thr = resolve_threshold(dmat, options.threshold);

  detail::EngineConfig config;
  config.super = &dmat;
  config.sub = &dmat;
  config.maxdim = options.maxdim;
  config.threshold = thr;
  config.field_char = options.field_char;
  config.apparent_pairs = options.apparent_pairs;

  Barcode barcode;
  barcode.field_char = options.field_char;
  barcode.n_points = static_cast<index_t>(dmat.size());
  barcode.maxdim = options.maxdim;
  barcode.threshold = thr;
  for (const auto& raw : detail::run_engine(config)) {
    PersistencePair p;
    p.dim = raw.dim;
    p.birth_simplex = raw.birth;
    p.death_simplex = raw.death;
    p.birth_value = raw.birth_value;
    p.death_value = raw.death_value;
    barcode.pairs.push_back(p);
  }
  if (options.natural_indices) assign_natural_indices(barcode, natural_reindex_map(dmat, options.maxdim, thr));
  sort_pairs(barcode.pairs);
  return barcode;
}

Barcode compute_barcode(const DistanceMatrix& dmat, int maxdim, double threshold, coefficient_t field_char) {
  PersistenceOptions options;
  options.maxdim = maxdim;
  options.threshold = threshold;
  options.field_char = field_char;
  return compute_barcode(dmat, options);
}

Barcode brute_force_barcode(const DistanceMatrix& dmat, int maxdim, double threshold, coefficient_t field_char) {
  require_prime_field(field_char);
  if (maxdim < 0) throw InputError("maxdim must be >= 0");
  if (std::isnan(threshold) || threshold < 0.0) throw InputError("threshold must be >= 0");
  const PrimeField field(field_char);
  const auto n = static_cast<index_t>(dmat.size());

  Barcode barcode;
  barcode.field_char = field_char;
  barcode.n_points = n;
  barcode.maxdim = maxdim;
  barcode.threshold = threshold;
  if (n == 0) return barcode;

  const auto stream = simplexwise_stream(dmat, maxdim, threshold);
  std::map<SimplexKey, std::size_t> position;
  for (std::size_t i = 0; i < stream.size(); ++i) position[stream[i]] = i;

  // columns as sorted (row, coefficient) lists
  using Column = std::vector<std::pair<std::size_t, coefficient_t>>;
  std::vector<Column> columns(stream.size());
  for (std::size_t j = 0; j < stream.size(); ++j) {
    for (const auto& face : boundary_faces(stream[j], n))
      columns[j].push_back({position.at(face.key), field.normalize(face.sign)});
    std::sort(columns[j].begin(), columns[j].end());
  }

  std::unordered_map<std::size_t, std::size_t> column_with_low;
  std::vector<bool> is_low(stream.size(), false);
  std::vector<bool> nonzero(stream.size(), false);
  for (std::size_t j = 0; j < stream.size(); ++j) {
    Column& col = columns[j];
    while (!col.empty()) {
      const auto [low, coeff] = col.back();
      const auto it = column_with_low.find(low);
      if (it == column_with_low.end()) break;
      const Column& other = columns[it->second];
      const coefficient_t factor = field.mul(field.neg(coeff), field.inverse(other.back().second));
      Column merged;
      std::size_t a = 0, b = 0;
      while (a < col.size() || b < other.size()) {
        if (b == other.size() || (a < col.size() && col[a].first < other[b].first)) {
          merged.push_back(col[a++]);
        } else if (a == col.size() || other[b].first < col[a].first) {
          merged.push_back({other[b].first, field.mul(factor, other[b].second)});
          ++b;
        } else {
          const coefficient_t c = field.add(col[a].second, field.mul(factor, other[b].second));
          if (c != 0) merged.push_back({col[a].first, c});
          ++a;
          ++b;
        }
      }
      col = std::move(merged);
    }
    if (!col.empty()) {
      column_with_low[col.back().first] = j;
      is_low[col.back().first] = true;
      nonzero[j] = true;
    }
  }

  for (std::size_t j = 0; j < stream.size(); ++j) {
    if (nonzero[j]) {
      const std::size_t i = columns[j].back().first;
      PersistencePair p;
      p.dim = stream[i].dim;
      p.birth_simplex = stream[i];
      p.death_simplex = stream[j];
      p.birth_value = simplex_diameter(stream[i], dmat);
      p.death_value = simplex_diameter(stream[j], dmat);
      barcode.pairs.push_back(p);
    } else if (!is_low[j] && stream[j].dim <= maxdim) {
      PersistencePair p;
      p.dim = stream[j].dim;
      p.birth_simplex = stream[j];
      p.birth_value = simplex_diameter(stream[j], dmat);
      barcode.pairs.push_back(p);
    }
  }
  assign_natural_indices(barcode, reindex_map_from_stream(stream, dmat));
  sort_pairs(barcode.pairs);
  return barcode;
}

}  // namespace cyclematch
