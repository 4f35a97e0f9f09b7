#include "cyclematch/image.hpp"

#include <cmath>
#include <string>

#include "cyclematch/error.hpp"
#include "cyclematch/field.hpp"
#include "engine.hpp"

namespace cyclematch {

std::vector<PersistencePair> ImageBarcode::all_pairs() const {
  std::vector<PersistencePair> all = finite_pairs;
  all.insert(all.end(), essential_pairs.begin(), essential_pairs.end());
  sort_pairs(all);
  return all;
}

void validate_nested(const DistanceMatrix& d_sub, const DistanceMatrix& d_super) {
  if (d_sub.size() != d_super.size())
    throw NotNestedError("metrics have " + std::to_string(d_sub.size()) + " and " +
                         std::to_string(d_super.size()) + " points");
  const std::size_t n = d_sub.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (d_super.masked(i, j) && !d_sub.masked(i, j))
        throw NotNestedError("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                             ") is masked in the super metric only");
      if (!d_sub.masked(i, j) && d_sub(i, j) < d_super(i, j))
        throw NotNestedError("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                             ") of the sub metric is below the super metric");
    }
  }
}

ImageBarcode compute_image_barcode(const ImageProblem& problem) {
  validate_nested(problem.d_sub, problem.d_super);
  require_prime_field(problem.field_char);
  if (problem.maxdim < 0) throw InputError("maxdim must be >= 0");
  if (std::isnan(problem.threshold) || problem.threshold < 0.0) throw InputError("threshold must be >= 0");

  detail::EngineConfig config;
  config.super = &problem.d_super;
  config.sub = &problem.d_sub;
  config.maxdim = problem.maxdim;
  config.threshold = problem.threshold;
  config.field_char = problem.field_char;
  config.apparent_pairs = problem.apparent_pairs;

  ImageBarcode barcode;
  barcode.field_char = problem.field_char;
  barcode.n_points = static_cast<index_t>(problem.d_super.size());
  barcode.maxdim = problem.maxdim;
  barcode.threshold = problem.threshold;
  for (const auto& raw : detail::run_engine(config)) {
    PersistencePair p;
    p.dim = raw.dim;
    p.birth_simplex = raw.birth;
    p.death_simplex = raw.death;
    p.birth_value = raw.birth_value;
    p.death_value = raw.death_value;
    (p.essential() ? barcode.essential_pairs : barcode.finite_pairs).push_back(p);
  }
  sort_pairs(barcode.finite_pairs);
  sort_pairs(barcode.essential_pairs);
  return barcode;
}

}  // namespace cyclematch
