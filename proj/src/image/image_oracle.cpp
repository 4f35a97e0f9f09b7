#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "cyclematch/error.hpp"
#include "cyclematch/filtration.hpp"
#include "cyclematch/image.hpp"
#include "cyclematch/linalg.hpp"
#include "cyclematch/simplex.hpp"

namespace cyclematch {

namespace {

constexpr std::size_t kOracleMaxPoints = 12;

struct Step {
  SimplexKey key;
  double super_value = 0.0;
  double sub_value = 0.0;
  bool super_event = false;
  bool sub_event = false;
};

struct Event {
  double value;
  SimplexKey key;
  bool super;
};

// Merged sequence of super and sub insertions. A simplex entering both at
// the same value occupies a single step.
std::vector<Step> merged_timeline(const ImageProblem& problem) {
  std::vector<Event> events;
  for (const auto& key : simplexwise_stream(problem.d_super, problem.maxdim, problem.threshold))
    events.push_back({simplex_diameter(key, problem.d_super), key, true});
  for (const auto& key : simplexwise_stream(problem.d_sub, problem.maxdim, problem.threshold))
    events.push_back({simplex_diameter(key, problem.d_sub), key, false});
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.key.dim != b.key.dim) return a.key.dim < b.key.dim;
    if (a.key.cindex != b.key.cindex) return a.key.cindex > b.key.cindex;
    return a.super && !b.super;
  });
  std::vector<Step> steps;
  for (const auto& e : events) {
    if (!e.super && !steps.empty() && steps.back().key == e.key && steps.back().super_event &&
        steps.back().super_value == e.value) {
      steps.back().sub_event = true;
      steps.back().sub_value = e.value;
      continue;
    }
    Step s;
    s.key = e.key;
    if (e.super) {
      s.super_event = true;
      s.super_value = e.value;
    } else {
      s.sub_event = true;
      s.sub_value = e.value;
    }
    steps.push_back(s);
  }
  return steps;
}

std::vector<coefficient_t> boundary_vector(const SimplexKey& key, index_t n,
                                           const std::map<index_t, std::size_t>& coords,
                                           const PrimeField& field) {
  std::vector<coefficient_t> v(coords.size(), 0);
  for (const auto& face : boundary_faces(key, n)) {
    const auto it = coords.find(face.key.cindex);
    if (it == coords.end()) throw InvariantError("face missing from the super filtration");
    v[it->second] = field.normalize(face.sign);
  }
  return v;
}

// rank tables indexed [a][b]: a = number of sub k-simplices, b = number of
// super (k+1)-simplices.
struct CountTables {
  std::size_t a_max = 0, b_max = 0;
  std::vector<index_t> homology, cohomology;
};

CountTables count_tables(const std::vector<Step>& steps, int k, index_t n, const PrimeField& field) {
  std::vector<SimplexKey> sub_k, super_km1, super_k, super_k1;
  for (const auto& s : steps) {
    if (s.sub_event && s.key.dim == k) sub_k.push_back(s.key);
    if (s.super_event && s.key.dim == k - 1) super_km1.push_back(s.key);
    if (s.super_event && s.key.dim == k) super_k.push_back(s.key);
    if (s.super_event && s.key.dim == k + 1) super_k1.push_back(s.key);
  }
  std::map<index_t, std::size_t> coord_km1, coord_k;
  for (const auto& key : super_km1) coord_km1.emplace(key.cindex, coord_km1.size());
  for (const auto& key : super_k) coord_k.emplace(key.cindex, coord_k.size());

  const std::size_t A = sub_k.size(), B = super_k1.size(), m = super_k.size();
  std::vector<std::size_t> sub_coord(A);
  std::vector<bool> is_sub(m, false);
  for (std::size_t a = 0; a < A; ++a) {
    const auto it = coord_k.find(sub_k[a].cindex);
    if (it == coord_k.end()) throw InvariantError("sub simplex missing from the super filtration");
    sub_coord[a] = it->second;
    is_sub[it->second] = true;
  }

  // rank of the boundary map on the first a sub k-simplices
  std::vector<index_t> sub_boundary_rank(A + 1, 0);
  if (k > 0) {
    RowBasis basis(coord_km1.size(), field);
    for (std::size_t a = 0; a < A; ++a) {
      basis.insert(boundary_vector(sub_k[a], n, coord_km1, field));
      sub_boundary_rank[a + 1] = static_cast<index_t>(basis.rank());
    }
  }

  std::vector<std::vector<coefficient_t>> boundaries;
  for (const auto& key : super_k1) boundaries.push_back(boundary_vector(key, n, coord_k, field));

  CountTables t;
  t.a_max = A;
  t.b_max = B;
  t.homology.assign((A + 1) * (B + 1), 0);
  t.cohomology.assign((A + 1) * (B + 1), 0);

  // rows outside S_a form a prefix of: non-sub rows, then sub rows from last to first
  std::vector<std::size_t> row_order;
  for (std::size_t r = 0; r < m; ++r)
    if (!is_sub[r]) row_order.push_back(r);
  const std::size_t non_sub = row_order.size();
  for (std::size_t a = A; a-- > 0;) row_order.push_back(sub_coord[a]);

  for (std::size_t b = 0; b <= B; ++b) {
    std::vector<index_t> prefix_rank(m + 1, 0);
    {
      RowBasis basis(b, field);
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<coefficient_t> row(b);
        for (std::size_t c = 0; c < b; ++c) row[c] = boundaries[c][row_order[i]];
        if (b > 0) basis.insert(std::move(row));
        prefix_rank[i + 1] = static_cast<index_t>(basis.rank());
      }
    }
    const index_t rank_b = prefix_rank[m];

    DenseMatrix delta(b, m);
    for (std::size_t c = 0; c < b; ++c)
      for (std::size_t r = 0; r < m; ++r) delta.at(c, r) = boundaries[c][r];
    const auto kernel = nullspace(delta, field);
    RowBasis restricted(kernel.size(), field);

    for (std::size_t a = 0; a <= A; ++a) {
      if (a > 0 && !kernel.empty()) {
        std::vector<coefficient_t> column(kernel.size());
        for (std::size_t v = 0; v < kernel.size(); ++v) column[v] = kernel[v][sub_coord[a - 1]];
        restricted.insert(std::move(column));
      }
      const index_t cycles = static_cast<index_t>(a) - sub_boundary_rank[a];
      const index_t bounded = rank_b - prefix_rank[non_sub + (A - a)];
      t.homology[a * (B + 1) + b] = cycles - bounded;
      t.cohomology[a * (B + 1) + b] = static_cast<index_t>(restricted.rank()) - sub_boundary_rank[a];
    }
  }
  return t;
}

void check_scale(const ImageProblem& problem) {
  validate_nested(problem.d_sub, problem.d_super);
  require_prime_field(problem.field_char);
  if (problem.maxdim < 0) throw InputError("maxdim must be >= 0");
  if (std::isnan(problem.threshold) || problem.threshold < 0.0) throw InputError("threshold must be >= 0");
  if (problem.d_super.size() > kOracleMaxPoints)
    throw OracleScaleError("rank oracle is limited to " + std::to_string(kOracleMaxPoints) + " points");
}

std::vector<ImageRankTable> rank_tables(const ImageProblem& problem, const std::vector<Step>& steps) {
  const PrimeField field(problem.field_char);
  const auto n = static_cast<index_t>(problem.d_super.size());
  const std::size_t T = steps.size();
  std::vector<ImageRankTable> tables;
  for (int k = 0; k <= problem.maxdim; ++k) {
    const CountTables counts = count_tables(steps, k, n, field);
    std::vector<std::size_t> a_at(T + 1, 0), b_at(T + 1, 0);
    for (std::size_t t = 0; t < T; ++t) {
      a_at[t + 1] = a_at[t] + (steps[t].sub_event && steps[t].key.dim == k ? 1 : 0);
      b_at[t + 1] = b_at[t] + (steps[t].super_event && steps[t].key.dim == k + 1 ? 1 : 0);
    }
    ImageRankTable table;
    table.dim = k;
    table.steps = T;
    table.homology.assign((T + 1) * (T + 1), 0);
    table.cohomology.assign((T + 1) * (T + 1), 0);
    for (std::size_t i = 0; i <= T; ++i)
      for (std::size_t j = i; j <= T; ++j) {
        const std::size_t cell = a_at[i] * (counts.b_max + 1) + b_at[j];
        table.homology[i * (T + 1) + j] = counts.homology[cell];
        table.cohomology[i * (T + 1) + j] = counts.cohomology[cell];
      }
    tables.push_back(std::move(table));
  }
  return tables;
}

}  // namespace

std::vector<ImageRankTable> image_rank_tables(const ImageProblem& problem) {
  check_scale(problem);
  return rank_tables(problem, merged_timeline(problem));
}

ImageBarcode oracle_image_barcode(const ImageProblem& problem) {
  check_scale(problem);
  const auto steps = merged_timeline(problem);
  const auto tables = rank_tables(problem, steps);
  const std::size_t T = steps.size();

  ImageBarcode barcode;
  barcode.field_char = problem.field_char;
  barcode.n_points = static_cast<index_t>(problem.d_super.size());
  barcode.maxdim = problem.maxdim;
  barcode.threshold = problem.threshold;

  for (const auto& table : tables) {
    const int k = table.dim;
    auto r = [&](std::size_t i, std::size_t j) { return table.homology_rank(i, j); };
    for (std::size_t i = 1; i <= T; ++i) {
      const Step& birth = steps[i - 1];
      const bool can_be_born = birth.sub_event && birth.key.dim == k;
      for (std::size_t j = i; j <= T; ++j) {
        index_t mult = r(i, j) - r(i - 1, j);
        if (j < T) mult -= r(i, j + 1) - r(i - 1, j + 1);
        if (mult == 0) continue;
        if (mult != 1 || !can_be_born)
          throw InvariantError("rank function gives multiplicity " + std::to_string(mult) + " at step " +
                               std::to_string(i));
        PersistencePair p;
        p.dim = k;
        p.birth_simplex = birth.key;
        p.birth_value = birth.sub_value;
        if (j < T) {
          const Step& death = steps[j];
          if (!death.super_event || death.key.dim != k + 1)
            throw InvariantError("interval closes at a step without a super (k+1)-simplex");
          p.death_simplex = death.key;
          p.death_value = death.super_value;
          barcode.finite_pairs.push_back(p);
        } else {
          barcode.essential_pairs.push_back(p);
        }
      }
    }
  }
  sort_pairs(barcode.finite_pairs);
  sort_pairs(barcode.essential_pairs);
  return barcode;
}

}  // namespace cyclematch
