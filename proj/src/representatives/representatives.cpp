#include "cyclematch/representatives.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "cyclematch/error.hpp"
#include "cyclematch/field.hpp"
#include "cyclematch/filtration.hpp"
#include "cyclematch/simplex.hpp"

namespace cyclematch {

namespace {

// Position of a face in the filtration: diameter ascending, cindex descending.
struct RowKey {
  double diameter;
  index_t cindex;

  bool operator<(const RowKey& o) const {
    if (diameter != o.diameter) return diameter < o.diameter;
    return cindex > o.cindex;
  }
};

using Column = std::map<RowKey, coefficient_t>;

}  // namespace

std::vector<std::pair<SimplexKey, coefficient_t>> chain_boundary(const std::vector<SimplexKey>& chain,
                                                                  const std::vector<coefficient_t>& coefficients,
                                                                  index_t n, coefficient_t field_char) {
  if (chain.size() != coefficients.size()) throw InputError("chain and coefficients differ in length");
  const PrimeField field(field_char);
  std::map<SimplexKey, coefficient_t> sum;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i].dim == 0) continue;
    for (const auto& f : boundary_faces(chain[i], n)) {
      auto& c = sum[f.key];
      c = field.add(c, field.mul(field.normalize(coefficients[i]), field.normalize(f.sign)));
    }
  }
  std::vector<std::pair<SimplexKey, coefficient_t>> out;
  for (const auto& [k, c] : sum)
    if (c != 0) out.emplace_back(k, c);
  return out;
}

std::vector<RepresentativeCycle> representative_cycles(const DistanceMatrix& dmat, const Barcode& barcode) {
  const auto n = static_cast<index_t>(dmat.size());
  if (barcode.n_points != n) throw CompatibilityError("barcode and metric have different numbers of points");
  const PrimeField field(barcode.field_char);
  const FiltrationOrder order(dmat, barcode.threshold);

  std::vector<RepresentativeCycle> out;
  for (int dim = 1; dim <= barcode.maxdim; ++dim) {
    // every death simplex takes part: zero-length pairs still clear pivots
    std::vector<const PersistencePair*> pairs;
    for (const auto& p : barcode.pairs)
      if (p.dim == dim && !p.essential()) pairs.push_back(&p);
    std::sort(pairs.begin(), pairs.end(), [&](const PersistencePair* a, const PersistencePair* b) {
      return order(*a->death_simplex, *b->death_simplex);
    });

    std::unordered_map<index_t, Column> by_low;  // low cindex -> reduced column
    for (const PersistencePair* p : pairs) {
      const SimplexKey& tau = *p->death_simplex;
      if (tau.dim != dim + 1 || !order.contains(tau))
        throw CompatibilityError("death simplex is not part of the filtration");
      Column col;
      for (const auto& f : boundary_faces(tau, n))
        col[{simplex_diameter(f.key, dmat), f.key.cindex}] = field.normalize(f.sign);
      while (!col.empty()) {
        const auto low = std::prev(col.end());
        const auto it = by_low.find(low->first.cindex);
        if (it == by_low.end()) break;
        const Column& other = it->second;
        const coefficient_t factor =
            field.mul(low->second, field.inverse(std::prev(other.end())->second));
        for (const auto& [row, c] : other) {
          auto& entry = col[row];
          entry = field.sub(entry, field.mul(factor, c));
          if (entry == 0) col.erase(row);
        }
      }
      if (col.empty() || std::prev(col.end())->first.cindex != p->birth_simplex.cindex)
        throw CompatibilityError("barcode pairing does not match the reduction of the metric's boundary matrix");

      if (p->death_value > p->birth_value) {
        RepresentativeCycle cycle;
        cycle.pair = *p;
        cycle.field_char = barcode.field_char;
        std::vector<std::pair<index_t, coefficient_t>> terms;
        for (const auto& [row, c] : col) terms.emplace_back(row.cindex, c);
        std::sort(terms.begin(), terms.end());
        for (const auto& [ci, c] : terms) {
          cycle.chain.push_back({dim, ci});
          cycle.coefficients.push_back(c);
        }
        out.push_back(std::move(cycle));
      }
      const index_t low = std::prev(col.end())->first.cindex;
      by_low.emplace(low, std::move(col));
    }
  }
  return out;
}

}  // namespace cyclematch
