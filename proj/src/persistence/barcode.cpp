#include "cyclematch/barcode.hpp"

#include <algorithm>
#include <tuple>

#include "cyclematch/error.hpp"

namespace cyclematch {

bool pair_less(const PersistencePair& a, const PersistencePair& b) {
  const index_t da = a.death_simplex ? a.death_simplex->cindex : -1;
  const index_t db = b.death_simplex ? b.death_simplex->cindex : -1;
  return std::tie(a.dim, a.birth_value, a.death_value, a.birth_simplex.cindex, da) <
         std::tie(b.dim, b.birth_value, b.death_value, b.birth_simplex.cindex, db);
}

void sort_pairs(std::vector<PersistencePair>& pairs) { std::sort(pairs.begin(), pairs.end(), pair_less); }

std::vector<PersistencePair> Barcode::in_dimension(int dim) const {
  std::vector<PersistencePair> out;
  for (const auto& p : pairs)
    if (p.dim == dim) out.push_back(p);
  return out;
}

Barcode real_view(const Barcode& barcode) {
  Barcode out = barcode;
  std::erase_if(out.pairs, [](const PersistencePair& p) { return p.birth_value == p.death_value; });
  return out;
}

Barcode reindex_barcode(const Barcode& barcode, const ReindexMap& map) {
  Barcode out = barcode;
  for (auto& p : out.pairs) {
    if (p.birth_index < 0 || p.death_index < 0)
      throw ReindexError("pair in dimension " + std::to_string(p.dim) + " has no natural indices");
    if (p.death_index > map.size() || p.birth_index > p.death_index)
      throw ReindexError("natural index " + std::to_string(p.death_index) + " outside the map");
    p.birth_value = map.value(p.birth_index);
    p.death_value = p.essential() ? kInfinity : map.value(p.death_index + 1);
  }
  std::erase_if(out.pairs, [](const PersistencePair& p) { return p.birth_value == p.death_value; });
  sort_pairs(out.pairs);
  out.reindex = map;
  return out;
}

}  // namespace cyclematch
