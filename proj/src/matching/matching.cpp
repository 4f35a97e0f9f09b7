#include "cyclematch/matching.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "cyclematch/error.hpp"
#include "cyclematch/simplex.hpp"

namespace cyclematch {

double jaccard(Interval a, Interval b) {
  const double len_a = std::max(0.0, a.hi - a.lo);
  const double len_b = std::max(0.0, b.hi - b.lo);
  const double overlap = std::max(0.0, std::min(a.hi, b.hi) - std::max(a.lo, b.lo));
  const double together = len_a + len_b - overlap;
  if (!(together > 0.0)) return 0.0;
  return std::clamp(overlap / together, 0.0, 1.0);
}

const char* affinity_name(AffinityKind kind) noexcept {
  switch (kind) {
    case AffinityKind::A: return "A";
    case AffinityKind::B: return "B";
    case AffinityKind::C: return "C";
    case AffinityKind::D: return "D";
  }
  return "?";
}

AffinityKind parse_affinity(const std::string& name) {
  if (name.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(name[0]))) {
      case 'A': return AffinityKind::A;
      case 'B': return AffinityKind::B;
      case 'C': return AffinityKind::C;
      case 'D': return AffinityKind::D;
    }
  }
  throw InputError("unknown affinity '" + name + "', expected A, B, C or D");
}

double Affinities::get(AffinityKind kind) const noexcept {
  switch (kind) {
    case AffinityKind::A: return A;
    case AffinityKind::B: return B;
    case AffinityKind::C: return C;
    case AffinityKind::D: return D;
  }
  return 0.0;
}

namespace {

Interval as_interval(const PersistencePair& p, double cap) {
  return {p.birth_value, std::min(p.death_value, cap)};
}

}  // namespace

Affinities compute_affinities(const PersistencePair& alpha, const PersistencePair& beta,
                              const PersistencePair& alpha_img, const PersistencePair& beta_img, double cap) {
  const Interval a = as_interval(alpha, cap), b = as_interval(beta, cap);
  const Interval ai = as_interval(alpha_img, cap), bi = as_interval(beta_img, cap);
  const double bars = jaccard(a, b);
  const double images = jaccard(ai, bi);
  // the two bar-to-image factors are grouped first so the result is
  // symmetric in X and Y and C <= A, C <= B hold after rounding
  const double own = jaccard(a, ai) * jaccard(b, bi);
  Affinities out;
  out.A = bars * own;
  out.B = images * own;
  out.D = bars * images;
  out.C = out.D * own;
  return out;
}

double affinity(const IntervalMatch& match, AffinityKind kind) { return match.affinities.get(kind); }

SimplexKey shift_simplex(const SimplexKey& key, index_t n_from, index_t offset, index_t n_to) {
  auto vertices = cns_decode(key, n_from);
  for (auto& v : vertices) v += offset;
  return cns_encode(vertices, n_to);
}

Barcode embed_barcode(const Barcode& barcode, index_t offset, index_t n_total) {
  if (offset < 0 || offset + barcode.n_points > n_total)
    throw CompatibilityError("barcode does not fit into the union index space");
  Barcode out = barcode;
  out.n_points = n_total;
  if (offset == 0) return out;
  for (auto& p : out.pairs) {
    p.birth_simplex = shift_simplex(p.birth_simplex, barcode.n_points, offset, n_total);
    if (p.death_simplex) p.death_simplex = shift_simplex(*p.death_simplex, barcode.n_points, offset, n_total);
  }
  return out;
}

namespace {

bool matchable(const PersistencePair& p) { return !p.essential() && p.death_value > p.birth_value; }

using Index = std::map<SimplexKey, const PersistencePair*>;

Index index_by_birth(const std::vector<PersistencePair>& pairs, bool only_matchable, const char* what) {
  Index index;
  for (const auto& p : pairs) {
    if (only_matchable ? !matchable(p) : p.essential()) continue;
    if (!index.emplace(p.birth_simplex, &p).second)
      throw InvariantError(std::string("birth simplex repeated in ") + what);
  }
  return index;
}

Index index_by_death(const std::vector<PersistencePair>& pairs, const char* what) {
  Index index;
  for (const auto& p : pairs) {
    if (p.essential()) continue;
    if (!index.emplace(*p.death_simplex, &p).second)
      throw InvariantError(std::string("death simplex repeated in ") + what);
  }
  return index;
}

}  // namespace

std::vector<IntervalMatch> match_intervals(const Barcode& bar_x, const Barcode& bar_y,
                                           const ImageBarcode& img_x, const ImageBarcode& img_y) {
  const index_t n = img_x.n_points;
  if (bar_x.n_points != n || bar_y.n_points != n || img_y.n_points != n)
    throw CompatibilityError("barcodes and image barcodes use different point index spaces");
  if (bar_x.field_char != bar_y.field_char || bar_x.field_char != img_x.field_char ||
      bar_x.field_char != img_y.field_char)
    throw CompatibilityError("barcodes were computed over different fields");

  const Index x_births = index_by_birth(img_x.finite_pairs, false, "the image barcode of X");
  index_by_death(img_x.finite_pairs, "the image barcode of X");
  const Index y_deaths = index_by_death(img_y.finite_pairs, "the image barcode of Y");
  index_by_birth(img_y.finite_pairs, false, "the image barcode of Y");
  const Index y_bars = index_by_birth(bar_y.pairs, true, "the barcode of Y");
  const double cap = std::min(bar_x.threshold, bar_y.threshold);

  std::vector<IntervalMatch> matches;
  for (const auto& alpha : bar_x.pairs) {
    if (!matchable(alpha)) continue;
    const auto ai = x_births.find(alpha.birth_simplex);
    if (ai == x_births.end()) continue;
    const auto bi = y_deaths.find(*ai->second->death_simplex);
    if (bi == y_deaths.end()) continue;
    const auto b = y_bars.find(bi->second->birth_simplex);
    if (b == y_bars.end()) continue;
    IntervalMatch m;
    m.dim = alpha.dim;
    m.alpha = alpha;
    m.beta = *b->second;
    m.alpha_img = *ai->second;
    m.beta_img = *bi->second;
    if (m.beta.dim != m.dim) throw InvariantError("matched bars differ in dimension");
    m.affinities = compute_affinities(m.alpha, m.beta, m.alpha_img, m.beta_img, cap);
    matches.push_back(m);
  }
  return matches;
}

}  // namespace cyclematch
