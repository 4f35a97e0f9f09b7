#include "engine.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "cyclematch/binomial.hpp"
#include "cyclematch/error.hpp"
#include "cyclematch/field.hpp"
#include "cyclematch/kernels.hpp"
#include "cyclematch/simplex.hpp"

namespace cyclematch::detail {

namespace {

// Position in a row or column order. Tier 0 holds simplices of the sub
// filtration ordered by their sub value; tier 1 the remaining simplices
// ordered by their super value. In the ordinary case everything is tier 0.
struct Key {
  std::uint8_t tier;
  double value;
  index_t cindex;
};

inline bool before(const Key& a, const Key& b) {
  if (a.tier != b.tier) return a.tier < b.tier;
  if (a.value != b.value) return a.value < b.value;
  return a.cindex > b.cindex;
}

struct Entry {
  Key key;
  coefficient_t coeff;
};

struct EntryAfter {
  bool operator()(const Entry& a, const Entry& b) const { return before(b.key, a.key); }
};

// Sparse column kept as a heap; the top is the earliest row.
class WorkingColumn {
 public:
  explicit WorkingColumn(const PrimeField& field) : field_(field) {}

  void clear() { heap_.clear(); }
  void push(const Entry& e) {
    heap_.push_back(e);
    std::push_heap(heap_.begin(), heap_.end(), EntryAfter{});
  }

  std::optional<Entry> pop_pivot() {
    while (!heap_.empty()) {
      Entry top = pop();
      while (!heap_.empty() && heap_.front().key.cindex == top.key.cindex)
        top.coeff = field_.add(top.coeff, pop().coeff);
      if (top.coeff != 0) return top;
    }
    return std::nullopt;
  }

  std::optional<Entry> get_pivot() {
    auto pivot = pop_pivot();
    if (pivot) push(*pivot);
    return pivot;
  }

 private:
  Entry pop() {
    std::pop_heap(heap_.begin(), heap_.end(), EntryAfter{});
    Entry e = heap_.back();
    heap_.pop_back();
    return e;
  }

  const PrimeField& field_;
  std::vector<Entry> heap_;
};

struct Column {
  index_t cindex;
  double g;  // super value
  double f;  // sub value (meaningful when in_sub)
  bool in_sub;
};

struct Edge {
  index_t cindex;
  double g;
  double f;
  std::uint32_t u, v;
  bool in_sub;
};

struct PivotInfo {
  std::uint32_t slot;
  coefficient_t coeff;
};

enum class Role { ordinary, image, auxiliary };

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), index_t{0}); }
  index_t find(index_t x) {
    index_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      const index_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }
  void link(index_t child, index_t root) { parent_[child] = root; }

 private:
  std::vector<index_t> parent_;
};

class Engine {
 public:
  explicit Engine(const EngineConfig& config)
      : g_(*config.super),
        f_(*config.sub),
        image_(config.sub != config.super),
        n_(static_cast<index_t>(config.super->size())),
        maxdim_(config.maxdim),
        thr_(config.threshold),
        field_(config.field_char),
        apparent_(config.apparent_pairs),
        binom_(std::max<index_t>(n_, 1), config.maxdim + 2),
        g_floor_(g_.mask_floor()),
        f_floor_(f_.mask_floor()),
        working_(field_) {}

  std::vector<RawPair> run() {
    if (n_ == 0) return {};
    gmax_.resize(static_cast<std::size_t>(n_));
    fmax_.resize(static_cast<std::size_t>(n_));

    std::vector<Edge> edges = collect_edges();
    std::unordered_set<index_t> cleared = degree_zero(edges);
    if (maxdim_ < 1) return std::move(out_);

    std::vector<index_t> simplices;
    simplices.reserve(edges.size());
    for (const auto& e : edges) simplices.push_back(e.cindex);
    std::vector<Column> columns;
    columns.reserve(edges.size());
    for (const auto& e : edges) columns.push_back({e.cindex, e.g, e.f, e.in_sub});
    edges.clear();
    edges.shrink_to_fit();

    std::unordered_set<index_t> aux_cleared;
    if (image_) aux_cleared = sub_order_negative_edges(columns);

    for (int dim = 1; dim <= maxdim_; ++dim) {
      if (dim > 1) {
        simplices = extend(simplices, dim - 1);
        columns = make_columns(simplices, dim);
      }
      sort_columns(columns);
      const bool last = dim == maxdim_;
      if (!image_) {
        std::unordered_set<index_t> next;
        reduce(dim, columns, false, Role::ordinary, cleared, last ? nullptr : &next);
        cleared = std::move(next);
      } else {
        reduce(dim, columns, false, Role::image, aux_cleared, nullptr);
        if (!last) {
          std::unordered_set<index_t> next;
          reduce(dim, columns, true, Role::auxiliary, aux_cleared, &next);
          aux_cleared = std::move(next);
        }
      }
    }
    return std::move(out_);
  }

 private:
  // ---- simplex values ----------------------------------------------------

  double diameter(const DistanceMatrix& d, const std::vector<index_t>& verts) const {
    double diam = 0.0;
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        diam = std::max(diam, d(static_cast<std::size_t>(verts[i]), static_cast<std::size_t>(verts[j])));
    return diam;
  }

  bool sub_contains(double f) const { return f <= thr_ && f < f_floor_; }
  bool super_contains(double g) const { return g <= thr_ && g < g_floor_; }

  // Sub-filtration membership and value of a super simplex of dimension >= 1.
  void sub_value(const std::vector<index_t>& verts, double g, double& f, bool& in_sub) const {
    if (!image_) {
      f = g;
      in_sub = true;
      return;
    }
    f = diameter(f_, verts);
    in_sub = sub_contains(f);
  }

  Key mixed_key(index_t cindex, double g, double f, bool in_sub) const {
    return in_sub ? Key{0, f, cindex} : Key{1, g, cindex};
  }

  // ---- degree zero ---------------------------------------------------------

  std::vector<Edge> collect_edges() const {
    std::vector<Edge> edges;
    for (index_t v = 1; v < n_; ++v) {
      const auto vs = static_cast<std::size_t>(v);
      for (index_t u = 0; u < v; ++u) {
        const auto us = static_cast<std::size_t>(u);
        if (g_.masked(us, vs)) continue;
        const double g = g_(us, vs);
        if (g > thr_) continue;
        double f = g;
        bool in_sub = true;
        if (image_) {
          f = f_(us, vs);
          in_sub = !f_.masked(us, vs) && f <= thr_;
        }
        edges.push_back({binom_(v, 2) + u, g, f, static_cast<std::uint32_t>(u),
                         static_cast<std::uint32_t>(v), in_sub});
      }
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
      if (a.g != b.g) return a.g < b.g;
      return a.cindex > b.cindex;
    });
    return edges;
  }

  bool vertex_in_sub(index_t v) const { return !image_ || f_.present(static_cast<std::size_t>(v)); }

  // Elder rule: the older root survives a merge. Age follows the row order.
  bool older(index_t a, index_t b) const {
    const bool sa = vertex_in_sub(a), sb = vertex_in_sub(b);
    if (sa != sb) return sa;
    return a > b;
  }

  // Pairs of degree 0; returns the negative edges of the super order.
  std::unordered_set<index_t> degree_zero(const std::vector<Edge>& edges) {
    UnionFind uf(static_cast<std::size_t>(n_));
    std::unordered_set<index_t> negative;
    for (const auto& e : edges) {
      index_t ru = uf.find(e.u), rv = uf.find(e.v);
      if (ru == rv) continue;
      if (older(ru, rv)) std::swap(ru, rv);
      // ru is the younger root
      uf.link(ru, rv);
      negative.insert(e.cindex);
      if (vertex_in_sub(ru)) out_.push_back({0, {0, ru}, SimplexKey{1, e.cindex}, 0.0, e.g});
    }
    for (index_t v = 0; v < n_; ++v) {
      if (!g_.present(static_cast<std::size_t>(v)) || uf.find(v) != v) continue;
      if (vertex_in_sub(v)) out_.push_back({0, {0, v}, std::nullopt, 0.0, kInf});
    }
    return negative;
  }

  // Negative edges when the edge columns follow the mixed order.
  std::unordered_set<index_t> sub_order_negative_edges(const std::vector<Column>& edges) const {
    std::vector<std::size_t> order(edges.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return before(mixed_key(edges[a].cindex, edges[a].g, edges[a].f, edges[a].in_sub),
                    mixed_key(edges[b].cindex, edges[b].g, edges[b].f, edges[b].in_sub));
    });
    UnionFind uf(static_cast<std::size_t>(n_));
    std::unordered_set<index_t> negative;
    std::vector<index_t> verts;
    for (std::size_t i : order) {
      cns_decode_descending(edges[i].cindex, 1, n_, binom_, verts);
      const index_t ru = uf.find(verts[0]), rv = uf.find(verts[1]);
      if (ru == rv) continue;
      uf.link(ru, rv);
      negative.insert(edges[i].cindex);
    }
    return negative;
  }

  // ---- higher simplices ----------------------------------------------------

  // Cofacets of each simplex obtained by adding a vertex above its maximum.
  std::vector<index_t> extend(const std::vector<index_t>& simplices, int dim) {
    std::vector<index_t> next;
    std::vector<index_t> verts;
    for (index_t cindex : simplices) {
      cns_decode_descending(cindex, dim, n_, binom_, verts);
      const double g = diameter(g_, verts);
      for (index_t w = verts[0] + 1; w < n_; ++w) {
        double gw = g;
        for (index_t u : verts) gw = std::max(gw, g_(static_cast<std::size_t>(u), static_cast<std::size_t>(w)));
        if (super_contains(gw)) next.push_back(cindex + binom_(w, dim + 2));
      }
    }
    return next;
  }

  std::vector<Column> make_columns(const std::vector<index_t>& simplices, int dim) {
    std::vector<Column> columns;
    columns.reserve(simplices.size());
    std::vector<index_t> verts;
    for (index_t cindex : simplices) {
      cns_decode_descending(cindex, dim, n_, binom_, verts);
      Column c{cindex, diameter(g_, verts), 0.0, true};
      sub_value(verts, c.g, c.f, c.in_sub);
      columns.push_back(c);
    }
    return columns;
  }

  // Reverse of the mixed order: columns are processed latest first.
  void sort_columns(std::vector<Column>& columns) const {
    std::sort(columns.begin(), columns.end(), [&](const Column& a, const Column& b) {
      return before(mixed_key(b.cindex, b.g, b.f, b.in_sub), mixed_key(a.cindex, a.g, a.f, a.in_sub));
    });
  }

  // ---- coboundary ------------------------------------------------------------

  // Pushes coeff * coboundary of the simplex onto the working column.
  void push_coboundary(index_t cindex, const std::vector<index_t>& verts, double g, double f,
                       coefficient_t coeff, bool rows_mixed) {
    rows_.clear();
    for (index_t u : verts) rows_.push_back(g_.row(static_cast<std::size_t>(u)).data());
    kernels::max_rows(rows_, gmax_);
    if (rows_mixed) {
      rows_.clear();
      for (index_t u : verts) rows_.push_back(f_.row(static_cast<std::size_t>(u)).data());
      kernels::max_rows(rows_, fmax_);
    }
    index_t k = static_cast<index_t>(verts.size());
    index_t idx_below = cindex, idx_above = 0;
    std::size_t j = 0;
    const coefficient_t negated = field_.neg(coeff);
    for (index_t w = n_ - 1; w >= 0; --w) {
      if (j < verts.size() && verts[j] == w) {
        idx_below -= binom_(w, k);
        idx_above += binom_(w, k + 1);
        --k;
        ++j;
        continue;
      }
      const double gt = std::max(g, gmax_[static_cast<std::size_t>(w)]);
      if (!super_contains(gt)) continue;
      const index_t cofacet = idx_above + binom_(w, k + 1) + idx_below;
      Key key{0, gt, cofacet};
      if (rows_mixed) {
        const double ft = std::max(f, fmax_[static_cast<std::size_t>(w)]);
        key = mixed_key(cofacet, gt, ft, sub_contains(ft));
      }
      working_.push({key, (k & 1) ? negated : coeff});
    }
  }

  // First cofacet (largest cindex) sharing the simplex's own position in the
  // row order, if any; it is then the earliest cofacet.
  std::optional<Entry> equal_value_cofacet(index_t cindex, const std::vector<index_t>& verts,
                                           double g, double f, bool in_sub, bool rows_mixed) const {
    const bool by_sub = rows_mixed && in_sub;
    const DistanceMatrix& d = by_sub ? f_ : g_;
    const double limit = by_sub ? f : g;
    index_t k = static_cast<index_t>(verts.size());
    index_t idx_below = cindex, idx_above = 0;
    std::size_t j = 0;
    for (index_t w = n_ - 1; w >= 0; --w) {
      if (j < verts.size() && verts[j] == w) {
        idx_below -= binom_(w, k);
        idx_above += binom_(w, k + 1);
        --k;
        ++j;
        continue;
      }
      bool within = true;
      for (index_t u : verts)
        if (d(static_cast<std::size_t>(u), static_cast<std::size_t>(w)) > limit) {
          within = false;
          break;
        }
      if (!within) continue;
      const index_t cofacet = idx_above + binom_(w, k + 1) + idx_below;
      const Key key = by_sub ? Key{0, f, cofacet} : Key{static_cast<std::uint8_t>(rows_mixed && !in_sub), g, cofacet};
      return Entry{key, (k & 1) ? field_.neg(1) : coefficient_t{1}};
    }
    return std::nullopt;
  }

  // ---- reduction -------------------------------------------------------------

  void reduce(int dim, const std::vector<Column>& columns, bool rows_mixed, Role role,
              const std::unordered_set<index_t>& cleared, std::unordered_set<index_t>* pivots_out) {
    std::unordered_map<index_t, PivotInfo> pivots;
    pivots.reserve(columns.size());
    std::vector<std::size_t> v_offset{0};
    std::vector<index_t> v_cindex;
    std::vector<coefficient_t> v_coeff;
    std::vector<std::pair<index_t, coefficient_t>> v_work;
    std::vector<index_t> verts, other_verts;

    for (const Column& col : columns) {
      if (cleared.count(col.cindex)) continue;
      cns_decode_descending(col.cindex, dim, n_, binom_, verts);

      std::optional<Entry> pivot;
      bool emergent = false;
      if (apparent_) {
        pivot = equal_value_cofacet(col.cindex, verts, col.g, col.f, col.in_sub, rows_mixed);
        emergent = pivot && !pivots.count(pivot->key.cindex);
      }
      if (emergent) {
        v_cindex.push_back(col.cindex);
        v_coeff.push_back(1);
      } else {
        working_.clear();
        v_work.clear();
        v_work.push_back({col.cindex, 1});
        push_coboundary(col.cindex, verts, col.g, col.f, 1, rows_mixed);
        pivot = working_.get_pivot();
        while (pivot) {
          const auto it = pivots.find(pivot->key.cindex);
          if (it == pivots.end()) break;
          const PivotInfo info = it->second;
          const coefficient_t factor = field_.mul(field_.neg(pivot->coeff), field_.inverse(info.coeff));
          for (std::size_t e = v_offset[info.slot]; e < v_offset[info.slot + 1]; ++e) {
            const coefficient_t c = field_.mul(factor, v_coeff[e]);
            v_work.push_back({v_cindex[e], c});
            cns_decode_descending(v_cindex[e], dim, n_, binom_, other_verts);
            const double g = diameter(g_, other_verts);
            double f = g;
            bool in_sub = true;
            if (rows_mixed) sub_value(other_verts, g, f, in_sub);
            push_coboundary(v_cindex[e], other_verts, g, f, c, rows_mixed);
          }
          pivot = working_.get_pivot();
        }
        if (pivot) {
          std::sort(v_work.begin(), v_work.end());
          for (std::size_t a = 0; a < v_work.size();) {
            coefficient_t sum = 0;
            std::size_t b = a;
            for (; b < v_work.size() && v_work[b].first == v_work[a].first; ++b)
              sum = field_.add(sum, v_work[b].second);
            if (sum != 0) {
              v_cindex.push_back(v_work[a].first);
              v_coeff.push_back(sum);
            }
            a = b;
          }
        }
      }

      if (pivot) {
        pivots.emplace(pivot->key.cindex, PivotInfo{static_cast<std::uint32_t>(v_offset.size() - 1), pivot->coeff});
        v_offset.push_back(v_cindex.size());
        if (pivots_out) pivots_out->insert(pivot->key.cindex);
        const double death = pivot->key.value;
        if (role == Role::ordinary) {
          out_.push_back({dim, {dim, col.cindex}, SimplexKey{dim + 1, pivot->key.cindex}, col.g, death});
        } else if (role == Role::image && col.in_sub && death >= col.f) {
          out_.push_back({dim, {dim, col.cindex}, SimplexKey{dim + 1, pivot->key.cindex}, col.f, death});
        }
      } else if (role == Role::ordinary) {
        out_.push_back({dim, {dim, col.cindex}, std::nullopt, col.g, kInf});
      } else if (role == Role::image && col.in_sub) {
        out_.push_back({dim, {dim, col.cindex}, std::nullopt, col.f, kInf});
      }
    }
  }

  static constexpr double kInf = std::numeric_limits<double>::infinity();

  const DistanceMatrix& g_;
  const DistanceMatrix& f_;
  bool image_;
  index_t n_;
  int maxdim_;
  double thr_;
  PrimeField field_;
  bool apparent_;
  BinomialTable binom_;
  double g_floor_;
  double f_floor_;
  WorkingColumn working_;
  std::vector<double> gmax_, fmax_;
  std::vector<const double*> rows_;
  std::vector<RawPair> out_;
};

}  // namespace

std::vector<RawPair> run_engine(const EngineConfig& config) {
  if (config.super == nullptr || config.sub == nullptr) throw InvariantError("engine needs two metrics");
  if (config.maxdim < 0) throw InputError("maxdim must be >= 0");
  Engine engine(config);
  return engine.run();
}

}  // namespace cyclematch::detail
