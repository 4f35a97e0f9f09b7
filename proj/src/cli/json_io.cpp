#include "json_io.hpp"

#include <cmath>

#include "cyclematch/error.hpp"
#include "cyclematch/simplex.hpp"

namespace cyclematch::json_io {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

json simplex_to_json(const SimplexKey& k) { return {{"dim", k.dim}, {"cindex", k.cindex}}; }
SimplexKey simplex_from_json(const json& j) { return {j.at("dim").get<int>(), j.at("cindex").get<index_t>()}; }

json value_or_null(double v) { return std::isinf(v) ? json(nullptr) : json(v); }
double value_from(const json& j) { return j.is_null() ? kInfinity : j.get<double>(); }

json affinities_to_json(const Affinities& a) { return {{"A", a.A}, {"B", a.B}, {"C", a.C}, {"D", a.D}}; }
Affinities affinities_from_json(const json& j) {
  return {j.at("A").get<double>(), j.at("B").get<double>(), j.at("C").get<double>(), j.at("D").get<double>()};
}

const json& expect_array(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string("expected a JSON array of ") + what);
  return j;
}

}  // namespace

json pair_to_json(const PersistencePair& p) {
  json j = {{"dim", p.dim},
            {"birth", p.birth_value},
            {"death", value_or_null(p.death_value)},
            {"birth_simplex", simplex_to_json(p.birth_simplex)},
            {"death_simplex", p.death_simplex ? simplex_to_json(*p.death_simplex) : json(nullptr)}};
  if (p.birth_index >= 0) j["birth_index"] = p.birth_index;
  if (p.death_index >= 0) j["death_index"] = p.death_index;
  return j;
}

PersistencePair pair_from_json(const json& j) {
  return guarded("interval", [&] {
    PersistencePair p;
    p.dim = j.at("dim").get<int>();
    p.birth_value = j.at("birth").get<double>();
    p.death_value = value_from(j.at("death"));
    p.birth_simplex = simplex_from_json(j.at("birth_simplex"));
    if (!j.at("death_simplex").is_null()) p.death_simplex = simplex_from_json(j.at("death_simplex"));
    p.birth_index = j.value("birth_index", index_t{-1});
    p.death_index = j.value("death_index", index_t{-1});
    return p;
  });
}

json barcode_to_json(const std::vector<PersistencePair>& pairs) {
  auto sorted = pairs;
  sort_pairs(sorted);
  json out = json::array();
  for (const auto& p : sorted) out.push_back(pair_to_json(p));
  return out;
}

std::vector<PersistencePair> barcode_from_json(const json& j) {
  std::vector<PersistencePair> out;
  for (const auto& e : expect_array(j, "intervals")) out.push_back(pair_from_json(e));
  return out;
}

json image_barcode_to_json(const ImageBarcode& barcode) {
  json out = barcode_to_json(barcode.all_pairs());
  for (auto& e : out) {
    e["kind"] = "image";
    e["birth_filtration"] = "sub";
    e["death_filtration"] = "super";
  }
  return out;
}

std::vector<PersistencePair> image_barcode_from_json(const json& j) {
  for (const auto& e : expect_array(j, "image intervals"))
    if (!e.is_object() || e.value("kind", std::string()) != "image")
      throw InputError("image interval without \"kind\": \"image\"");
  return barcode_from_json(j);
}

json matches_to_json(const std::vector<IntervalMatch>& matches) {
  json out = json::array();
  for (const auto& m : matches)
    out.push_back({{"dim", m.dim},
                   {"alpha", pair_to_json(m.alpha)},
                   {"beta", pair_to_json(m.beta)},
                   {"alpha_img", pair_to_json(m.alpha_img)},
                   {"beta_img", pair_to_json(m.beta_img)},
                   {"affinities", affinities_to_json(m.affinities)}});
  return out;
}

std::vector<IntervalMatch> matches_from_json(const json& j) {
  std::vector<IntervalMatch> out;
  for (const auto& e : expect_array(j, "matches"))
    out.push_back(guarded("match", [&] {
      IntervalMatch m;
      m.dim = e.at("dim").get<int>();
      m.alpha = pair_from_json(e.at("alpha"));
      m.beta = pair_from_json(e.at("beta"));
      m.alpha_img = pair_from_json(e.at("alpha_img"));
      m.beta_img = pair_from_json(e.at("beta_img"));
      m.affinities = affinities_from_json(e.at("affinities"));
      return m;
    }));
  return out;
}

json prevalence_to_json(const PrevalenceReport& report) {
  const auto& p = report.params;
  json params = {{"resamples", p.resamples},         {"resample_size", p.resample_size},
                 {"reference_size", p.reference_size}, {"noise", p.noise},
                 {"seed", p.seed},                     {"affinity", affinity_name(p.kind)},
                 {"maxdim", p.maxdim},                 {"min_dim", p.min_dim},
                 {"field", p.field_char},              {"mode", p.mode}};
  json bars = json::array();
  for (const auto& b : report.bars) {
    json j = pair_to_json(b.bar);
    j["prevalence"] = b.prevalence;
    json entries = json::array();
    for (std::size_t k = 0; k < b.per_resampling.size(); ++k) {
      const auto& e = b.per_resampling[k];
      entries.push_back({{"k", k},
                         {"matched", e.matched},
                         {"failed", e.failed},
                         {"affinity", e.affinities.get(p.kind)},
                         {"affinities", affinities_to_json(e.affinities)}});
    }
    j["per_resampling"] = std::move(entries);
    bars.push_back(std::move(j));
  }
  json failures = json::array();
  for (const auto& f : report.failures) failures.push_back({{"k", f.k}, {"message", f.message}});
  return {{"params", params}, {"bars", bars}, {"failures", failures}};
}

PrevalenceReport prevalence_from_json(const json& j) {
  return guarded("prevalence report", [&] {
    if (!j.is_object()) throw InputError("expected a prevalence report object");
    PrevalenceReport r;
    const json& p = j.at("params");
    r.params.resamples = p.at("resamples").get<std::size_t>();
    r.params.resample_size = p.at("resample_size").get<std::size_t>();
    r.params.reference_size = p.at("reference_size").get<std::size_t>();
    r.params.noise = p.at("noise").get<double>();
    r.params.seed = p.at("seed").get<std::uint64_t>();
    r.params.kind = parse_affinity(p.at("affinity").get<std::string>());
    r.params.maxdim = p.at("maxdim").get<int>();
    r.params.min_dim = p.at("min_dim").get<int>();
    r.params.field_char = p.at("field").get<coefficient_t>();
    r.params.mode = p.at("mode").get<std::string>();
    for (const auto& b : expect_array(j.at("bars"), "bars")) {
      BarPrevalence bar;
      bar.bar = pair_from_json(b);
      bar.prevalence = b.at("prevalence").get<double>();
      for (const auto& e : expect_array(b.at("per_resampling"), "resamplings")) {
        ResamplingEntry entry;
        entry.matched = e.at("matched").get<bool>();
        entry.failed = e.at("failed").get<bool>();
        entry.affinities = affinities_from_json(e.at("affinities"));
        bar.per_resampling.push_back(entry);
      }
      r.bars.push_back(std::move(bar));
    }
    if (j.contains("failures"))
      for (const auto& f : expect_array(j.at("failures"), "failures"))
        r.failures.push_back({f.at("k").get<std::size_t>(), f.at("message").get<std::string>()});
    return r;
  });
}

json cycles_to_json(const std::vector<RepresentativeCycle>& cycles, index_t n_points, const PointCloud* points) {
  json out = json::array();
  for (const auto& c : cycles) {
    json j = pair_to_json(c.pair);
    j["field"] = c.field_char;
    j["n_points"] = n_points;
    json simplices = json::array(), coords = json::array();
    for (const auto& key : c.chain) {
      const auto vertices = cns_decode(key, n_points);
      simplices.push_back(vertices);
      if (points) {
        json s = json::array();
        for (index_t v : vertices) {
          const auto p = points->point(static_cast<std::size_t>(v));
          s.push_back(std::vector<double>(p.begin(), p.end()));
        }
        coords.push_back(std::move(s));
      }
    }
    j["simplices"] = std::move(simplices);
    j["coefficients"] = c.coefficients;
    if (points) j["coordinates"] = std::move(coords);
    out.push_back(std::move(j));
  }
  return out;
}

std::vector<RepresentativeCycle> cycles_from_json(const json& j) {
  std::vector<RepresentativeCycle> out;
  for (const auto& e : expect_array(j, "cycles"))
    out.push_back(guarded("cycle", [&] {
      RepresentativeCycle c;
      c.pair = pair_from_json(e);
      c.field_char = e.at("field").get<coefficient_t>();
      const auto n = e.at("n_points").get<index_t>();
      for (const auto& s : e.at("simplices")) c.chain.push_back(cns_encode(s.get<std::vector<index_t>>(), n));
      c.coefficients = e.at("coefficients").get<std::vector<coefficient_t>>();
      return c;
    }));
  return out;
}

json track_to_json(const TrackResult& result) {
  json pairs = json::array();
  for (std::size_t f = 0; f < result.matches.size(); ++f)
    pairs.push_back({{"from", f},
                     {"to", f + 1},
                     {"matches", result.matches[f] ? matches_to_json(*result.matches[f]) : json(nullptr)}});
  json chains = json::array();
  for (const auto& c : result.chains) {
    json links = json::array();
    for (const auto& l : c.links) links.push_back({{"frame", l.frame}, {"bar", pair_to_json(l.bar)}});
    chains.push_back({{"id", c.id}, {"dim", c.dim}, {"length", c.links.size()}, {"links", std::move(links)}});
  }
  json diagnostics = json::array();
  for (const auto& d : result.diagnostics) diagnostics.push_back({{"frame", d.frame}, {"message", d.message}});
  return {{"frames", result.frames}, {"pairs", pairs}, {"chains", chains}, {"diagnostics", diagnostics}};
}

TrackResult track_from_json(const json& j) {
  return guarded("track", [&] {
    if (!j.is_object()) throw InputError("expected a track object");
    TrackResult r;
    r.frames = j.at("frames").get<std::vector<std::string>>();
    for (const auto& p : expect_array(j.at("pairs"), "frame pairs")) {
      if (p.at("matches").is_null())
        r.matches.emplace_back(std::nullopt);
      else
        r.matches.emplace_back(matches_from_json(p.at("matches")));
    }
    for (const auto& c : expect_array(j.at("chains"), "chains")) {
      TrackChain chain;
      chain.id = c.at("id").get<std::size_t>();
      chain.dim = c.at("dim").get<int>();
      for (const auto& l : c.at("links")) chain.links.push_back({l.at("frame").get<std::size_t>(), pair_from_json(l.at("bar"))});
      r.chains.push_back(std::move(chain));
    }
    for (const auto& d : expect_array(j.at("diagnostics"), "diagnostics"))
      r.diagnostics.push_back({d.at("frame").get<std::size_t>(), d.at("message").get<std::string>()});
    return r;
  });
}

}  // namespace cyclematch::json_io
