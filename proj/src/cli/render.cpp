#include "render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "cyclematch/error.hpp"

namespace cyclematch {

namespace {

constexpr double kWidth = 640, kLeft = 40, kRight = 90, kTop = 20, kRow = 14, kAxis = 30;
constexpr double kThinnest = 2, kThickest = 12, kPlain = 6;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string colormap(double t) {
  // viridis, sampled at five stops
  static constexpr std::array<std::array<double, 3>, 5> stops{{{68, 1, 84},
                                                                {59, 82, 139},
                                                                {33, 145, 140},
                                                                {94, 201, 98},
                                                                {253, 231, 37}}};
  t = std::clamp(std::isnan(t) ? 0.0 : t, 0.0, 1.0) * (stops.size() - 1);
  const auto i = std::min<std::size_t>(static_cast<std::size_t>(t), stops.size() - 2);
  const double f = t - static_cast<double>(i);
  char buf[8];
  int rgb[3];
  for (int c = 0; c < 3; ++c) rgb[c] = static_cast<int>(std::lround(stops[i][c] + f * (stops[i + 1][c] - stops[i][c])));
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
  return buf;
}

double bar_thickness(double prevalence) {
  return kThinnest + (kThickest - kThinnest) * std::clamp(prevalence, 0.0, 1.0);
}

std::vector<RenderBar> render_bars_from_json(const nlohmann::json& doc) {
  const nlohmann::json* list = &doc;
  bool scored = false;
  if (doc.is_object()) {
    if (!doc.contains("bars")) throw InputError("JSON object is not a prevalence report");
    list = &doc.at("bars");
    scored = true;
  }
  if (!list->is_array()) throw InputError("expected a barcode array or a prevalence report");
  std::vector<RenderBar> bars;
  try {
    for (const auto& e : *list) {
      RenderBar b;
      b.dim = e.at("dim").get<int>();
      b.birth = e.at("birth").get<double>();
      b.death = e.at("death").is_null() ? INFINITY : e.at("death").get<double>();
      if (scored) b.prevalence = e.at("prevalence").get<double>();
      bars.push_back(b);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed barcode JSON: ") + e.what());
  }
  return bars;
}

std::string render_svg(std::vector<RenderBar> bars) {
  std::stable_sort(bars.begin(), bars.end(), [](const RenderBar& a, const RenderBar& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.birth != b.birth) return a.birth < b.birth;
    return a.death < b.death;
  });
  const bool scored = std::any_of(bars.begin(), bars.end(), [](const RenderBar& b) { return b.prevalence.has_value(); });

  double hi = 0.0;
  for (const auto& b : bars) hi = std::max({hi, b.birth, std::isinf(b.death) ? 0.0 : b.death});
  if (!(hi > 0.0)) hi = 1.0;
  hi *= 1.05;
  const double plot = kWidth - kLeft - kRight;
  auto x_of = [&](double v) { return kLeft + plot * std::min(v, hi) / hi; };
  const double height = kTop + kRow * std::max<std::size_t>(bars.size(), 1) + kAxis;
  const double axis_y = height - kAxis;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kWidth) << "\" height=\"" << fmt(height)
      << "\" viewBox=\"0 0 " << fmt(kWidth) << ' ' << fmt(height) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(axis_y) << "\" x2=\"" << fmt(kLeft + plot) << "\" y2=\""
      << fmt(axis_y) << "\"/>\n"
      << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kTop) << "\" x2=\"" << fmt(kLeft) << "\" y2=\""
      << fmt(axis_y) << "\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double v = hi * i / 4, x = x_of(v);
    svg << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(axis_y) << "\" x2=\"" << fmt(x) << "\" y2=\""
        << fmt(axis_y + 4) << "\"/>\n";
    svg << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(axis_y + 16) << "\" font-size=\"10\" text-anchor=\"middle\" stroke=\"none\">"
        << fmt(v) << "</text>\n";
  }
  svg << "</g>\n<g class=\"bars\">\n";

  int last_dim = -1;
  for (std::size_t i = 0; i < bars.size(); ++i) {
    const auto& b = bars[i];
    const double center = kTop + kRow * (static_cast<double>(i) + 0.5);
    if (b.dim != last_dim) {
      svg << "<text x=\"" << fmt(kLeft - 6) << "\" y=\"" << fmt(center + 4)
          << "\" font-size=\"10\" text-anchor=\"end\">H" << b.dim << "</text>\n";
      last_dim = b.dim;
    }
    const double p = b.prevalence.value_or(1.0);
    const double thick = scored ? bar_thickness(p) : kPlain;
    const double x0 = x_of(b.birth), x1 = std::isinf(b.death) ? kLeft + plot : x_of(b.death);
    svg << "<rect class=\"bar\" data-dim=\"" << b.dim << "\" data-birth=\"" << fmt(b.birth) << "\" data-death=\""
        << (std::isinf(b.death) ? std::string("inf") : fmt(b.death)) << '"';
    if (scored) svg << " data-prevalence=\"" << fmt(p) << '"';
    svg << " x=\"" << fmt(x0) << "\" y=\"" << fmt(center - thick / 2) << "\" width=\"" << fmt(std::max(x1 - x0, 0.0))
        << "\" height=\"" << fmt(thick) << "\" fill=\"" << (scored ? colormap(p) : std::string("#3b528b"))
        << "\"/>\n";
  }
  svg << "</g>\n";

  if (scored) {
    const double cx = kWidth - kRight + 30, top = kTop, span = std::max(axis_y - kTop, 60.0);
    constexpr int kSteps = 20;
    svg << "<g class=\"colorbar\">\n";
    for (int s = 0; s < kSteps; ++s) {
      const double t = (s + 0.5) / kSteps;
      svg << "<rect x=\"" << fmt(cx) << "\" y=\"" << fmt(top + span * (1.0 - (s + 1.0) / kSteps)) << "\" width=\"14\" height=\""
          << fmt(span / kSteps) << "\" fill=\"" << colormap(t) << "\"/>\n";
    }
    svg << "<text x=\"" << fmt(cx + 18) << "\" y=\"" << fmt(top + 8) << "\" font-size=\"10\">1</text>\n"
        << "<text x=\"" << fmt(cx + 18) << "\" y=\"" << fmt(top + span) << "\" font-size=\"10\">0</text>\n"
        << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace cyclematch
