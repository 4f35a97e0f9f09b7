#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cyclematch {

struct RenderBar {
  int dim = 0;
  double birth = 0.0;
  double death = 0.0;  // infinity for essential bars
  std::optional<double> prevalence;
};

// Bars of a barcode JSON array or of a prevalence report; InputError otherwise.
std::vector<RenderBar> render_bars_from_json(const nlohmann::json& doc);

// Bars are drawn in (dim, birth, death) order. With prevalence, thickness
// grows with the score and the fill follows a fixed colormap with a colorbar;
// without, all bars share one thickness and color.
std::string render_svg(std::vector<RenderBar> bars);

// Fill for a score in [0, 1], "#rrggbb".
std::string colormap(double t);
double bar_thickness(double prevalence);

}  // namespace cyclematch
