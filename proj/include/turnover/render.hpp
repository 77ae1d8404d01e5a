#pragma once

#include <optional>
#include <string>
#include <vector>

#include "turnover/curve.hpp"
#include "turnover/hyperbolic.hpp"
#include "turnover/surface_complex.hpp"

namespace turnover {

inline constexpr int kMaxRenderDepth = 4;

/// Colors and stroke widths for the disk picture.
struct RenderStyle {
  int size = 1024;
  std::string background = "#ffffff";
  std::string disk_stroke = "#222222";
  std::string tile_fill = "#f3f1ea";
  std::string tile_stroke = "#9a9a9a";
  std::string reference_fill = "#e4ecf7";
  std::string reference_stroke = "#c0392b";
  std::string label_color = "#444444";
  std::vector<std::string> curve_colors = {"#1f5fa8", "#e08a1e", "#2e8b57", "#8e44ad"};
  double tile_stroke_width = 0.8;
  double reference_stroke_width = 2.5;
  double curve_stroke_width = 2.5;
  bool labels = true;
  /// Tiles whose center lies farther out (Euclidean disk radius) are neither
  /// drawn nor expanded.
  double cutoff_radius = 0.998;
};

/// Reads `key = value` lines (TOML subset: strings, numbers, booleans, and
/// one string array for curve_colors). Throws std::runtime_error on unknown
/// keys or bad values.
RenderStyle load_render_style(const std::string& path);
RenderStyle parse_render_style(const std::string& text);

/// Poincare disk picture of the tiles within `depth` steps of P, labeled by
/// face, with each curve developed from the first tile carrying its starting
/// face. Deterministic for fixed input; `timestamp` goes into a comment.
std::string render_svg(const SurfaceComplex& complex, const hyp::PolygonGeometry& poly,
                       const std::vector<CombinatorialCurve>& curves, int depth,
                       const RenderStyle& style = {},
                       const std::optional<std::string>& timestamp = std::nullopt);

}  // namespace turnover
