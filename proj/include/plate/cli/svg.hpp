#pragma once

#include <string>
#include <vector>

#include "plate/geo_core.hpp"
#include "plate/projection.hpp"
#include "plate/survey.hpp"

namespace plate::cli {

struct SvgLine {
  double x1, y1, x2, y2;
};

struct SvgEllipse {
  double cx, cy, rx, ry;
};

struct SvgText {
  double x, y;
  std::string anchor;  // SVG text-anchor: start | end
  std::string text;
};

/// Pixel-space description of a projected map. The map rectangle is scaled
/// so that its height (pi R) is 512 px; with default parameters the canvas
/// is 1024 x 512.
struct SvgScene {
  double width_px = 0.0;
  double height_px = 0.0;
  double px_per_km = 0.0;
  std::vector<SvgLine> graticule;
  std::vector<SvgEllipse> ellipses;
  std::vector<SvgText> annotations;
};

inline constexpr double kCanvasHeightPx = 512.0;

/// Graticule at the grid steps plus one indicatrix per distortion_field entry.
/// A unit indicatrix is drawn with radius `ellipse_scale_km`.
SvgScene tissot_scene(const GridSpec& grid, double ellipse_scale_km,
                      const ProjectionParams& params, const SphereModel& s);

/// SVG 1.1 document. Coordinates use three decimals, elements keep scene order.
std::string render_svg(const SvgScene& scene);

}  // namespace plate::cli
