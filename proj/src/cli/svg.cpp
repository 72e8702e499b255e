#include "plate/cli/svg.hpp"

#include <cmath>
#include <sstream>

#include "plate/cli/format.hpp"
#include "plate/errors.hpp"

namespace plate::cli {
namespace {

std::string px(double v) { return fixed(v, 3); }

std::string corner_label(double x_km, double y_km) {
  return "(" + fixed(x_km, 3) + ", " + fixed(y_km, 3) + ") km";
}

}  // namespace

SvgScene tissot_scene(const GridSpec& grid, double ellipse_scale_km,
                      const ProjectionParams& params, const SphereModel& s) {
  if (!std::isfinite(ellipse_scale_km) || ellipse_scale_km <= 0.0)
    throw InvalidInput("ellipse scale must be positive");
  const auto field = distortion_field(grid, params);

  const GeoPoint south_west(Angle::radians(-kHalfPi), Angle::radians(-kPi));
  const GeoPoint north_east(Angle::radians(kHalfPi), Angle::radians(kPi));
  const MapPoint lo = forward(south_west, params, s);
  const MapPoint hi = forward(north_east, params, s);

  SvgScene scene;
  scene.px_per_km = kCanvasHeightPx / (hi.y - lo.y);
  scene.width_px = (hi.x - lo.x) * scene.px_per_km;
  scene.height_px = kCanvasHeightPx;
  auto to_px = [&](const MapPoint& m) {
    return MapPoint{(m.x - lo.x) * scene.px_per_km, (hi.y - m.y) * scene.px_per_km};
  };

  const auto meridians = static_cast<int>(std::lround(360.0 / grid.lon_step_deg));
  for (int j = 0; j <= meridians; ++j) {
    const double lon = j == meridians ? 180.0 : -180.0 + j * grid.lon_step_deg;
    const MapPoint top = to_px(forward(GeoPoint::from_degrees(90.0, lon), params, s));
    const MapPoint bottom = to_px(forward(GeoPoint::from_degrees(-90.0, lon), params, s));
    scene.graticule.push_back({top.x, top.y, bottom.x, bottom.y});
  }
  const auto parallels = static_cast<int>(std::lround(180.0 / grid.lat_step_deg));
  for (int i = 0; i <= parallels; ++i) {
    const double lat = i == parallels ? -90.0 : 90.0 - i * grid.lat_step_deg;
    const MapPoint west = to_px(forward(GeoPoint::from_degrees(lat, -180.0), params, s));
    const MapPoint east = to_px(forward(GeoPoint::from_degrees(lat, 180.0), params, s));
    scene.graticule.push_back({west.x, west.y, east.x, east.y});
  }

  const double unit_px = ellipse_scale_km * scene.px_per_km;
  for (const DistortionSample& sample : field) {
    const MapPoint c = to_px(forward(sample.point, params, s));
    scene.ellipses.push_back({c.x, c.y, sample.ellipse.semi_axis_parallel * unit_px,
                              sample.ellipse.semi_axis_meridian * unit_px});
  }

  scene.annotations.push_back({4.0, 12.0, "start", corner_label(lo.x, hi.y)});
  scene.annotations.push_back({scene.width_px - 4.0, 12.0, "end", corner_label(hi.x, hi.y)});
  scene.annotations.push_back(
      {4.0, scene.height_px - 4.0, "start", corner_label(lo.x, lo.y)});
  scene.annotations.push_back(
      {scene.width_px - 4.0, scene.height_px - 4.0, "end", corner_label(hi.x, lo.y)});
  return scene;
}

std::string render_svg(const SvgScene& scene) {
  std::ostringstream out;
  const std::string w = px(scene.width_px);
  const std::string h = px(scene.height_px);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
      << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n"
      << "<rect x=\"0.000\" y=\"0.000\" width=\"" << w << "\" height=\"" << h
      << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";

  out << "<g id=\"graticule\" stroke=\"#999999\" stroke-width=\"0.5\">\n";
  for (const SvgLine& l : scene.graticule) {
    out << "<line x1=\"" << px(l.x1) << "\" y1=\"" << px(l.y1) << "\" x2=\"" << px(l.x2)
        << "\" y2=\"" << px(l.y2) << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g id=\"indicatrices\" fill=\"none\" stroke=\"#cc0000\" stroke-width=\"1\">\n";
  for (const SvgEllipse& e : scene.ellipses) {
    out << "<ellipse cx=\"" << px(e.cx) << "\" cy=\"" << px(e.cy) << "\" rx=\"" << px(e.rx)
        << "\" ry=\"" << px(e.ry) << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g id=\"annotations\" font-family=\"sans-serif\" font-size=\"10\">\n";
  for (const SvgText& t : scene.annotations) {
    out << "<text x=\"" << px(t.x) << "\" y=\"" << px(t.y) << "\" text-anchor=\""
        << t.anchor << "\">" << t.text << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace plate::cli
