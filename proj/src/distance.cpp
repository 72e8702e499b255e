#include "plate/distance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "plate/errors.hpp"

namespace plate {
namespace {

void check_chord(double chord_km, const SphereModel& s) {
  const double diameter = 2.0 * s.radius_km();
  if (!(chord_km >= 0.0 && chord_km <= diameter)) {
    std::ostringstream msg;
    msg << "chord " << chord_km << " km outside [0, " << diameter << "] km";
    throw InvalidChord(msg.str());
  }
}

double haversin(double x) {
  const double h = std::sin(x / 2.0);
  return h * h;
}

double wrap_pi(double x) { return std::remainder(x, 2.0 * kPi); }

double planar_from_deltas(double dlon, double dlat, const ProjectionParams& params,
                          const SphereModel& s) {
  const double r = s.radius_km();
  const double cos_lat1 = std::cos(params.standard_parallel().rad());
  return std::hypot(r * dlon * cos_lat1, r * dlat);
}

}  // namespace

double planar_distance(const GeoPoint& p, const GeoPoint& q,
                       const ProjectionParams& params, const SphereModel& s) {
  const MapPoint a = forward(p, params, s);
  const MapPoint b = forward(q, params, s);
  return std::hypot(a.x - b.x, a.y - b.y);
}

double wrapped_planar_distance(const GeoPoint& p, const GeoPoint& q,
                               const ProjectionParams& params, const SphereModel& s) {
  return planar_from_deltas(wrap_pi(p.lon().rad() - q.lon().rad()),
                            p.lat().rad() - q.lat().rad(), params, s);
}

double chord_distance(const GeoPoint& p, const GeoPoint& q, const SphereModel& s) {
  // 2 - 2 cos(lat1) cos(lat2) cos(dlon) - 2 sin(lat1) sin(lat2)
  //   = 4 hav(dlat) + 4 cos(lat1) cos(lat2) hav(dlon),
  // which avoids cancellation for nearby points.
  const double lat1 = p.lat().rad();
  const double lat2 = q.lat().rad();
  const double inner = 4.0 * (haversin(lat1 - lat2) +
                               std::cos(lat1) * std::cos(lat2) *
                                   haversin(p.lon().rad() - q.lon().rad()));
  const double r = s.radius_km();
  return std::min(2.0 * r, r * std::sqrt(inner));
}

double arc_from_chord(double chord_km, const SphereModel& s) {
  check_chord(chord_km, s);
  const double r = s.radius_km();
  return 2.0 * r * std::asin(std::min(1.0, chord_km / (2.0 * r)));
}

double arc_from_chord_paper_variant(double chord_km, const SphereModel& s) {
  check_chord(chord_km, s);
  const double r = s.radius_km();
  const double d = chord_km;
  // Principal asin of x = (d / 2R^2) sqrt(4R^2 - d^2), taken as
  // atan2(x, sqrt(1 - x^2)) with sqrt(1 - x^2) = |1 - d^2 / 2R^2| exactly;
  // plain asin loses ~1e-8 relative where x approaches 1.
  const double sine = d / (2.0 * r * r) * std::sqrt((2.0 * r - d) * (2.0 * r + d));
  const double cosine = std::abs(1.0 - d * d / (2.0 * r * r));
  return r * std::atan2(sine, cosine);
}

double haversine_distance(const GeoPoint& p, const GeoPoint& q, const SphereModel& s) {
  const double lat1 = p.lat().rad();
  const double lat2 = q.lat().rad();
  const double h = haversin(lat1 - lat2) +
                   std::cos(lat1) * std::cos(lat2) * haversin(p.lon().rad() - q.lon().rad());
  return 2.0 * s.radius_km() * std::asin(std::min(1.0, std::sqrt(h)));
}

DistanceReport distance_report(const GeoPoint& p, const GeoPoint& q,
                               const ProjectionParams& params, const SphereModel& s) {
  DistanceReport r;
  r.planar_km = planar_distance(p, q, params, s);
  r.chord_km = chord_distance(p, q, s);
  r.great_circle_km = arc_from_chord(r.chord_km, s);
  r.haversine_km = haversine_distance(p, q, s);
  r.paper_arcsin_km = arc_from_chord_paper_variant(r.chord_km, s);
  r.planar_error_pct = r.great_circle_km > 0.0
                           ? (r.planar_km - r.great_circle_km) / r.great_circle_km * 100.0
                           : 0.0;
  return r;
}

}  // namespace plate
