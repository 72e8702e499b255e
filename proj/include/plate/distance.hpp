#pragma once

#include "plate/geo_core.hpp"
#include "plate/projection.hpp"

namespace plate {

/// Every distance formulation for one point pair, in kilometers.
struct DistanceReport {
  double planar_km = 0.0;
  double chord_km = 0.0;
  double great_circle_km = 0.0;
  double haversine_km = 0.0;
  double paper_arcsin_km = 0.0;
  /// (planar - great_circle) / great_circle * 100; zero for coincident points.
  double planar_error_pct = 0.0;
};

/// Euclidean distance between the projected points. Pairs straddling the
/// antimeridian are measured the long way round, as the raw map shows them.
double planar_distance(const GeoPoint& p, const GeoPoint& q,
                       const ProjectionParams& params, const SphereModel& s);

/// Same as planar_distance but with the longitude difference wrapped into
/// [-pi, pi] first.
double wrapped_planar_distance(const GeoPoint& p, const GeoPoint& q,
                               const ProjectionParams& params, const SphereModel& s);

/// Straight-line distance through the sphere,
/// R sqrt(2 - 2 cos(lat1) cos(lat2) cos(lon1 - lon2) - 2 sin(lat1) sin(lat2)).
double chord_distance(const GeoPoint& p, const GeoPoint& q, const SphereModel& s);

/// Arc length subtending chord d: 2R asin(d / 2R). Valid over the whole
/// range 0 <= d <= 2R; throws InvalidChord otherwise.
double arc_from_chord(double chord_km, const SphereModel& s);

/// R asin((d / 2R^2) sqrt(4R^2 - d^2)) with the principal asin branch.
/// Matches arc_from_chord up to d = R sqrt(2) and folds back to
/// pi R - arc_from_chord(d) beyond it (central angle past 90 degrees).
double arc_from_chord_paper_variant(double chord_km, const SphereModel& s);

/// 2R asin(sqrt(hav(dlat) + cos(lat1) cos(lat2) hav(dlon))), hav(x) = sin^2(x/2).
double haversine_distance(const GeoPoint& p, const GeoPoint& q, const SphereModel& s);

DistanceReport distance_report(const GeoPoint& p, const GeoPoint& q,
                               const ProjectionParams& params, const SphereModel& s);

}  // namespace plate
