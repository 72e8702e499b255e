#include "plate/projection.hpp"

#include <cmath>
#include <sstream>

#include "plate/errors.hpp"

namespace plate {
namespace {

// Inverse results within this relative distance of a domain endpoint are
// snapped onto it, so that map corners round-trip.
constexpr double kEndpointSnap = 1e-12;

double snap_to_bound(double value, double bound) {
  if (std::abs(value) > bound && std::abs(value) - bound <= kEndpointSnap * bound)
    return std::copysign(bound, value);
  return value;
}

}  // namespace

ProjectionParams::ProjectionParams(Angle central_meridian, Angle standard_parallel)
    : central_meridian_(central_meridian), standard_parallel_(standard_parallel) {
  if (std::abs(central_meridian.rad()) > kPi)
    throw DomainError("lon", "central meridian must lie in [-180, 180] deg");
  if (std::abs(standard_parallel.rad()) >= kHalfPi)
    throw DomainError("lat", "standard parallel must lie strictly inside (-90, 90) deg");
}

MapPoint forward(const GeoPoint& p, const ProjectionParams& params,
                 const SphereModel& s) {
  const double r = s.radius_km();
  const double cos_lat1 = std::cos(params.standard_parallel().rad());
  return {r * (p.lon().rad() - params.central_meridian().rad()) * cos_lat1,
          r * p.lat().rad()};
}

GeoPoint inverse(const MapPoint& m, const ProjectionParams& params,
                 const SphereModel& s) {
  if (!std::isfinite(m.x) || !std::isfinite(m.y))
    throw InvalidInput("map coordinates must be finite");
  const double r = s.radius_km();
  const double cos_lat1 = std::cos(params.standard_parallel().rad());

  const double lat = snap_to_bound(m.y / r, kHalfPi);
  if (std::abs(lat) > kHalfPi) {
    std::ostringstream msg;
    msg << "lat overflow: y = " << m.y << " km maps beyond +-" << r * kHalfPi << " km";
    throw DomainError("lat", msg.str());
  }
  const double lon =
      snap_to_bound(m.x / (r * cos_lat1) + params.central_meridian().rad(), kPi);
  if (std::abs(lon) > kPi) {
    std::ostringstream msg;
    msg << "lon overflow: x = " << m.x << " km maps to " << lon * 180.0 / kPi
        << " deg";
    throw DomainError("lon", msg.str());
  }
  return GeoPoint(Angle::radians(lat), Angle::radians(lon));
}

ScaleFactors scale_factors(Angle lat, const ProjectionParams& params) {
  const double phi = std::abs(lat.rad());
  if (phi > kHalfPi) throw DomainError("lat", "latitude outside [-90, 90] deg");
  if (phi == kHalfPi)
    throw PoleSingularity("parallel scale factor diverges at the poles");
  return {1.0, std::cos(params.standard_parallel().rad()) / std::cos(lat.rad())};
}

}  // namespace plate
