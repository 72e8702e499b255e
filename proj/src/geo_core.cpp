#include "plate/geo_core.hpp"

#include <cmath>
#include <sstream>

#include "plate/errors.hpp"

namespace plate {

Angle Angle::radians(double radians) {
  if (!std::isfinite(radians)) throw InvalidInput("angle must be finite");
  return Angle(radians);
}

Angle Angle::degrees(double degrees) {
  if (!std::isfinite(degrees)) throw InvalidInput("angle must be finite");
  return Angle(degrees * kPi / 180.0);
}

Angle deg_to_rad(double degrees) { return Angle::degrees(degrees); }

GeoPoint::GeoPoint(Angle lat, Angle lon) : lat_(lat), lon_(lon) {
  if (std::abs(lat.rad()) > kHalfPi) {
    std::ostringstream msg;
    msg << "lat " << lat.deg() << " deg is outside [-90, 90]";
    throw DomainError("lat", msg.str());
  }
  if (std::abs(lon.rad()) > kPi) {
    std::ostringstream msg;
    msg << "lon " << lon.deg() << " deg is outside [-180, 180]";
    throw DomainError("lon", msg.str());
  }
}

GeoPoint GeoPoint::from_degrees(double lat_deg, double lon_deg) {
  // Compare in degrees so that e.g. 90 and 180 map onto the closed domain
  // even though 90*pi/180 may round past pi/2.
  if (std::isfinite(lat_deg) && std::abs(lat_deg) > 90.0) {
    std::ostringstream msg;
    msg << "lat " << lat_deg << " deg is outside [-90, 90]";
    throw DomainError("lat", msg.str());
  }
  if (std::isfinite(lon_deg) && std::abs(lon_deg) > 180.0) {
    std::ostringstream msg;
    msg << "lon " << lon_deg << " deg is outside [-180, 180]";
    throw DomainError("lon", msg.str());
  }
  auto lat = Angle::degrees(lat_deg);
  auto lon = Angle::degrees(lon_deg);
  if (lat_deg == 90.0) lat = Angle::radians(kHalfPi);
  if (lat_deg == -90.0) lat = Angle::radians(-kHalfPi);
  if (lon_deg == 180.0) lon = Angle::radians(kPi);
  if (lon_deg == -180.0) lon = Angle::radians(-kPi);
  return GeoPoint(lat, lon);
}

SphereModel::SphereModel(double radius_km) : radius_km_(radius_km) {
  if (!std::isfinite(radius_km) || radius_km <= 0.0)
    throw InvalidInput("sphere radius must be positive and finite");
}

double norm(const Cartesian3& v) { return std::hypot(v.x, v.y, v.z); }

Cartesian3 operator-(const Cartesian3& a, const Cartesian3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

Cartesian3 spherical_to_cartesian(const GeoPoint& p, const SphereModel& s) {
  const double r = s.radius_km();
  const double lat = p.lat().rad();
  const double lon = p.lon().rad();
  return {r * std::cos(lon) * std::cos(lat), r * std::sin(lon) * std::cos(lat),
          r * std::sin(lat)};
}

}  // namespace plate
