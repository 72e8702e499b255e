#pragma once

#include <numbers>

namespace plate {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

/// An angle in radians. Degrees only appear at I/O boundaries.
class Angle {
 public:
  constexpr Angle() = default;

  /// Throws InvalidInput when `radians` is NaN or infinite.
  static Angle radians(double radians);
  static Angle degrees(double degrees);

  constexpr double rad() const noexcept { return value_; }
  constexpr double deg() const noexcept { return value_ * 180.0 / kPi; }

  constexpr Angle operator-() const noexcept { return Angle(-value_); }

  friend constexpr bool operator==(Angle, Angle) = default;

 private:
  constexpr explicit Angle(double value) : value_(value) {}
  double value_ = 0.0;
};

/// d * pi / 180.
Angle deg_to_rad(double degrees);

/// Position on the sphere. Construction rejects lat outside [-pi/2, pi/2]
/// and lon outside [-pi, pi] with a DomainError naming the coordinate;
/// the endpoints themselves are accepted.
class GeoPoint {
 public:
  constexpr GeoPoint() = default;
  GeoPoint(Angle lat, Angle lon);

  static GeoPoint from_degrees(double lat_deg, double lon_deg);

  constexpr Angle lat() const noexcept { return lat_; }
  constexpr Angle lon() const noexcept { return lon_; }

  friend constexpr bool operator==(const GeoPoint&, const GeoPoint&) = default;

 private:
  Angle lat_;
  Angle lon_;
};

/// Spherical Earth of radius R in kilometers.
class SphereModel {
 public:
  static constexpr double kDefaultRadiusKm = 6371.0;

  constexpr SphereModel() = default;
  explicit SphereModel(double radius_km);

  constexpr double radius_km() const noexcept { return radius_km_; }

 private:
  double radius_km_ = kDefaultRadiusKm;
};

struct Cartesian3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

double norm(const Cartesian3& v);
Cartesian3 operator-(const Cartesian3& a, const Cartesian3& b);

/// (R cos(lon) cos(lat), R sin(lon) cos(lat), R sin(lat)).
Cartesian3 spherical_to_cartesian(const GeoPoint& p, const SphereModel& s);

}  // namespace plate
