#pragma once

#include "plate/geo_core.hpp"

namespace plate {

/// Central meridian and standard parallel of the equidistant cylindrical
/// projection. The defaults (0, 0) give the classic plate carree.
class ProjectionParams {
 public:
  constexpr ProjectionParams() = default;

  /// Rejects |central_meridian| > pi and |standard_parallel| >= pi/2.
  ProjectionParams(Angle central_meridian, Angle standard_parallel);

  constexpr Angle central_meridian() const noexcept { return central_meridian_; }
  constexpr Angle standard_parallel() const noexcept { return standard_parallel_; }

 private:
  Angle central_meridian_;
  Angle standard_parallel_;
};

/// Projected position in kilometers: x east-west, y north-south.
struct MapPoint {
  double x = 0.0;
  double y = 0.0;
};

/// Meridian (h) and parallel (k) scale factors.
struct ScaleFactors {
  double h = 1.0;
  double k = 1.0;
};

/// x = R (lon - lon0) cos(lat1), y = R lat. The longitude difference is not
/// wrapped.
MapPoint forward(const GeoPoint& p, const ProjectionParams& params,
                 const SphereModel& s);

/// lat = y / R, lon = x / (R cos(lat1)) + lon0. Throws DomainError naming the
/// coordinate that lands outside the sphere's domain.
GeoPoint inverse(const MapPoint& m, const ProjectionParams& params,
                 const SphereModel& s);

/// h = 1, k = cos(lat1) / cos(lat). Throws PoleSingularity at lat = +-pi/2.
ScaleFactors scale_factors(Angle lat, const ProjectionParams& params);

}  // namespace plate
