#pragma once

#include <vector>

#include "plate/geo_core.hpp"
#include "plate/projection.hpp"

namespace plate {

/// Image of an infinitesimal circle under the projection. Axes align with the
/// graticule, so the semi-axes are just the scale factors.
struct TissotEllipse {
  GeoPoint center;
  double semi_axis_parallel = 1.0;   // k
  double semi_axis_meridian = 1.0;   // h
  double max_angular_distortion = 0.0;
};

struct AngularDistortionSample {
  double a = 0.0;
  double omega = 0.0;
};

struct AngularDistortionCurve {
  std::vector<AngularDistortionSample> samples;
};

/// omega(a) = atan((1 - a) / (1 + a)) for a in [0, 1]; pi/4 at a = 0.
double angular_distortion(double a);

/// d omega / da = -1 / (1 + a^2).
double angular_distortion_derivative(double a);

/// omega sampled at `count` evenly spaced points of [0, 1] (count >= 2).
AngularDistortionCurve angular_distortion_curve(int count);

/// sqrt(lat^2 + dlon^2 sec^2(lat)) - sqrt(dlon^2 + lat^2), in units of R.
/// Throws PoleSingularity at lat = +-pi/2.
double distance_distortion(double dlon, Angle lat);

TissotEllipse indicatrix(const GeoPoint& at, const ProjectionParams& params);

}  // namespace plate
