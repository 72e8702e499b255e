#include "plate/distortion.hpp"

#include <cmath>
#include <sstream>

#include "plate/errors.hpp"

namespace plate {
namespace {

void check_unit_interval(double a) {
  if (!(a >= 0.0 && a <= 1.0)) {
    std::ostringstream msg;
    msg << "a = " << a << " outside [0, 1]";
    throw InvalidInput(msg.str());
  }
}

}  // namespace

double angular_distortion(double a) {
  check_unit_interval(a);
  return std::atan((1.0 - a) / (1.0 + a));
}

double angular_distortion_derivative(double a) {
  check_unit_interval(a);
  return -1.0 / (1.0 + a * a);
}

AngularDistortionCurve angular_distortion_curve(int count) {
  if (count < 2) throw InvalidInput("curve needs at least two samples");
  AngularDistortionCurve curve;
  curve.samples.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double a = i == count - 1 ? 1.0 : static_cast<double>(i) / (count - 1);
    curve.samples.push_back({a, angular_distortion(a)});
  }
  return curve;
}

double distance_distortion(double dlon, Angle lat) {
  if (!std::isfinite(dlon) || std::abs(dlon) > kPi)
    throw InvalidInput("longitude difference must lie in [-pi, pi]");
  const double phi = lat.rad();
  if (std::abs(phi) > kHalfPi) throw DomainError("lat", "latitude outside [-90, 90] deg");
  if (std::abs(phi) == kHalfPi)
    throw PoleSingularity("distance distortion is unbounded at the poles");
  const double stretched = dlon / std::cos(phi);
  return std::hypot(phi, stretched) - std::hypot(dlon, phi);
}

TissotEllipse indicatrix(const GeoPoint& at, const ProjectionParams& params) {
  const ScaleFactors sf = scale_factors(at.lat(), params);
  return {at, sf.k, sf.h, angular_distortion(0.0)};
}

}  // namespace plate
