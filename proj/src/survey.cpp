#include "plate/survey.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include "plate/errors.hpp"

namespace plate {
namespace {

constexpr int kBandCount = 5;

// Integer count of `step` in `span`, or 0 if it does not divide evenly.
int divisions(double span, double step) {
  if (!std::isfinite(step) || step <= 0.0) return 0;
  const double n = span / step;
  const double rounded = std::round(n);
  if (rounded < 1.0 || std::abs(n - rounded) > 1e-9 * n) return 0;
  return static_cast<int>(rounded);
}

double band_of(const GeoPoint& a, const GeoPoint& b) {
  const double mid = std::abs(a.lat().deg() + b.lat().deg()) / 2.0;
  const double band = std::floor(mid / kLatBandWidthDeg);
  return std::min(band, kBandCount - 1.0) * kLatBandWidthDeg;
}

// 53 random mantissa bits in [0, 1). Avoids the implementation-defined
// std::uniform_real_distribution so streams match across standard libraries.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

void GridSpec::validate() const {
  if (divisions(180.0, lat_step_deg) == 0)
    throw InvalidInput("latitude step must be positive and divide 180 deg");
  if (divisions(360.0, lon_step_deg) == 0)
    throw InvalidInput("longitude step must be positive and divide 360 deg");
  if (lon_step_deg > 180.0)
    throw InvalidInput("longitude step must not exceed 180 deg");
  if (!std::isfinite(pole_margin_deg) || pole_margin_deg < 0.0 || pole_margin_deg > 90.0)
    throw InvalidInput("pole margin must lie in [0, 90] deg");
}

std::vector<SurveyRow> run_survey(const std::vector<PairRecord>& pairs,
                                  const ProjectionParams& params, const SphereModel& s,
                                  bool wrapped_planar) {
  if (pairs.empty()) throw InvalidInput("survey needs at least one pair");
  std::vector<SurveyRow> rows;
  rows.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const PairRecord& pr = pairs[i];
    if (pr.name_a.empty() || pr.name_b.empty()) {
      std::ostringstream msg;
      msg << "row " << i << ": point labels must be non-empty";
      throw InvalidInput(msg.str());
    }
    SurveyRow row{pr.name_a, pr.name_b, pr.a, pr.b,
                  distance_report(pr.a, pr.b, params, s), std::nullopt,
                  band_of(pr.a, pr.b)};
    if (wrapped_planar) row.wrapped_planar_km = wrapped_planar_distance(pr.a, pr.b, params, s);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<PairRecord> random_pairs(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidInput("pair count must be positive");
  std::mt19937_64 rng(seed);
  auto draw = [&rng] {
    const double lat = std::asin(2.0 * unit_uniform(rng) - 1.0);
    const double lon = kPi * (2.0 * unit_uniform(rng) - 1.0);
    return GeoPoint(Angle::radians(lat), Angle::radians(lon));
  };
  std::vector<PairRecord> pairs;
  pairs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const GeoPoint a = draw();
    const GeoPoint b = draw();
    const std::string id = std::to_string(i);
    pairs.push_back({"r" + id + "a", "r" + id + "b", a, b});
  }
  return pairs;
}

std::vector<BandSummary> summarize_bands(const std::vector<SurveyRow>& rows) {
  std::array<double, kBandCount> sum{};
  std::array<std::size_t, kBandCount> count{};
  for (const SurveyRow& row : rows) {
    const auto i = static_cast<std::size_t>(row.lat_band_deg / kLatBandWidthDeg);
    sum[i] += row.report.planar_error_pct;
    ++count[i];
  }
  std::vector<BandSummary> out;
  for (std::size_t i = 0; i < kBandCount; ++i) {
    if (count[i] == 0) continue;
    const double lower = static_cast<double>(i) * kLatBandWidthDeg;
    out.push_back({lower, std::min(90.0, lower + kLatBandWidthDeg), count[i],
                   sum[i] / static_cast<double>(count[i])});
  }
  return out;
}

std::vector<DistortionSample> distortion_field(const GridSpec& grid,
                                               const ProjectionParams& params) {
  grid.validate();
  const int lat_rows = divisions(180.0, grid.lat_step_deg);
  const int lon_cols = divisions(360.0, grid.lon_step_deg);
  const double probe = grid.lon_step_deg * kPi / 180.0;

  std::vector<DistortionSample> field;
  for (int i = 0; i <= lat_rows; ++i) {
    const double lat = 90.0 - i * grid.lat_step_deg;
    if (std::abs(lat) >= 90.0 - 1e-9 || std::abs(lat) > 90.0 - grid.pole_margin_deg + 1e-9)
      continue;
    for (int j = 0; j <= lon_cols; ++j) {
      const double lon = j == lon_cols ? 180.0 : -180.0 + j * grid.lon_step_deg;
      const GeoPoint p = GeoPoint::from_degrees(lat, lon);
      field.push_back({p, indicatrix(p, params), distance_distortion(probe, p.lat())});
    }
  }
  return field;
}

}  // namespace plate
