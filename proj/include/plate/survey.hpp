#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plate/distance.hpp"
#include "plate/distortion.hpp"
#include "plate/geo_core.hpp"
#include "plate/projection.hpp"

namespace plate {

struct PairRecord {
  std::string name_a;
  std::string name_b;
  GeoPoint a;
  GeoPoint b;
};

/// Width of the |midpoint latitude| buckets used for summaries.
inline constexpr double kLatBandWidthDeg = 20.0;

struct SurveyRow {
  std::string name_a;
  std::string name_b;
  GeoPoint a;
  GeoPoint b;
  DistanceReport report;
  /// Only populated when the survey runs with wrapped planar distances.
  std::optional<double> wrapped_planar_km;
  /// Lower edge of the |midpoint latitude| band, degrees: 0, 20, ..., 80.
  double lat_band_deg = 0.0;
};

struct BandSummary {
  double lower_deg = 0.0;
  double upper_deg = 0.0;
  std::size_t count = 0;
  double mean_error_pct = 0.0;
};

/// Graticule for distortion fields. Steps must divide 180 and 360 degrees.
/// Rows with |lat| > 90 - pole_margin are skipped; the poles are always skipped.
struct GridSpec {
  double lat_step_deg = 30.0;
  double lon_step_deg = 30.0;
  double pole_margin_deg = 10.0;

  /// Throws InvalidInput describing the first violated constraint.
  void validate() const;
};

struct DistortionSample {
  GeoPoint point;
  TissotEllipse ellipse;
  /// distance_distortion(lon_step, lat), in units of R.
  double distance_distortion = 0.0;
};

/// One row per pair, in input order. Throws InvalidInput naming the row index
/// on an empty pair list or an unlabeled record.
std::vector<SurveyRow> run_survey(const std::vector<PairRecord>& pairs,
                                  const ProjectionParams& params, const SphereModel& s,
                                  bool wrapped_planar = false);

/// Area-uniform random pairs (sin(lat) uniform, lon uniform in [-pi, pi)).
/// Same (n, seed) always yields the same list.
std::vector<PairRecord> random_pairs(std::size_t n, std::uint64_t seed);

/// Mean planar error per latitude band; bands without rows are omitted.
std::vector<BandSummary> summarize_bands(const std::vector<SurveyRow>& rows);

/// Row-major over the graticule, north to south then west to east.
std::vector<DistortionSample> distortion_field(const GridSpec& grid,
                                               const ProjectionParams& params);

}  // namespace plate
