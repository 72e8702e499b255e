#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "plate/survey.hpp"

namespace plate::cli {

/// Header of the survey report; `wrapped_planar_km` is appended when enabled.
inline constexpr std::string_view kSurveyHeader =
    "name_a,lat_a,lon_a,name_b,lat_b,lon_b,planar_km,chord_km,great_circle_km,"
    "haversine_km,paper_arcsin_km,error_pct";

/// Reads point pairs from CSV text. The header row must name the columns
/// name_a, lat_a, lon_a, name_b, lat_b, lon_b (degrees, lat before lon) in
/// any order; other columns are ignored, so survey reports read back in.
/// Blank lines and lines starting with '#' are skipped. Errors are
/// InvalidInput or DomainError with the 1-based line number in the message.
std::vector<PairRecord> parse_pairs_csv(std::istream& in);

/// Survey rows followed by '#'-prefixed per-band summary lines.
void write_survey_csv(std::ostream& out, const std::vector<SurveyRow>& rows);

}  // namespace plate::cli
