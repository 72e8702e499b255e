#include "plate/cli/csv.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "plate/cli/format.hpp"
#include "plate/errors.hpp"

namespace plate::cli {
namespace {

constexpr int kDegreePlaces = 9;
constexpr int kDistancePlaces = 3;

constexpr std::array<std::string_view, 6> kPairColumns = {"name_a", "lat_a", "lon_a",
                                                          "name_b", "lat_b", "lon_b"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

[[noreturn]] void fail_at(std::size_t line_no, const std::string& what) {
  std::ostringstream msg;
  msg << "line " << line_no << ": " << what;
  throw InvalidInput(msg.str());
}

double parse_degrees(std::string_view text, std::string_view column, std::size_t line_no) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end)
    fail_at(line_no, std::string(column) + " is not a number: '" + std::string(text) + "'");
  return value;
}

std::string_view strip_bom(std::string_view line) {
  if (line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
  return line;
}

}  // namespace

std::vector<PairRecord> parse_pairs_csv(std::istream& in) {
  std::vector<PairRecord> pairs;
  std::array<std::size_t, kPairColumns.size()> index{};
  std::size_t width = 0;
  bool have_header = false;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(line_no == 1 ? strip_bom(raw) : std::string_view(raw));
    if (line.empty() || line.starts_with('#')) continue;
    const auto fields = split(line);

    if (!have_header) {
      for (std::size_t c = 0; c < kPairColumns.size(); ++c) {
        std::size_t found = fields.size();
        for (std::size_t f = 0; f < fields.size(); ++f)
          if (fields[f] == kPairColumns[c]) found = f;
        if (found == fields.size())
          fail_at(line_no, "header is missing column '" + std::string(kPairColumns[c]) + "'");
        index[c] = found;
      }
      width = fields.size();
      have_header = true;
      continue;
    }

    if (fields.size() != width) {
      std::ostringstream what;
      what << "expected " << width << " fields, found " << fields.size();
      fail_at(line_no, what.str());
    }
    const auto name_a = fields[index[0]];
    const auto name_b = fields[index[3]];
    if (name_a.empty() || name_b.empty()) fail_at(line_no, "point labels must be non-empty");
    try {
      const GeoPoint a = GeoPoint::from_degrees(
          parse_degrees(fields[index[1]], "lat_a", line_no),
          parse_degrees(fields[index[2]], "lon_a", line_no));
      const GeoPoint b = GeoPoint::from_degrees(
          parse_degrees(fields[index[4]], "lat_b", line_no),
          parse_degrees(fields[index[5]], "lon_b", line_no));
      pairs.push_back({std::string(name_a), std::string(name_b), a, b});
    } catch (const DomainError& e) {
      std::ostringstream msg;
      msg << "line " << line_no << ": " << e.what();
      throw DomainError(e.coordinate(), msg.str());
    }
  }
  if (!have_header) throw InvalidInput("pairs file has no header row");
  return pairs;
}

void write_survey_csv(std::ostream& out, const std::vector<SurveyRow>& rows) {
  const bool wrapped = !rows.empty() && rows.front().wrapped_planar_km.has_value();
  out << kSurveyHeader;
  if (wrapped) out << ",wrapped_planar_km";
  out << '\n';
  for (const SurveyRow& r : rows) {
    for (const std::string& label : {r.name_a, r.name_b})
      if (label.find_first_of(",\r\n") != std::string::npos)
        throw InvalidInput("label '" + label + "' cannot be written to CSV");
    out << r.name_a << ',' << fixed(r.a.lat().deg(), kDegreePlaces) << ','
        << fixed(r.a.lon().deg(), kDegreePlaces) << ',' << r.name_b << ','
        << fixed(r.b.lat().deg(), kDegreePlaces) << ','
        << fixed(r.b.lon().deg(), kDegreePlaces) << ','
        << fixed(r.report.planar_km, kDistancePlaces) << ','
        << fixed(r.report.chord_km, kDistancePlaces) << ','
        << fixed(r.report.great_circle_km, kDistancePlaces) << ','
        << fixed(r.report.haversine_km, kDistancePlaces) << ','
        << fixed(r.report.paper_arcsin_km, kDistancePlaces) << ','
        << fixed(r.report.planar_error_pct, kDistancePlaces);
    if (wrapped) out << ',' << fixed(r.wrapped_planar_km.value_or(0.0), kDistancePlaces);
    out << '\n';
  }
  out << "# lat_band_deg,count,mean_error_pct\n";
  for (const BandSummary& b : summarize_bands(rows)) {
    out << "# " << fixed(b.lower_deg, 0) << '-' << fixed(b.upper_deg, 0) << ','
        << b.count << ',' << fixed(b.mean_error_pct, kDistancePlaces) << '\n';
  }
}

}  // namespace plate::cli
