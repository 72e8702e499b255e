#include "plate/cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <utility>

#include "plate/cli/csv.hpp"
#include "plate/cli/format.hpp"
#include "plate/cli/svg.hpp"
#include "plate/distance.hpp"
#include "plate/errors.hpp"
#include "plate/projection.hpp"
#include "plate/survey.hpp"

namespace plate::cli {
namespace {

constexpr int kProjectionPlaces = 6;
constexpr int kDistancePlaces = 3;

struct GlobalOptions {
  double radius_km = SphereModel::kDefaultRadiusKm;
  double central_meridian_deg = 0.0;
  double standard_parallel_deg = 0.0;
  std::string output;
  std::string format;
};

struct ProjectOptions {
  std::optional<double> lat;
  std::optional<double> lon;
  std::string inverse;
};

struct DistanceOptions {
  std::string from;
  std::string to;
  std::string method = "report";
};

struct SurveyOptions {
  std::string pairs;
  std::size_t random = 0;
  std::uint64_t seed = 0;
  bool wrapped_planar = false;
};

struct TissotOptions {
  double grid_step = 30.0;
  double ellipse_scale = 500.0;
  double margin = 10.0;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::pair<double, double> parse_pair(const std::string& text, const std::string& flag) {
  const auto comma = text.find(',');
  auto number = [&](std::string_view s) {
    double v = 0.0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc{} || ptr != end)
      throw UsageError(flag + " expects two comma-separated numbers, got '" + text + "'");
    return v;
  };
  if (comma == std::string::npos)
    throw UsageError(flag + " expects two comma-separated numbers, got '" + text + "'");
  const std::string_view all(text);
  return {number(all.substr(0, comma)), number(all.substr(comma + 1))};
}

std::string resolve_format(const std::string& requested, const std::string& fallback,
                           std::initializer_list<const char*> allowed,
                           const std::string& command) {
  const std::string format = requested.empty() ? fallback : requested;
  for (const char* a : allowed)
    if (format == a) return format;
  throw UsageError("--format " + format + " is not supported by " + command);
}

void emit(const GlobalOptions& g, const std::string& content, std::ostream& out) {
  if (g.output.empty()) {
    out << content;
  } else {
    write_file_atomic(g.output, content);
  }
}

ProjectionParams params_from(const GlobalOptions& g) {
  return ProjectionParams(Angle::degrees(g.central_meridian_deg),
                          Angle::degrees(g.standard_parallel_deg));
}

void cmd_project(const GlobalOptions& g, const ProjectOptions& o, std::ostream& out) {
  const SphereModel sphere(g.radius_km);
  const ProjectionParams params = params_from(g);
  const std::string format = resolve_format(g.format, "text", {"text", "csv"}, "project");
  const char* sep = format == "csv" ? "," : ", ";
  std::ostringstream text;

  if (!o.inverse.empty()) {
    const auto [x, y] = parse_pair(o.inverse, "--inverse");
    const GeoPoint p = inverse(MapPoint{x, y}, params, sphere);
    if (format == "csv") text << "lat_deg,lon_deg\n";
    text << fixed(p.lat().deg(), kProjectionPlaces) << sep
         << fixed(p.lon().deg(), kProjectionPlaces) << '\n';
  } else {
    if (!o.lat || !o.lon) throw UsageError("project needs --lat and --lon (or --inverse x,y)");
    const MapPoint m = forward(GeoPoint::from_degrees(*o.lat, *o.lon), params, sphere);
    if (format == "csv") text << "x_km,y_km\n";
    text << fixed(m.x, kProjectionPlaces) << sep << fixed(m.y, kProjectionPlaces) << '\n';
  }
  emit(g, text.str(), out);
}

void cmd_distance(const GlobalOptions& g, const DistanceOptions& o, std::ostream& out) {
  const SphereModel sphere(g.radius_km);
  const ProjectionParams params = params_from(g);
  const std::string format = resolve_format(g.format, "text", {"text", "csv"}, "distance");
  const auto [lat_a, lon_a] = parse_pair(o.from, "--from");
  const auto [lat_b, lon_b] = parse_pair(o.to, "--to");
  const GeoPoint a = GeoPoint::from_degrees(lat_a, lon_a);
  const GeoPoint b = GeoPoint::from_degrees(lat_b, lon_b);

  std::ostringstream text;
  if (o.method == "report") {
    const DistanceReport r = distance_report(a, b, params, sphere);
    const std::pair<const char*, double> fields[] = {
        {"planar_km", r.planar_km},         {"chord_km", r.chord_km},
        {"great_circle_km", r.great_circle_km}, {"haversine_km", r.haversine_km},
        {"paper_arcsin_km", r.paper_arcsin_km}, {"error_pct", r.planar_error_pct}};
    if (format == "csv") {
      for (std::size_t i = 0; i < std::size(fields); ++i)
        text << (i ? "," : "") << fields[i].first;
      text << '\n';
      for (std::size_t i = 0; i < std::size(fields); ++i)
        text << (i ? "," : "") << fixed(fields[i].second, kDistancePlaces);
      text << '\n';
    } else {
      for (const auto& [name, value] : fields)
        text << name << ": " << fixed(value, kDistancePlaces) << '\n';
    }
  } else {
    double km = 0.0;
    if (o.method == "planar") {
      km = planar_distance(a, b, params, sphere);
    } else if (o.method == "chord") {
      km = chord_distance(a, b, sphere);
    } else if (o.method == "great-circle") {
      km = arc_from_chord(chord_distance(a, b, sphere), sphere);
    } else if (o.method == "haversine") {
      km = haversine_distance(a, b, sphere);
    } else {
      km = arc_from_chord_paper_variant(chord_distance(a, b, sphere), sphere);
    }
    if (format == "csv") text << o.method << "_km\n";
    text << fixed(km, kDistancePlaces) << '\n';
  }
  emit(g, text.str(), out);
}

void cmd_survey(const GlobalOptions& g, const SurveyOptions& o, std::ostream& out) {
  const SphereModel sphere(g.radius_km);
  const ProjectionParams params = params_from(g);
  resolve_format(g.format, "csv", {"csv"}, "survey");

  std::vector<PairRecord> pairs;
  if (!o.pairs.empty()) {
    std::ifstream in(o.pairs);
    if (!in) throw UsageError("cannot open pairs file '" + o.pairs + "'");
    pairs = parse_pairs_csv(in);
  } else {
    if (o.random == 0) throw UsageError("--random must be a positive count");
    pairs = random_pairs(o.random, o.seed);
  }
  std::ostringstream text;
  write_survey_csv(text, run_survey(pairs, params, sphere, o.wrapped_planar));
  emit(g, text.str(), out);
}

void cmd_tissot(const GlobalOptions& g, const TissotOptions& o, std::ostream& out) {
  const SphereModel sphere(g.radius_km);
  const ProjectionParams params = params_from(g);
  resolve_format(g.format, "svg", {"svg"}, "tissot");
  const GridSpec grid{o.grid_step, o.grid_step, o.margin};
  emit(g, render_svg(tissot_scene(grid, o.ellipse_scale, params, sphere)), out);
}

}  // namespace

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path temp = target;
  temp += ".tmp";
  {
    std::ofstream f(temp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write '" + temp.string() + "'");
    f << content;
    f.close();
    if (!f) throw Error("write to '" + temp.string() + "' failed");
  }
  fs::rename(temp, target);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equidistant cylindrical projection and distance-distortion toolkit.\n"
               "Coordinates are given in degrees, latitude first: --from LAT,LON.",
               "plate"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Key-value config file (keys are long flag names)");

  GlobalOptions g;
  app.add_option("--radius-km", g.radius_km, "Sphere radius in km")->capture_default_str();
  app.add_option("--central-meridian-deg", g.central_meridian_deg, "Central meridian")
      ->capture_default_str();
  app.add_option("--standard-parallel-deg", g.standard_parallel_deg, "Standard parallel")
      ->capture_default_str();
  app.add_option("-o,--output", g.output, "Write output to this file instead of stdout");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "svg", "text"}));

  ProjectOptions po;
  auto* project = app.add_subcommand("project", "Project LAT/LON (deg) to x,y (km)");
  auto* lat = project->add_option("--lat", po.lat, "Latitude, degrees");
  auto* lon = project->add_option("--lon", po.lon, "Longitude, degrees");
  project->add_option("--inverse", po.inverse, "Unproject X,Y (km) to lat, lon (deg)")
      ->excludes(lat)
      ->excludes(lon);

  DistanceOptions dopt;
  auto* distance = app.add_subcommand("distance", "Distance between two points");
  distance->add_option("--from", dopt.from, "First point LAT,LON (deg)")->required();
  distance->add_option("--to", dopt.to, "Second point LAT,LON (deg)")->required();
  distance->add_option("--method", dopt.method, "Distance formulation")
      ->check(CLI::IsMember(
          {"planar", "chord", "great-circle", "haversine", "paper-arcsin", "report"}))
      ->capture_default_str();

  SurveyOptions so;
  auto* survey = app.add_subcommand("survey", "Distance report over many point pairs (CSV)");
  auto* pairs_opt = survey->add_option("--pairs", so.pairs, "CSV file of point pairs");
  auto* random_opt = survey->add_option("--random", so.random, "Number of random pairs");
  random_opt->excludes(pairs_opt);
  survey->add_option("--seed", so.seed, "Random seed")->capture_default_str()->needs(random_opt);
  survey->add_flag("--wrapped-planar", so.wrapped_planar,
                   "Add planar distance with longitude difference wrapped to [-180, 180]");

  TissotOptions to;
  auto* tissot = app.add_subcommand("tissot", "Render Tissot indicatrices (SVG)");
  tissot->add_option("--grid-step", to.grid_step, "Graticule spacing, degrees")
      ->capture_default_str();
  tissot->add_option("--ellipse-scale", to.ellipse_scale, "Unit indicatrix radius, km")
      ->capture_default_str();
  tissot->add_option("--margin", to.margin, "Pole margin, degrees")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*project) cmd_project(g, po, out);
    if (*distance) cmd_distance(g, dopt, out);
    if (*survey) {
      if (so.pairs.empty() && random_opt->count() == 0)
        throw UsageError("survey needs --pairs FILE or --random N");
      cmd_survey(g, so, out);
    }
    if (*tissot) cmd_tissot(g, to, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kOk;
}

}  // namespace plate::cli
