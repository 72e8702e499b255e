#include <gtest/gtest.h>

#include <cmath>
#include <thread>

#include "plate/errors.hpp"
#include "plate/survey.hpp"
#include "test_support.hpp"

using namespace plate;
namespace oracle = plate::testing::oracle;

namespace {
const SphereModel kEarth;
const ProjectionParams kPlateCarree;
}  // namespace

TEST(RunSurvey, WorkedExamplePair) {
  const auto rows =
      run_survey({{"P1", "P2", plate::testing::p1(), plate::testing::p2()}}, kPlateCarree, kEarth);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].name_a, "P1");
  EXPECT_NEAR(rows[0].report.planar_km, 7675.7, 0.5);
  EXPECT_NEAR(rows[0].report.planar_error_pct, 2.33, 0.1);
  EXPECT_FALSE(rows[0].wrapped_planar_km.has_value());
  // Midpoint latitude (23.4 - 3.67) / 2 = 9.865 deg.
  EXPECT_EQ(rows[0].lat_band_deg, 0.0);
}

TEST(RunSurvey, WrappedPlanarColumn) {
  const auto rows = run_survey({{"C", "D", plate::testing::point_c(), plate::testing::point_d()}},
                               kPlateCarree, kEarth, true);
  ASSERT_TRUE(rows[0].wrapped_planar_km.has_value());
  EXPECT_NEAR(*rows[0].wrapped_planar_km, oracle::kCDWrappedPlanarKm, 1e-8);
  EXPECT_NEAR(rows[0].report.planar_km, oracle::kCDPlanarKm, 1e-8);
  EXPECT_EQ(rows[0].lat_band_deg, 60.0);
}

TEST(RunSurvey, Errors) {
  EXPECT_THROW(run_survey({}, kPlateCarree, kEarth), InvalidInput);
  try {
    run_survey({{"a", "b", GeoPoint(), GeoPoint()}, {"", "b", GeoPoint(), GeoPoint()}},
               kPlateCarree, kEarth);
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("row 1"), std::string::npos);
  }
}

TEST(RandomPairs, DeterministicAndInDomain) {
  const auto first = random_pairs(5, 42);
  const auto second = random_pairs(5, 42);
  ASSERT_EQ(first.size(), 5u);
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(first[i].name_a, second[i].name_a);
    EXPECT_EQ(first[i].a, second[i].a);
    EXPECT_EQ(first[i].b, second[i].b);
  }
  EXPECT_NE(random_pairs(5, 43)[0].a, first[0].a);
  EXPECT_THROW(random_pairs(0, 1), InvalidInput);

  for (const PairRecord& pr : random_pairs(10000, 3)) {
    for (const GeoPoint& g : {pr.a, pr.b}) {
      ASSERT_LE(std::abs(g.lat().rad()), kHalfPi);
      ASSERT_LE(std::abs(g.lon().rad()), kPi);
    }
  }
}

TEST(RandomPairs, AreaUniformLatitude) {
  // E|lat| = pi/2 - 1 rad = 32.704 deg for sin(lat)-uniform sampling
  // (10^6-sample brute force in compute_oracles.py gives 32.727).
  double sum = 0.0;
  const auto pairs = random_pairs(10000, 7);
  for (const PairRecord& pr : pairs) sum += std::abs(pr.a.lat().deg()) + std::abs(pr.b.lat().deg());
  EXPECT_NEAR(sum / (2.0 * pairs.size()), 32.704, 1.5);
}

TEST(RandomPairs, ThreadSafeConcurrentCalls) {
  std::vector<PairRecord> a, b;
  std::thread t1([&] { a = random_pairs(1000, 11); });
  std::thread t2([&] { b = random_pairs(1000, 11); });
  t1.join();
  t2.join();
  for (std::size_t i = 0; i < a.size(); ++i) ASSERT_EQ(a[i].a, b[i].a);
}

TEST(SurveyProperties, TrendAndWrappedBound) {
  const auto rows = run_survey(random_pairs(10000, 1), kPlateCarree, kEarth, true);
  for (const SurveyRow& row : rows) {
    ASSERT_TRUE(std::isfinite(row.report.planar_error_pct));
    ASSERT_LE(*row.wrapped_planar_km, row.report.planar_km + 1e-9);
  }
  const auto bands = summarize_bands(rows);
  double low = NAN, high = NAN;
  for (const BandSummary& b : bands) {
    if (b.lower_deg == 0.0) low = b.mean_error_pct;
    if (b.lower_deg == 60.0) high = b.mean_error_pct;
  }
  EXPECT_GT(high, low);
}

TEST(SummarizeBands, Means) {
  SurveyRow r1, r2, r3;
  r1.report.planar_error_pct = 1.0;
  r2.report.planar_error_pct = 3.0;
  r3.report.planar_error_pct = 10.0;
  r3.lat_band_deg = 80.0;
  const auto bands = summarize_bands({r1, r2, r3});
  ASSERT_EQ(bands.size(), 2u);
  EXPECT_EQ(bands[0].count, 2u);
  EXPECT_EQ(bands[0].mean_error_pct, 2.0);
  EXPECT_EQ(bands[1].lower_deg, 80.0);
  EXPECT_EQ(bands[1].upper_deg, 90.0);
}

TEST(GridSpec, Validation) {
  EXPECT_NO_THROW((GridSpec{30, 30, 10}.validate()));
  EXPECT_NO_THROW((GridSpec{7.5, 7.5, 0}.validate()));
  EXPECT_THROW((GridSpec{25, 30, 10}.validate()), InvalidInput);
  EXPECT_THROW((GridSpec{30, 35, 10}.validate()), InvalidInput);
  EXPECT_THROW((GridSpec{0, 30, 10}.validate()), InvalidInput);
  EXPECT_THROW((GridSpec{30, -30, 10}.validate()), InvalidInput);
  EXPECT_THROW((GridSpec{30, 30, -1}.validate()), InvalidInput);
  EXPECT_THROW((GridSpec{30, 360, 10}.validate()), InvalidInput);
}

TEST(DistortionField, DefaultGrid) {
  const auto field = distortion_field(GridSpec{}, kPlateCarree);
  ASSERT_EQ(field.size(), 65u);
  // Row-major: north to south, west to east.
  const double lats[] = {60, 30, 0, -30, -60};
  for (std::size_t row = 0; row < 5; ++row) {
    for (std::size_t col = 0; col < 13; ++col) {
      const DistortionSample& s = field[row * 13 + col];
      ASSERT_NEAR(s.point.lat().deg(), lats[row], 1e-12);
      ASSERT_NEAR(s.point.lon().deg(), -180.0 + 30.0 * col, 1e-12);
      if (lats[row] == 0) {
        ASSERT_EQ(s.ellipse.semi_axis_parallel, 1.0);
        ASSERT_EQ(s.ellipse.semi_axis_meridian, 1.0);
        ASSERT_EQ(s.distance_distortion, 0.0);
      }
      if (std::abs(lats[row]) == 60) ASSERT_NEAR(s.ellipse.semi_axis_parallel, 2.0, 1e-12);
    }
  }
}

TEST(DistortionField, MarginZeroStillSkipsPoles) {
  const auto field = distortion_field(GridSpec{30, 90, 0}, kPlateCarree);
  EXPECT_EQ(field.size(), 5u * 5u);
  const auto narrow = distortion_field(GridSpec{30, 90, 40}, kPlateCarree);
  EXPECT_EQ(narrow.size(), 3u * 5u);
}
