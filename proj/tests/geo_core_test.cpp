#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "plate/errors.hpp"
#include "plate/geo_core.hpp"
#include "test_support.hpp"

using namespace plate;

TEST(DegToRad, KnownValues) {
  EXPECT_EQ(deg_to_rad(0.0).rad(), 0.0);
  EXPECT_DOUBLE_EQ(deg_to_rad(180.0).rad(), kPi);
  EXPECT_NEAR(deg_to_rad(24.3).rad(), 0.42411500823462209959, 1e-15);
}

TEST(DegToRad, RejectsNonFinite) {
  EXPECT_THROW(deg_to_rad(std::numeric_limits<double>::quiet_NaN()), InvalidInput);
  EXPECT_THROW(deg_to_rad(std::numeric_limits<double>::infinity()), InvalidInput);
  EXPECT_THROW(Angle::radians(-std::numeric_limits<double>::infinity()), InvalidInput);
}

TEST(GeoPoint, AcceptsDomainEndpoints) {
  EXPECT_NO_THROW(GeoPoint(Angle::radians(kHalfPi), Angle::radians(kPi)));
  EXPECT_NO_THROW(GeoPoint(Angle::radians(-kHalfPi), Angle::radians(-kPi)));
  const GeoPoint corner = GeoPoint::from_degrees(-90.0, 180.0);
  EXPECT_EQ(corner.lat().rad(), -kHalfPi);
  EXPECT_EQ(corner.lon().rad(), kPi);
}

TEST(GeoPoint, RejectsOvershootNamingCoordinate) {
  try {
    GeoPoint::from_degrees(91.0, 0.0);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.coordinate(), "lat");
  }
  try {
    GeoPoint(Angle::radians(0.0), Angle::radians(std::nextafter(kPi, 4.0)));
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.coordinate(), "lon");
  }
  EXPECT_THROW(GeoPoint::from_degrees(0.0, -180.0001), DomainError);
}

TEST(SphereModel, DefaultAndValidation) {
  EXPECT_EQ(SphereModel().radius_km(), 6371.0);
  EXPECT_THROW(SphereModel(0.0), InvalidInput);
  EXPECT_THROW(SphereModel(-1.0), InvalidInput);
  EXPECT_THROW(SphereModel(std::numeric_limits<double>::infinity()), InvalidInput);
}

TEST(SphericalToCartesian, AxesAndPole) {
  const SphereModel earth;
  const Cartesian3 origin = spherical_to_cartesian(GeoPoint::from_degrees(0, 0), earth);
  EXPECT_DOUBLE_EQ(origin.x, 6371.0);
  EXPECT_EQ(origin.y, 0.0);
  EXPECT_EQ(origin.z, 0.0);

  for (double lon : {-180.0, -45.0, 0.0, 123.0}) {
    const Cartesian3 pole = spherical_to_cartesian(GeoPoint::from_degrees(90, lon), earth);
    EXPECT_NEAR(pole.x, 0.0, 1e-9);
    EXPECT_NEAR(pole.y, 0.0, 1e-9);
    EXPECT_DOUBLE_EQ(pole.z, 6371.0);
  }
}

TEST(SphericalToCartesian, WorkedExample) {
  // mpmath at lat 0.408407, lon 0.424115.
  const GeoPoint p(Angle::radians(0.408407), Angle::radians(0.424115));
  const Cartesian3 c = spherical_to_cartesian(p, SphereModel());
  EXPECT_NEAR(c.x, 5328.988498065093, 1e-9);
  EXPECT_NEAR(c.y, 2406.130515289411, 1e-9);
  EXPECT_NEAR(c.z, 2530.228948313385, 1e-9);
}

TEST(SphericalToCartesian, NormAndSymmetryProperties) {
  plate::testing::PointGen gen(101);
  const SphereModel s(1737.4);
  for (int i = 0; i < 10000; ++i) {
    const GeoPoint g = gen.any();
    const Cartesian3 c = spherical_to_cartesian(g, s);
    ASSERT_NEAR(norm(c) / s.radius_km(), 1.0, 1e-12);

    const Cartesian3 lon_flip = spherical_to_cartesian(GeoPoint(g.lat(), -g.lon()), s);
    ASSERT_EQ(lon_flip.x, c.x);
    ASSERT_EQ(lon_flip.y, -c.y);
    ASSERT_EQ(lon_flip.z, c.z);

    const Cartesian3 lat_flip = spherical_to_cartesian(GeoPoint(-g.lat(), g.lon()), s);
    ASSERT_EQ(lat_flip.x, c.x);
    ASSERT_EQ(lat_flip.y, c.y);
    ASSERT_EQ(lat_flip.z, -c.z);
  }
}
