#pragma once

namespace itskit::geo {

/// Mean Earth radius in meters; sub-millimeter geodesic accuracy is not a
/// goal at the distance scales this toolkit works with.
inline constexpr double kEarthRadiusMeters = 6371008.8;

struct GeoPoint {
  double lat = 0.0;  // degrees
  double lon = 0.0;  // degrees
};

/// Great-circle distance in meters. Throws DomainError for |lat| > 90 or
/// |lon| > 180.
double haversine(const GeoPoint& a, const GeoPoint& b);

/// Initial great-circle bearing from `a` to `b` in degrees [0, 360).
double initial_bearing(const GeoPoint& a, const GeoPoint& b);

/// Point at fraction `f` along the great circle from `a` to `b` (spherical
/// linear interpolation).
GeoPoint interpolate(const GeoPoint& a, const GeoPoint& b, double f);

}  // namespace itskit::geo
