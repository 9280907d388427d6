#include "itskit/geo/geo.hpp"

#include <cmath>

#include "itskit/errors.hpp"

namespace itskit::geo {

namespace {

constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
constexpr double kRadToDeg = 180.0 / 3.14159265358979323846;

void check_domain(const GeoPoint& p) {
  if (std::abs(p.lat) > 90.0 || std::abs(p.lon) > 180.0) {
    throw Error(Errc::domain_error, "coordinates outside |lat| <= 90, |lon| <= 180");
  }
}

}  // namespace

double haversine(const GeoPoint& a, const GeoPoint& b) {
  check_domain(a);
  check_domain(b);
  const double phi1 = a.lat * kDegToRad;
  const double phi2 = b.lat * kDegToRad;
  const double dphi = (b.lat - a.lat) * kDegToRad;
  const double dlambda = (b.lon - a.lon) * kDegToRad;
  const double s = std::sin(dphi / 2.0);
  const double t = std::sin(dlambda / 2.0);
  const double h = s * s + std::cos(phi1) * std::cos(phi2) * t * t;
  return 2.0 * kEarthRadiusMeters * std::asin(std::min(1.0, std::sqrt(h)));
}

double initial_bearing(const GeoPoint& a, const GeoPoint& b) {
  check_domain(a);
  check_domain(b);
  const double phi1 = a.lat * kDegToRad;
  const double phi2 = b.lat * kDegToRad;
  const double dlambda = (b.lon - a.lon) * kDegToRad;
  const double y = std::sin(dlambda) * std::cos(phi2);
  const double x =
      std::cos(phi1) * std::sin(phi2) - std::sin(phi1) * std::cos(phi2) * std::cos(dlambda);
  const double theta = std::atan2(y, x) * kRadToDeg;
  return std::fmod(theta + 360.0, 360.0);
}

GeoPoint interpolate(const GeoPoint& a, const GeoPoint& b, double f) {
  check_domain(a);
  check_domain(b);
  const double phi1 = a.lat * kDegToRad;
  const double lam1 = a.lon * kDegToRad;
  const double phi2 = b.lat * kDegToRad;
  const double lam2 = b.lon * kDegToRad;

  const double delta = haversine(a, b) / kEarthRadiusMeters;  // angular distance
  if (delta < 1e-12) {
    return a;
  }
  const double sin_delta = std::sin(delta);
  const double w1 = std::sin((1.0 - f) * delta) / sin_delta;
  const double w2 = std::sin(f * delta) / sin_delta;
  const double x = w1 * std::cos(phi1) * std::cos(lam1) + w2 * std::cos(phi2) * std::cos(lam2);
  const double y = w1 * std::cos(phi1) * std::sin(lam1) + w2 * std::cos(phi2) * std::sin(lam2);
  const double z = w1 * std::sin(phi1) + w2 * std::sin(phi2);
  return {std::atan2(z, std::sqrt(x * x + y * y)) * kRadToDeg, std::atan2(y, x) * kRadToDeg};
}

}  // namespace itskit::geo
