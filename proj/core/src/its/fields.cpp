#include "itskit/its/fields.hpp"

#include <cmath>

#include "itskit/errors.hpp"
#include "itskit/its/wire_ranges.hpp"

namespace itskit::its {

namespace {

const FieldScale kScales[] = {
    {"latitude", wire::kLatitudeMin, wire::kLatitudeMax, 1e-7, wire::kLatitudeUnavailable},
    {"longitude", wire::kLongitudeMin, wire::kLongitudeMax, 1e-7, wire::kLongitudeUnavailable},
    {"altitude", wire::kAltitudeMin, wire::kAltitudeMax, 0.01, wire::kAltitudeUnavailable},
    {"semi_axis_confidence", wire::kSemiAxisConfidenceMin, wire::kSemiAxisConfidenceMax, 0.01,
     wire::kSemiAxisConfidenceUnavailable},
    {"semi_major_orientation", wire::kHeadingMin, wire::kHeadingMax, 0.1,
     wire::kHeadingUnavailable},
    {"heading", wire::kHeadingMin, wire::kHeadingMax, 0.1, wire::kHeadingUnavailable},
    {"speed", wire::kSpeedMin, wire::kSpeedMax, 0.01, wire::kSpeedUnavailable},
    {"vehicle_length", wire::kVehicleLengthMin, wire::kVehicleLengthMax, 0.1,
     wire::kVehicleLengthUnavailable},
    {"vehicle_width", wire::kVehicleWidthMin, wire::kVehicleWidthMax, 0.1,
     wire::kVehicleWidthUnavailable},
    {"longitudinal_acceleration", wire::kAccelerationMin, wire::kAccelerationMax, 0.1,
     wire::kAccelerationUnavailable},
    {"vertical_acceleration", wire::kAccelerationMin, wire::kAccelerationMax, 0.1,
     wire::kAccelerationUnavailable},
    {"curvature", wire::kCurvatureMin, wire::kCurvatureMax, 1e-4, wire::kCurvatureUnavailable},
    {"yaw_rate", wire::kYawRateMin, wire::kYawRateMax, 0.01, wire::kYawRateUnavailable},
};

}  // namespace

const FieldScale& field_scale(FieldKind kind) {
  return kScales[static_cast<std::size_t>(kind)];
}

std::optional<double> wire_to_si(FieldKind kind, std::int64_t wire) {
  const FieldScale& scale = field_scale(kind);
  if (wire < scale.lo || wire > scale.hi) {
    throw Error(Errc::range_violation, std::string(scale.name) + " wire value " +
                                           std::to_string(wire) + " outside [" +
                                           std::to_string(scale.lo) + ", " +
                                           std::to_string(scale.hi) + "]");
  }
  if (scale.unavailable && wire == *scale.unavailable) {
    return std::nullopt;
  }
  return static_cast<double>(wire) * scale.si_per_step;
}

std::int64_t si_to_wire(FieldKind kind, double si) {
  const FieldScale& scale = field_scale(kind);
  const auto wire = static_cast<std::int64_t>(std::llround(si / scale.si_per_step));
  if (wire < scale.lo || wire > scale.hi) {
    throw Error(Errc::range_violation, std::string(scale.name) + " SI value " +
                                           std::to_string(si) + " maps outside wire range");
  }
  return wire;
}

}  // namespace itskit::its
