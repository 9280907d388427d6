#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace itskit::its {

/// Scaled wire fields with unit semantics, used by the SI conversions.
enum class FieldKind {
  latitude,
  longitude,
  altitude,
  semi_axis_confidence,
  semi_major_orientation,
  heading,
  speed,
  vehicle_length,
  vehicle_width,
  longitudinal_acceleration,
  vertical_acceleration,
  curvature,
  yaw_rate,
};

struct FieldScale {
  std::string_view name;
  std::int64_t lo;
  std::int64_t hi;
  double si_per_step;  // SI units (degree, m, m/s, ...) per wire step
  std::optional<std::int64_t> unavailable;
};

const FieldScale& field_scale(FieldKind kind);

/// Wire integer -> SI value; nullopt when the wire value is the kind's
/// "unavailable" sentinel. Throws RangeViolation outside the declared range.
std::optional<double> wire_to_si(FieldKind kind, std::int64_t wire);

/// SI value -> nearest wire step. Throws RangeViolation if the rounded
/// value falls outside the declared range.
std::int64_t si_to_wire(FieldKind kind, double si);

}  // namespace itskit::its
