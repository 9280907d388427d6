#include "itskit/its/validate.hpp"

#include <set>

#include "itskit/its/wire_ranges.hpp"

namespace itskit::its {

namespace {

class Checker {
 public:
  std::vector<Violation> take() { return std::move(violations_); }

  void range(const std::string& path, std::int64_t value, std::int64_t lo, std::int64_t hi) {
    if (value < lo || value > hi) {
      violations_.push_back({path, "value " + std::to_string(value) + " outside [" +
                                       std::to_string(lo) + ", " + std::to_string(hi) + "]"});
    }
  }

  void count(const std::string& path, std::size_t n, std::size_t lo, std::size_t hi) {
    if (n < lo || n > hi) {
      violations_.push_back({path, "sequence size " + std::to_string(n) + " outside [" +
                                       std::to_string(lo) + ", " + std::to_string(hi) + "]"});
    }
  }

  void rule(const std::string& path, const std::string& reason) {
    violations_.push_back({path, reason});
  }

  void header(const ItsPduHeader& h, std::uint8_t expected_id) {
    // protocol_version and message_id are uint8_t: range holds by type.
    if (h.message_id != expected_id) {
      rule("header.message_id", "message_id " + std::to_string(h.message_id) +
                                    " does not match payload type " + std::to_string(expected_id));
    }
  }

  void reference_position(const std::string& path, const ReferencePosition& p) {
    range(path + ".latitude", p.latitude, wire::kLatitudeMin, wire::kLatitudeMax);
    range(path + ".longitude", p.longitude, wire::kLongitudeMin, wire::kLongitudeMax);
    range(path + ".altitude_value", p.altitude_value, wire::kAltitudeMin, wire::kAltitudeMax);
    range(path + ".semi_major_confidence", p.semi_major_confidence, wire::kSemiAxisConfidenceMin,
          wire::kSemiAxisConfidenceMax);
    range(path + ".semi_minor_confidence", p.semi_minor_confidence, wire::kSemiAxisConfidenceMin,
          wire::kSemiAxisConfidenceMax);
    range(path + ".semi_major_orientation", p.semi_major_orientation, wire::kHeadingMin,
          wire::kHeadingMax);
  }

 private:
  std::vector<Violation> violations_;
};

void check_cam(const Cam& cam, Checker& c) {
  c.header(cam.header, kMessageIdCam);
  c.reference_position("basic.reference_position", cam.basic.reference_position);

  const auto& hf = cam.high_frequency;
  c.range("high_frequency.heading", hf.heading, wire::kHeadingMin, wire::kHeadingMax);
  c.range("high_frequency.speed", hf.speed, wire::kSpeedMin, wire::kSpeedMax);
  c.range("high_frequency.drive_direction", static_cast<std::int64_t>(hf.drive_direction),
          wire::kDriveDirectionMin, wire::kDriveDirectionMax);
  c.range("high_frequency.vehicle_length", hf.vehicle_length, wire::kVehicleLengthMin,
          wire::kVehicleLengthMax);
  c.range("high_frequency.vehicle_width", hf.vehicle_width, wire::kVehicleWidthMin,
          wire::kVehicleWidthMax);
  c.range("high_frequency.longitudinal_acceleration", hf.longitudinal_acceleration,
          wire::kAccelerationMin, wire::kAccelerationMax);
  c.range("high_frequency.curvature", hf.curvature, wire::kCurvatureMin, wire::kCurvatureMax);
  c.range("high_frequency.yaw_rate", hf.yaw_rate, wire::kYawRateMin, wire::kYawRateMax);
  if (hf.vertical_acceleration) {
    c.range("high_frequency.vertical_acceleration", *hf.vertical_acceleration,
            wire::kAccelerationMin, wire::kAccelerationMax);
  }

  if (cam.low_frequency) {
    const auto& lf = *cam.low_frequency;
    c.range("low_frequency.vehicle_role", lf.vehicle_role, wire::kVehicleRoleMin,
            wire::kVehicleRoleMax);
    c.count("low_frequency.path_history", lf.path_history.size(), 0, wire::kPathHistoryMaxPoints);
    for (std::size_t i = 0; i < lf.path_history.size(); ++i) {
      const auto& d = lf.path_history[i];
      const std::string p = "low_frequency.path_history[" + std::to_string(i) + "]";
      c.range(p + ".delta_latitude", d.delta_latitude, wire::kPathDeltaMin, wire::kPathDeltaMax);
      c.range(p + ".delta_longitude", d.delta_longitude, wire::kPathDeltaMin, wire::kPathDeltaMax);
    }
  }
}

void check_denm(const Denm& denm, Checker& c) {
  c.header(denm.header, kMessageIdDenm);
  const auto& m = denm.management;
  c.range("management.detection_time", m.detection_time, wire::kTimestampItsMin,
          wire::kTimestampItsMax);
  c.range("management.reference_time", m.reference_time, wire::kTimestampItsMin,
          wire::kTimestampItsMax);
  if (m.reference_time < m.detection_time) {
    c.rule("management.reference_time", "reference_time precedes detection_time");
  }
  c.reference_position("management.event_position", m.event_position);
  c.range("management.validity_duration", m.validity_duration, wire::kValidityDurationMin,
          wire::kValidityDurationMax);
  if (denm.situation) {
    c.range("situation.information_quality", denm.situation->information_quality,
            wire::kInformationQualityMin, wire::kInformationQualityMax);
  }
}

void check_spatem(const Spatem& spatem, Checker& c) {
  c.header(spatem.header, kMessageIdSpatem);
  c.count("intersections", spatem.intersections.size(), wire::kIntersectionsMin,
          wire::kIntersectionsMax);
  for (std::size_t i = 0; i < spatem.intersections.size(); ++i) {
    const auto& inter = spatem.intersections[i];
    const std::string p = "intersections[" + std::to_string(i) + "]";
    c.range(p + ".revision", inter.revision, wire::kRevisionMin, wire::kRevisionMax);
    c.count(p + ".movements", inter.movements.size(), wire::kMovementsMin, wire::kMovementsMax);
    std::set<std::uint8_t> groups;
    for (std::size_t j = 0; j < inter.movements.size(); ++j) {
      const auto& mov = inter.movements[j];
      const std::string q = p + ".movements[" + std::to_string(j) + "]";
      if (!groups.insert(mov.signal_group).second) {
        c.rule(q + ".signal_group",
               "signal_group " + std::to_string(mov.signal_group) + " not unique");
      }
      c.range(q + ".event_state", static_cast<std::int64_t>(mov.event_state),
              wire::kEventStateMin, wire::kEventStateMax);
      if (mov.min_end_time) {
        c.range(q + ".min_end_time", *mov.min_end_time, wire::kMinEndTimeMin, wire::kMinEndTimeMax);
      }
    }
  }
}

void check_mapem(const Mapem& mapem, Checker& c) {
  c.header(mapem.header, kMessageIdMapem);
  c.count("intersections", mapem.intersections.size(), wire::kIntersectionsMin,
          wire::kIntersectionsMax);
  for (std::size_t i = 0; i < mapem.intersections.size(); ++i) {
    const auto& inter = mapem.intersections[i];
    const std::string p = "intersections[" + std::to_string(i) + "]";
    c.reference_position(p + ".ref_point", inter.ref_point);
    c.count(p + ".lanes", inter.lanes.size(), wire::kLanesMin, wire::kLanesMax);
    for (std::size_t j = 0; j < inter.lanes.size(); ++j) {
      const auto& lane = inter.lanes[j];
      const std::string q = p + ".lanes[" + std::to_string(j) + "]";
      c.count(q + ".node_offsets", lane.node_offsets.size(), wire::kNodeOffsetsMin,
              wire::kNodeOffsetsMax);
      c.count(q + ".connects_to", lane.connects_to.size(), 0, wire::kConnectsToMax);
    }
  }
}

}  // namespace

std::vector<Violation> validate(const ItsMessage& msg) {
  Checker c;
  std::visit(
      [&c](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Cam>) {
          check_cam(m, c);
        } else if constexpr (std::is_same_v<T, Denm>) {
          check_denm(m, c);
        } else if constexpr (std::is_same_v<T, Spatem>) {
          check_spatem(m, c);
        } else {
          check_mapem(m, c);
        }
      },
      msg);
  return c.take();
}

}  // namespace itskit::its
