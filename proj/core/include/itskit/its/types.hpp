#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace itskit::its {

inline constexpr std::uint8_t kMessageIdDenm = 1;
inline constexpr std::uint8_t kMessageIdCam = 2;
inline constexpr std::uint8_t kMessageIdSpatem = 4;
inline constexpr std::uint8_t kMessageIdMapem = 5;

struct ItsPduHeader {
  std::uint8_t protocol_version = 2;
  std::uint8_t message_id = 0;
  std::uint32_t station_id = 0;

  bool operator==(const ItsPduHeader&) const = default;
};

/// Geographic position in 0.1 microdegree wire units with confidence
/// ellipse (centimeters / 0.1 degree orientation).
struct ReferencePosition {
  std::int32_t latitude = 900000001;
  std::int32_t longitude = 1800000001;
  std::int32_t altitude_value = 800001;
  std::uint16_t semi_major_confidence = 4095;
  std::uint16_t semi_minor_confidence = 4095;
  std::uint16_t semi_major_orientation = 3601;

  bool operator==(const ReferencePosition&) const = default;
};

struct BasicContainer {
  std::uint8_t station_type = 0;
  ReferencePosition reference_position;

  bool operator==(const BasicContainer&) const = default;
};

enum class DriveDirection : std::uint8_t { forward = 0, backward = 1, unavailable = 2 };

struct HighFrequencyContainer {
  std::uint16_t heading = 3601;                    // 0.1 deg
  std::uint16_t speed = 16383;                     // cm/s
  DriveDirection drive_direction = DriveDirection::unavailable;
  std::uint16_t vehicle_length = 1023;             // 0.1 m
  std::uint8_t vehicle_width = 62;                 // 0.1 m
  std::int16_t longitudinal_acceleration = 161;    // 0.1 m/s^2
  std::int16_t curvature = 1023;
  std::int32_t yaw_rate = 32767;                   // 0.01 deg/s
  std::optional<std::int16_t> vertical_acceleration;

  bool operator==(const HighFrequencyContainer&) const = default;
};

struct PathDelta {
  std::int32_t delta_latitude = 0;   // 0.1 microdegree
  std::int32_t delta_longitude = 0;  // 0.1 microdegree

  bool operator==(const PathDelta&) const = default;
};

struct LowFrequencyContainer {
  std::uint8_t vehicle_role = 0;
  std::uint8_t exterior_lights = 0;  // 8-bit string
  std::vector<PathDelta> path_history;

  bool operator==(const LowFrequencyContainer&) const = default;
};

struct Cam {
  ItsPduHeader header{2, kMessageIdCam, 0};
  std::uint16_t generation_delta_time = 0;  // ms, timestamp_its mod 65536
  BasicContainer basic;
  HighFrequencyContainer high_frequency;
  std::optional<LowFrequencyContainer> low_frequency;
  // The profile models the special vehicle container as presence only;
  // field observations show it is never filled.
  bool special_vehicle_present = false;

  bool operator==(const Cam&) const = default;
};

struct ActionId {
  std::uint32_t originating_station_id = 0;
  std::uint16_t sequence_number = 0;

  bool operator==(const ActionId&) const = default;
  auto operator<=>(const ActionId&) const = default;
};

struct EventType {
  std::uint8_t cause_code = 0;
  std::uint8_t sub_cause_code = 0;

  bool operator==(const EventType&) const = default;
  auto operator<=>(const EventType&) const = default;
};

struct DenmManagement {
  ActionId action_id;
  std::int64_t detection_time = 0;  // ms since ITS epoch 2004-01-01
  std::int64_t reference_time = 0;  // ms, >= detection_time
  ReferencePosition event_position;
  std::uint32_t validity_duration = 0;  // s
  std::uint8_t station_type = 0;

  bool operator==(const DenmManagement&) const = default;
};

struct DenmSituation {
  std::uint8_t information_quality = 0;
  EventType event_type;

  bool operator==(const DenmSituation&) const = default;
};

struct Denm {
  ItsPduHeader header{2, kMessageIdDenm, 0};
  DenmManagement management;
  std::optional<DenmSituation> situation;

  bool operator==(const Denm&) const = default;
};

enum class MovementPhase : std::uint8_t {
  unavailable = 0,
  dark = 1,
  stop_then_proceed = 2,
  stop_and_remain = 3,
  pre_movement = 4,
  permissive_movement_allowed = 5,
  protected_movement_allowed = 6,
  permissive_clearance = 7,
  protected_clearance = 8,
  caution_conflicting_traffic = 9,
};

struct Movement {
  std::uint8_t signal_group = 0;
  MovementPhase event_state = MovementPhase::unavailable;
  std::optional<std::uint16_t> min_end_time;  // 0.1 s within the hour

  bool operator==(const Movement&) const = default;
};

struct SpatIntersection {
  std::uint16_t intersection_id = 0;
  std::uint8_t revision = 0;
  std::vector<Movement> movements;

  bool operator==(const SpatIntersection&) const = default;
};

struct Spatem {
  ItsPduHeader header{2, kMessageIdSpatem, 0};
  std::vector<SpatIntersection> intersections;

  bool operator==(const Spatem&) const = default;
};

struct NodeOffset {
  std::int16_t dx = 0;  // cm
  std::int16_t dy = 0;  // cm

  bool operator==(const NodeOffset&) const = default;
};

struct LaneConnection {
  std::uint8_t lane_id = 0;
  std::optional<std::uint8_t> signal_group;

  bool operator==(const LaneConnection&) const = default;
};

struct MapLane {
  std::uint8_t lane_id = 0;
  bool ingress = false;
  std::vector<NodeOffset> node_offsets;  // polyline, >= 2 nodes
  std::vector<LaneConnection> connects_to;

  bool operator==(const MapLane&) const = default;
};

struct MapIntersection {
  std::uint16_t intersection_id = 0;
  ReferencePosition ref_point;
  std::vector<MapLane> lanes;

  bool operator==(const MapIntersection&) const = default;
};

struct Mapem {
  ItsPduHeader header{2, kMessageIdMapem, 0};
  std::vector<MapIntersection> intersections;

  bool operator==(const Mapem&) const = default;
};

using ItsMessage = std::variant<Cam, Denm, Spatem, Mapem>;

inline const ItsPduHeader& header_of(const ItsMessage& msg) {
  return std::visit([](const auto& m) -> const ItsPduHeader& { return m.header; }, msg);
}

constexpr const char* message_type_name(std::uint8_t message_id) {
  switch (message_id) {
    case kMessageIdDenm: return "denm";
    case kMessageIdCam: return "cam";
    case kMessageIdSpatem: return "spatem";
    case kMessageIdMapem: return "mapem";
    default: return "unknown";
  }
}

}  // namespace itskit::its
