#include "itskit/codec/codec.hpp"

#include <array>

#include "itskit/bits/bit_buffer.hpp"
#include "itskit/its/wire_ranges.hpp"

namespace itskit::codec {

namespace wire = its::wire;
using bits::BitBuffer;

namespace {

// Extensible types carry a leading extension bit; the encoder always writes
// 0 and the decoder fails loudly on 1 rather than misparsing.
void write_extension_bit(BitBuffer& buf) { buf.write_bit(false); }

void read_extension_bit(BitBuffer& buf) {
  if (buf.read_bit()) {
    throw Error(Errc::unsupported_extension, "extension bit set");
  }
}

void encode_header(BitBuffer& buf, const its::ItsPduHeader& h) {
  buf.write_constrained_int(h.protocol_version, wire::kProtocolVersionMin,
                            wire::kProtocolVersionMax);
  buf.write_constrained_int(h.message_id, wire::kMessageIdMin, wire::kMessageIdMax);
  buf.write_constrained_int(h.station_id, wire::kStationIdMin, wire::kStationIdMax);
}

its::ItsPduHeader decode_header(BitBuffer& buf) {
  its::ItsPduHeader h;
  h.protocol_version = static_cast<std::uint8_t>(
      buf.read_constrained_int(wire::kProtocolVersionMin, wire::kProtocolVersionMax));
  h.message_id =
      static_cast<std::uint8_t>(buf.read_constrained_int(wire::kMessageIdMin, wire::kMessageIdMax));
  h.station_id =
      static_cast<std::uint32_t>(buf.read_constrained_int(wire::kStationIdMin, wire::kStationIdMax));
  return h;
}

void encode_reference_position(BitBuffer& buf, const its::ReferencePosition& p) {
  buf.write_constrained_int(p.latitude, wire::kLatitudeMin, wire::kLatitudeMax);
  buf.write_constrained_int(p.longitude, wire::kLongitudeMin, wire::kLongitudeMax);
  buf.write_constrained_int(p.altitude_value, wire::kAltitudeMin, wire::kAltitudeMax);
  buf.write_constrained_int(p.semi_major_confidence, wire::kSemiAxisConfidenceMin,
                            wire::kSemiAxisConfidenceMax);
  buf.write_constrained_int(p.semi_minor_confidence, wire::kSemiAxisConfidenceMin,
                            wire::kSemiAxisConfidenceMax);
  buf.write_constrained_int(p.semi_major_orientation, wire::kHeadingMin, wire::kHeadingMax);
}

its::ReferencePosition decode_reference_position(BitBuffer& buf) {
  its::ReferencePosition p;
  p.latitude = static_cast<std::int32_t>(
      buf.read_constrained_int(wire::kLatitudeMin, wire::kLatitudeMax));
  p.longitude = static_cast<std::int32_t>(
      buf.read_constrained_int(wire::kLongitudeMin, wire::kLongitudeMax));
  p.altitude_value =
      static_cast<std::int32_t>(buf.read_constrained_int(wire::kAltitudeMin, wire::kAltitudeMax));
  p.semi_major_confidence = static_cast<std::uint16_t>(
      buf.read_constrained_int(wire::kSemiAxisConfidenceMin, wire::kSemiAxisConfidenceMax));
  p.semi_minor_confidence = static_cast<std::uint16_t>(
      buf.read_constrained_int(wire::kSemiAxisConfidenceMin, wire::kSemiAxisConfidenceMax));
  p.semi_major_orientation = static_cast<std::uint16_t>(
      buf.read_constrained_int(wire::kHeadingMin, wire::kHeadingMax));
  return p;
}

void encode_cam(BitBuffer& buf, const its::Cam& cam) {
  write_extension_bit(buf);
  const std::array<bool, 2> optionals{cam.low_frequency.has_value(), cam.special_vehicle_present};
  buf.write_optional_flags(optionals);
  buf.write_constrained_int(cam.generation_delta_time, wire::kGenerationDeltaTimeMin,
                            wire::kGenerationDeltaTimeMax);

  write_extension_bit(buf);
  buf.write_constrained_int(cam.basic.station_type, wire::kStationTypeMin, wire::kStationTypeMax);
  encode_reference_position(buf, cam.basic.reference_position);

  const auto& hf = cam.high_frequency;
  write_extension_bit(buf);
  buf.write_optional_flags(std::array<bool, 1>{hf.vertical_acceleration.has_value()});
  buf.write_constrained_int(hf.heading, wire::kHeadingMin, wire::kHeadingMax);
  buf.write_constrained_int(hf.speed, wire::kSpeedMin, wire::kSpeedMax);
  buf.write_constrained_int(static_cast<std::int64_t>(hf.drive_direction),
                            wire::kDriveDirectionMin, wire::kDriveDirectionMax);
  buf.write_constrained_int(hf.vehicle_length, wire::kVehicleLengthMin, wire::kVehicleLengthMax);
  buf.write_constrained_int(hf.vehicle_width, wire::kVehicleWidthMin, wire::kVehicleWidthMax);
  buf.write_constrained_int(hf.longitudinal_acceleration, wire::kAccelerationMin,
                            wire::kAccelerationMax);
  buf.write_constrained_int(hf.curvature, wire::kCurvatureMin, wire::kCurvatureMax);
  buf.write_constrained_int(hf.yaw_rate, wire::kYawRateMin, wire::kYawRateMax);
  if (hf.vertical_acceleration) {
    buf.write_constrained_int(*hf.vertical_acceleration, wire::kAccelerationMin,
                              wire::kAccelerationMax);
  }

  if (cam.low_frequency) {
    const auto& lf = *cam.low_frequency;
    write_extension_bit(buf);
    buf.write_constrained_int(lf.vehicle_role, wire::kVehicleRoleMin, wire::kVehicleRoleMax);
    buf.write_bits(lf.exterior_lights, wire::kExteriorLightsBits);
    buf.write_constrained_int(static_cast<std::int64_t>(lf.path_history.size()), 0,
                              static_cast<std::int64_t>(wire::kPathHistoryMaxPoints));
    for (const auto& d : lf.path_history) {
      buf.write_constrained_int(d.delta_latitude, wire::kPathDeltaMin, wire::kPathDeltaMax);
      buf.write_constrained_int(d.delta_longitude, wire::kPathDeltaMin, wire::kPathDeltaMax);
    }
  }
  // special vehicle container: presence bit only, no body in the profile
}

its::Cam decode_cam(BitBuffer& buf, const its::ItsPduHeader& header) {
  its::Cam cam;
  cam.header = header;
  read_extension_bit(buf);
  const bool lf_present = buf.read_bit();
  cam.special_vehicle_present = buf.read_bit();
  cam.generation_delta_time = static_cast<std::uint16_t>(
      buf.read_constrained_int(wire::kGenerationDeltaTimeMin, wire::kGenerationDeltaTimeMax));

  read_extension_bit(buf);
  cam.basic.station_type = static_cast<std::uint8_t>(
      buf.read_constrained_int(wire::kStationTypeMin, wire::kStationTypeMax));
  cam.basic.reference_position = decode_reference_position(buf);

  auto& hf = cam.high_frequency;
  read_extension_bit(buf);
  const bool vert_present = buf.read_bit();
  hf.heading =
      static_cast<std::uint16_t>(buf.read_constrained_int(wire::kHeadingMin, wire::kHeadingMax));
  hf.speed = static_cast<std::uint16_t>(buf.read_constrained_int(wire::kSpeedMin, wire::kSpeedMax));
  hf.drive_direction = static_cast<its::DriveDirection>(
      buf.read_constrained_int(wire::kDriveDirectionMin, wire::kDriveDirectionMax));
  hf.vehicle_length = static_cast<std::uint16_t>(
      buf.read_constrained_int(wire::kVehicleLengthMin, wire::kVehicleLengthMax));
  hf.vehicle_width = static_cast<std::uint8_t>(
      buf.read_constrained_int(wire::kVehicleWidthMin, wire::kVehicleWidthMax));
  hf.longitudinal_acceleration = static_cast<std::int16_t>(
      buf.read_constrained_int(wire::kAccelerationMin, wire::kAccelerationMax));
  hf.curvature =
      static_cast<std::int16_t>(buf.read_constrained_int(wire::kCurvatureMin, wire::kCurvatureMax));
  hf.yaw_rate =
      static_cast<std::int32_t>(buf.read_constrained_int(wire::kYawRateMin, wire::kYawRateMax));
  if (vert_present) {
    hf.vertical_acceleration = static_cast<std::int16_t>(
        buf.read_constrained_int(wire::kAccelerationMin, wire::kAccelerationMax));
  }

  if (lf_present) {
    its::LowFrequencyContainer lf;
    read_extension_bit(buf);
    lf.vehicle_role = static_cast<std::uint8_t>(
        buf.read_constrained_int(wire::kVehicleRoleMin, wire::kVehicleRoleMax));
    lf.exterior_lights = static_cast<std::uint8_t>(buf.read_bits(wire::kExteriorLightsBits));
    const auto n = static_cast<std::size_t>(
        buf.read_constrained_int(0, static_cast<std::int64_t>(wire::kPathHistoryMaxPoints)));
    lf.path_history.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      its::PathDelta d;
      d.delta_latitude = static_cast<std::int32_t>(
          buf.read_constrained_int(wire::kPathDeltaMin, wire::kPathDeltaMax));
      d.delta_longitude = static_cast<std::int32_t>(
          buf.read_constrained_int(wire::kPathDeltaMin, wire::kPathDeltaMax));
      lf.path_history.push_back(d);
    }
    cam.low_frequency = std::move(lf);
  }
  return cam;
}

void encode_denm(BitBuffer& buf, const its::Denm& denm) {
  write_extension_bit(buf);
  buf.write_optional_flags(std::array<bool, 1>{denm.situation.has_value()});

  const auto& m = denm.management;
  write_extension_bit(buf);
  buf.write_constrained_int(m.action_id.originating_station_id, wire::kStationIdMin,
                            wire::kStationIdMax);
  buf.write_constrained_int(m.action_id.sequence_number, wire::kSequenceNumberMin,
                            wire::kSequenceNumberMax);
  buf.write_constrained_int(m.detection_time, wire::kTimestampItsMin, wire::kTimestampItsMax);
  buf.write_constrained_int(m.reference_time, wire::kTimestampItsMin, wire::kTimestampItsMax);
  encode_reference_position(buf, m.event_position);
  buf.write_constrained_int(m.validity_duration, wire::kValidityDurationMin,
                            wire::kValidityDurationMax);
  buf.write_constrained_int(m.station_type, wire::kStationTypeMin, wire::kStationTypeMax);

  if (denm.situation) {
    write_extension_bit(buf);
    buf.write_constrained_int(denm.situation->information_quality, wire::kInformationQualityMin,
                              wire::kInformationQualityMax);
    buf.write_constrained_int(denm.situation->event_type.cause_code, wire::kCauseCodeMin,
                              wire::kCauseCodeMax);
    buf.write_constrained_int(denm.situation->event_type.sub_cause_code, wire::kCauseCodeMin,
                              wire::kCauseCodeMax);
  }
}

its::Denm decode_denm(BitBuffer& buf, const its::ItsPduHeader& header) {
  its::Denm denm;
  denm.header = header;
  read_extension_bit(buf);
  const bool situation_present = buf.read_bit();

  auto& m = denm.management;
  read_extension_bit(buf);
  m.action_id.originating_station_id =
      static_cast<std::uint32_t>(buf.read_constrained_int(wire::kStationIdMin, wire::kStationIdMax));
  m.action_id.sequence_number = static_cast<std::uint16_t>(
      buf.read_constrained_int(wire::kSequenceNumberMin, wire::kSequenceNumberMax));
  m.detection_time = buf.read_constrained_int(wire::kTimestampItsMin, wire::kTimestampItsMax);
  m.reference_time = buf.read_constrained_int(wire::kTimestampItsMin, wire::kTimestampItsMax);
  m.event_position = decode_reference_position(buf);
  m.validity_duration = static_cast<std::uint32_t>(
      buf.read_constrained_int(wire::kValidityDurationMin, wire::kValidityDurationMax));
  m.station_type = static_cast<std::uint8_t>(
      buf.read_constrained_int(wire::kStationTypeMin, wire::kStationTypeMax));

  if (situation_present) {
    its::DenmSituation s;
    read_extension_bit(buf);
    s.information_quality = static_cast<std::uint8_t>(
        buf.read_constrained_int(wire::kInformationQualityMin, wire::kInformationQualityMax));
    s.event_type.cause_code =
        static_cast<std::uint8_t>(buf.read_constrained_int(wire::kCauseCodeMin, wire::kCauseCodeMax));
    s.event_type.sub_cause_code =
        static_cast<std::uint8_t>(buf.read_constrained_int(wire::kCauseCodeMin, wire::kCauseCodeMax));
    denm.situation = s;
  }
  return denm;
}

void encode_spatem(BitBuffer& buf, const its::Spatem& spatem) {
  write_extension_bit(buf);
  buf.write_constrained_int(static_cast<std::int64_t>(spatem.intersections.size()),
                            static_cast<std::int64_t>(wire::kIntersectionsMin),
                            static_cast<std::int64_t>(wire::kIntersectionsMax));
  for (const auto& inter : spatem.intersections) {
    write_extension_bit(buf);
    buf.write_constrained_int(inter.intersection_id, wire::kIntersectionIdMin,
                              wire::kIntersectionIdMax);
    buf.write_constrained_int(inter.revision, wire::kRevisionMin, wire::kRevisionMax);
    buf.write_constrained_int(static_cast<std::int64_t>(inter.movements.size()),
                              static_cast<std::int64_t>(wire::kMovementsMin),
                              static_cast<std::int64_t>(wire::kMovementsMax));
    for (const auto& mov : inter.movements) {
      write_extension_bit(buf);
      buf.write_optional_flags(std::array<bool, 1>{mov.min_end_time.has_value()});
      buf.write_constrained_int(mov.signal_group, wire::kSignalGroupMin, wire::kSignalGroupMax);
      buf.write_constrained_int(static_cast<std::int64_t>(mov.event_state), wire::kEventStateMin,
                                wire::kEventStateMax);
      if (mov.min_end_time) {
        buf.write_constrained_int(*mov.min_end_time, wire::kMinEndTimeMin, wire::kMinEndTimeMax);
      }
    }
  }
}

its::Spatem decode_spatem(BitBuffer& buf, const its::ItsPduHeader& header) {
  its::Spatem spatem;
  spatem.header = header;
  read_extension_bit(buf);
  const auto n_inter = static_cast<std::size_t>(
      buf.read_constrained_int(static_cast<std::int64_t>(wire::kIntersectionsMin),
                               static_cast<std::int64_t>(wire::kIntersectionsMax)));
  spatem.intersections.reserve(n_inter);
  for (std::size_t i = 0; i < n_inter; ++i) {
    its::SpatIntersection inter;
    read_extension_bit(buf);
    inter.intersection_id = static_cast<std::uint16_t>(
        buf.read_constrained_int(wire::kIntersectionIdMin, wire::kIntersectionIdMax));
    inter.revision =
        static_cast<std::uint8_t>(buf.read_constrained_int(wire::kRevisionMin, wire::kRevisionMax));
    const auto n_mov = static_cast<std::size_t>(
        buf.read_constrained_int(static_cast<std::int64_t>(wire::kMovementsMin),
                                 static_cast<std::int64_t>(wire::kMovementsMax)));
    inter.movements.reserve(n_mov);
    for (std::size_t j = 0; j < n_mov; ++j) {
      its::Movement mov;
      read_extension_bit(buf);
      const bool met_present = buf.read_bit();
      mov.signal_group = static_cast<std::uint8_t>(
          buf.read_constrained_int(wire::kSignalGroupMin, wire::kSignalGroupMax));
      mov.event_state = static_cast<its::MovementPhase>(
          buf.read_constrained_int(wire::kEventStateMin, wire::kEventStateMax));
      if (met_present) {
        mov.min_end_time = static_cast<std::uint16_t>(
            buf.read_constrained_int(wire::kMinEndTimeMin, wire::kMinEndTimeMax));
      }
      inter.movements.push_back(mov);
    }
    spatem.intersections.push_back(std::move(inter));
  }
  return spatem;
}

void encode_mapem(BitBuffer& buf, const its::Mapem& mapem) {
  write_extension_bit(buf);
  buf.write_constrained_int(static_cast<std::int64_t>(mapem.intersections.size()),
                            static_cast<std::int64_t>(wire::kIntersectionsMin),
                            static_cast<std::int64_t>(wire::kIntersectionsMax));
  for (const auto& inter : mapem.intersections) {
    write_extension_bit(buf);
    buf.write_constrained_int(inter.intersection_id, wire::kIntersectionIdMin,
                              wire::kIntersectionIdMax);
    encode_reference_position(buf, inter.ref_point);
    buf.write_constrained_int(static_cast<std::int64_t>(inter.lanes.size()),
                              static_cast<std::int64_t>(wire::kLanesMin),
                              static_cast<std::int64_t>(wire::kLanesMax));
    for (const auto& lane : inter.lanes) {
      write_extension_bit(buf);
      buf.write_constrained_int(lane.lane_id, wire::kLaneIdMin, wire::kLaneIdMax);
      buf.write_bit(lane.ingress);
      buf.write_constrained_int(static_cast<std::int64_t>(lane.node_offsets.size()),
                                static_cast<std::int64_t>(wire::kNodeOffsetsMin),
                                static_cast<std::int64_t>(wire::kNodeOffsetsMax));
      for (const auto& node : lane.node_offsets) {
        buf.write_constrained_int(node.dx, wire::kNodeOffsetMin, wire::kNodeOffsetMax);
        buf.write_constrained_int(node.dy, wire::kNodeOffsetMin, wire::kNodeOffsetMax);
      }
      buf.write_constrained_int(static_cast<std::int64_t>(lane.connects_to.size()), 0,
                                static_cast<std::int64_t>(wire::kConnectsToMax));
      for (const auto& conn : lane.connects_to) {
        buf.write_optional_flags(std::array<bool, 1>{conn.signal_group.has_value()});
        buf.write_constrained_int(conn.lane_id, wire::kLaneIdMin, wire::kLaneIdMax);
        if (conn.signal_group) {
          buf.write_constrained_int(*conn.signal_group, wire::kSignalGroupMin,
                                    wire::kSignalGroupMax);
        }
      }
    }
  }
}

its::Mapem decode_mapem(BitBuffer& buf, const its::ItsPduHeader& header) {
  its::Mapem mapem;
  mapem.header = header;
  read_extension_bit(buf);
  const auto n_inter = static_cast<std::size_t>(
      buf.read_constrained_int(static_cast<std::int64_t>(wire::kIntersectionsMin),
                               static_cast<std::int64_t>(wire::kIntersectionsMax)));
  mapem.intersections.reserve(n_inter);
  for (std::size_t i = 0; i < n_inter; ++i) {
    its::MapIntersection inter;
    read_extension_bit(buf);
    inter.intersection_id = static_cast<std::uint16_t>(
        buf.read_constrained_int(wire::kIntersectionIdMin, wire::kIntersectionIdMax));
    inter.ref_point = decode_reference_position(buf);
    const auto n_lanes =
        static_cast<std::size_t>(buf.read_constrained_int(static_cast<std::int64_t>(wire::kLanesMin),
                                                          static_cast<std::int64_t>(wire::kLanesMax)));
    inter.lanes.reserve(n_lanes);
    for (std::size_t j = 0; j < n_lanes; ++j) {
      its::MapLane lane;
      read_extension_bit(buf);
      lane.lane_id =
          static_cast<std::uint8_t>(buf.read_constrained_int(wire::kLaneIdMin, wire::kLaneIdMax));
      lane.ingress = buf.read_bit();
      const auto n_nodes = static_cast<std::size_t>(
          buf.read_constrained_int(static_cast<std::int64_t>(wire::kNodeOffsetsMin),
                                   static_cast<std::int64_t>(wire::kNodeOffsetsMax)));
      lane.node_offsets.reserve(n_nodes);
      for (std::size_t k = 0; k < n_nodes; ++k) {
        its::NodeOffset node;
        node.dx = static_cast<std::int16_t>(
            buf.read_constrained_int(wire::kNodeOffsetMin, wire::kNodeOffsetMax));
        node.dy = static_cast<std::int16_t>(
            buf.read_constrained_int(wire::kNodeOffsetMin, wire::kNodeOffsetMax));
        lane.node_offsets.push_back(node);
      }
      const auto n_conn = static_cast<std::size_t>(
          buf.read_constrained_int(0, static_cast<std::int64_t>(wire::kConnectsToMax)));
      lane.connects_to.reserve(n_conn);
      for (std::size_t k = 0; k < n_conn; ++k) {
        its::LaneConnection conn;
        const bool sg_present = buf.read_bit();
        conn.lane_id =
            static_cast<std::uint8_t>(buf.read_constrained_int(wire::kLaneIdMin, wire::kLaneIdMax));
        if (sg_present) {
          conn.signal_group = static_cast<std::uint8_t>(
              buf.read_constrained_int(wire::kSignalGroupMin, wire::kSignalGroupMax));
        }
        lane.connects_to.push_back(conn);
      }
      inter.lanes.push_back(std::move(lane));
    }
    mapem.intersections.push_back(std::move(inter));
  }
  return mapem;
}

}  // namespace

std::vector<std::uint8_t> encode_message(const its::ItsMessage& msg) {
  auto violations = its::validate(msg);
  if (!violations.empty()) {
    throw InvalidMessageError(std::move(violations));
  }
  BitBuffer buf;
  encode_header(buf, its::header_of(msg));
  std::visit(
      [&buf](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, its::Cam>) {
          encode_cam(buf, m);
        } else if constexpr (std::is_same_v<T, its::Denm>) {
          encode_denm(buf, m);
        } else if constexpr (std::is_same_v<T, its::Spatem>) {
          encode_spatem(buf, m);
        } else {
          encode_mapem(buf, m);
        }
      },
      msg);
  return buf.to_bytes();
}

its::ItsMessage decode_message(std::span<const std::uint8_t> payload) {
  BitBuffer buf = BitBuffer::from_bytes(payload);
  const its::ItsPduHeader header = decode_header(buf);

  its::ItsMessage msg = [&]() -> its::ItsMessage {
    switch (header.message_id) {
      case its::kMessageIdCam: return decode_cam(buf, header);
      case its::kMessageIdDenm: return decode_denm(buf, header);
      case its::kMessageIdSpatem: return decode_spatem(buf, header);
      case its::kMessageIdMapem: return decode_mapem(buf, header);
      default:
        throw Error(Errc::unknown_message_id,
                    "message_id " + std::to_string(header.message_id) + " not in profile");
    }
  }();

  if (buf.remaining() >= 8) {
    throw Error(Errc::padding_non_zero,
                std::to_string(buf.remaining()) + " bits of trailing data beyond message end");
  }
  if (!buf.remaining_is_zero()) {
    throw Error(Errc::padding_non_zero, "non-zero padding bits in final octet");
  }
  return msg;
}

its::ItsPduHeader peek_header(std::span<const std::uint8_t> payload) {
  if (payload.size() < 6) {
    throw Error(Errc::truncated,
                "header needs 6 octets, have " + std::to_string(payload.size()));
  }
  BitBuffer buf = BitBuffer::from_bytes(payload.subspan(0, 6));
  return decode_header(buf);
}

}  // namespace itskit::codec
