#pragma once

#include <cstdint>

/// Wire-scale ranges and "unavailable" sentinels of the message profile,
/// following the ETSI common data dictionary conventions. Both validate()
/// and the codec enforce exactly these constants.
namespace itskit::its::wire {

inline constexpr std::int64_t kProtocolVersionMin = 0;
inline constexpr std::int64_t kProtocolVersionMax = 255;
inline constexpr std::int64_t kMessageIdMin = 0;
inline constexpr std::int64_t kMessageIdMax = 255;
inline constexpr std::int64_t kStationIdMin = 0;
inline constexpr std::int64_t kStationIdMax = 4294967295;

inline constexpr std::int64_t kLatitudeMin = -900000000;
inline constexpr std::int64_t kLatitudeMax = 900000001;
inline constexpr std::int64_t kLatitudeUnavailable = 900000001;
inline constexpr std::int64_t kLongitudeMin = -1800000000;
inline constexpr std::int64_t kLongitudeMax = 1800000001;
inline constexpr std::int64_t kLongitudeUnavailable = 1800000001;
inline constexpr std::int64_t kAltitudeMin = -100000;
inline constexpr std::int64_t kAltitudeMax = 800001;
inline constexpr std::int64_t kAltitudeUnavailable = 800001;
inline constexpr std::int64_t kSemiAxisConfidenceMin = 0;
inline constexpr std::int64_t kSemiAxisConfidenceMax = 4095;
inline constexpr std::int64_t kSemiAxisConfidenceUnavailable = 4095;
inline constexpr std::int64_t kHeadingMin = 0;
inline constexpr std::int64_t kHeadingMax = 3601;
inline constexpr std::int64_t kHeadingUnavailable = 3601;

inline constexpr std::int64_t kGenerationDeltaTimeMin = 0;
inline constexpr std::int64_t kGenerationDeltaTimeMax = 65535;
inline constexpr std::int64_t kStationTypeMin = 0;
inline constexpr std::int64_t kStationTypeMax = 255;

inline constexpr std::int64_t kSpeedMin = 0;
inline constexpr std::int64_t kSpeedMax = 16383;
inline constexpr std::int64_t kSpeedUnavailable = 16383;
inline constexpr std::int64_t kDriveDirectionMin = 0;
inline constexpr std::int64_t kDriveDirectionMax = 2;
inline constexpr std::int64_t kVehicleLengthMin = 1;
inline constexpr std::int64_t kVehicleLengthMax = 1023;
inline constexpr std::int64_t kVehicleLengthUnavailable = 1023;
inline constexpr std::int64_t kVehicleWidthMin = 1;
inline constexpr std::int64_t kVehicleWidthMax = 62;
inline constexpr std::int64_t kVehicleWidthUnavailable = 62;
inline constexpr std::int64_t kAccelerationMin = -160;
inline constexpr std::int64_t kAccelerationMax = 161;
inline constexpr std::int64_t kAccelerationUnavailable = 161;
inline constexpr std::int64_t kCurvatureMin = -1023;
inline constexpr std::int64_t kCurvatureMax = 1023;
inline constexpr std::int64_t kCurvatureUnavailable = 1023;
inline constexpr std::int64_t kYawRateMin = -32766;
inline constexpr std::int64_t kYawRateMax = 32767;
inline constexpr std::int64_t kYawRateUnavailable = 32767;

inline constexpr std::int64_t kVehicleRoleMin = 0;
inline constexpr std::int64_t kVehicleRoleMax = 15;
inline constexpr std::int64_t kExteriorLightsBits = 8;
inline constexpr std::size_t kPathHistoryMaxPoints = 40;
inline constexpr std::int64_t kPathDeltaMin = -131071;
inline constexpr std::int64_t kPathDeltaMax = 131072;

inline constexpr std::int64_t kSequenceNumberMin = 0;
inline constexpr std::int64_t kSequenceNumberMax = 65535;
inline constexpr std::int64_t kTimestampItsMin = 0;
inline constexpr std::int64_t kTimestampItsMax = 4398046511103;  // 2^42 - 1
inline constexpr std::int64_t kValidityDurationMin = 0;
inline constexpr std::int64_t kValidityDurationMax = 86400;
inline constexpr std::int64_t kInformationQualityMin = 0;
inline constexpr std::int64_t kInformationQualityMax = 7;
inline constexpr std::int64_t kCauseCodeMin = 0;
inline constexpr std::int64_t kCauseCodeMax = 255;

inline constexpr std::size_t kIntersectionsMin = 1;
inline constexpr std::size_t kIntersectionsMax = 32;
inline constexpr std::int64_t kIntersectionIdMin = 0;
inline constexpr std::int64_t kIntersectionIdMax = 65535;
inline constexpr std::int64_t kRevisionMin = 0;
inline constexpr std::int64_t kRevisionMax = 127;
inline constexpr std::size_t kMovementsMin = 1;
inline constexpr std::size_t kMovementsMax = 255;
inline constexpr std::int64_t kSignalGroupMin = 0;
inline constexpr std::int64_t kSignalGroupMax = 255;
inline constexpr std::int64_t kEventStateMin = 0;
inline constexpr std::int64_t kEventStateMax = 9;
inline constexpr std::int64_t kMinEndTimeMin = 0;
inline constexpr std::int64_t kMinEndTimeMax = 36001;

inline constexpr std::size_t kLanesMin = 1;
inline constexpr std::size_t kLanesMax = 255;
inline constexpr std::int64_t kLaneIdMin = 0;
inline constexpr std::int64_t kLaneIdMax = 255;
inline constexpr std::size_t kNodeOffsetsMin = 2;
inline constexpr std::size_t kNodeOffsetsMax = 63;
inline constexpr std::int64_t kNodeOffsetMin = -32768;
inline constexpr std::int64_t kNodeOffsetMax = 32767;
inline constexpr std::size_t kConnectsToMax = 16;

}  // namespace itskit::its::wire
