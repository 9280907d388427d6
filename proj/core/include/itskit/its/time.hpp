#pragma once

#include <cstdint>

namespace itskit::its {

/// ITS epoch 2004-01-01T00:00:00Z in Unix seconds.
inline constexpr std::int64_t kItsEpochUnixSeconds = 1072915200;

/// CAM timing field: milliseconds since the ITS epoch modulo 65536.
constexpr std::uint16_t generation_delta_time(std::int64_t timestamp_its_ms) {
  return static_cast<std::uint16_t>(timestamp_its_ms % 65536);
}

constexpr std::int64_t its_ms_to_unix_ns(std::int64_t its_ms) {
  return (kItsEpochUnixSeconds * 1000 + its_ms) * 1000000;
}

constexpr std::int64_t unix_ns_to_its_ms(std::int64_t unix_ns) {
  return unix_ns / 1000000 - kItsEpochUnixSeconds * 1000;
}

}  // namespace itskit::its
