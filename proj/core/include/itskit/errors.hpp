#pragma once

#include <stdexcept>
#include <string>

namespace itskit {

/// Error taxonomy shared across the toolkit. Codec failures are restricted
/// to the five decode codes plus invalid_message on the encode side; the
/// remaining codes belong to the runtime modules.
enum class Errc {
  range_violation,
  truncated,
  unsupported,
  unsupported_extension,
  unknown_message_id,
  padding_non_zero,
  invalid_message,
  non_monotonic_time,
  domain_error,
  schema_violation,
  version_mismatch,
  overlap,
  empty_dataset,
  config_error,
  bind_failure,
  send_failure,
};

constexpr const char* errc_name(Errc code) {
  switch (code) {
    case Errc::range_violation: return "RangeViolation";
    case Errc::truncated: return "Truncated";
    case Errc::unsupported: return "Unsupported";
    case Errc::unsupported_extension: return "UnsupportedExtension";
    case Errc::unknown_message_id: return "UnknownMessageId";
    case Errc::padding_non_zero: return "PaddingNonZero";
    case Errc::invalid_message: return "InvalidMessage";
    case Errc::non_monotonic_time: return "NonMonotonicTime";
    case Errc::domain_error: return "DomainError";
    case Errc::schema_violation: return "SchemaViolation";
    case Errc::version_mismatch: return "VersionMismatch";
    case Errc::overlap: return "OverlapError";
    case Errc::empty_dataset: return "EmptyDataset";
    case Errc::config_error: return "ConfigError";
    case Errc::bind_failure: return "BindFailure";
    case Errc::send_failure: return "SendFailure";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace itskit
