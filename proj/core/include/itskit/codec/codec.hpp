#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "itskit/errors.hpp"
#include "itskit/its/types.hpp"
#include "itskit/its/validate.hpp"

namespace itskit::codec {

/// Raised by encode_message when the message fails validation; carries the
/// individual violations.
class InvalidMessageError : public Error {
 public:
  explicit InvalidMessageError(std::vector<its::Violation> violations)
      : Error(Errc::invalid_message,
              violations.empty() ? "invalid message"
                                 : violations.front().path + ": " + violations.front().reason),
        violations_(std::move(violations)) {}

  const std::vector<its::Violation>& violations() const { return violations_; }

 private:
  std::vector<its::Violation> violations_;
};

/// Unaligned-PER encoding of the message: header fields, then the body in
/// profile field order, final partial octet zero-padded. Deterministic.
std::vector<std::uint8_t> encode_message(const its::ItsMessage& msg);

/// Inverse of encode_message. Dispatches on the header's message id.
/// Errors: UnknownMessageId, Truncated, UnsupportedExtension,
/// RangeViolation, PaddingNonZero.
its::ItsMessage decode_message(std::span<const std::uint8_t> payload);

/// Reads the 6-octet ItsPduHeader without touching the body.
its::ItsPduHeader peek_header(std::span<const std::uint8_t> payload);

}  // namespace itskit::codec
