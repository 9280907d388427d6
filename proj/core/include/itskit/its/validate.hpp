#pragma once

#include <string>
#include <vector>

#include "itskit/its/types.hpp"

namespace itskit::its {

struct Violation {
  std::string path;    // e.g. "high_frequency.heading"
  std::string reason;  // the violated rule

  bool operator==(const Violation&) const = default;
};

/// Checks every field range and structural invariant of the profile.
/// Total: never throws; an empty result means the message is valid.
/// Violations are reported in field-declaration order.
std::vector<Violation> validate(const ItsMessage& msg);

}  // namespace itskit::its
