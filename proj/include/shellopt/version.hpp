#pragma once

#include <string_view>

namespace shellopt {

// Recorded in stored results and checkpoints; resume refuses a mismatch.
inline constexpr std::string_view kEngineVersion = "1.0.0";

}  // namespace shellopt
