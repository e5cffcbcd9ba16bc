#pragma once

#define CITESCALE_VERSION "0.1.0"

namespace citescale {

inline constexpr const char* version() { return CITESCALE_VERSION; }

}  // namespace citescale
