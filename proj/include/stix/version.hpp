#pragma once

namespace stix {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace stix
