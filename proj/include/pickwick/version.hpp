#pragma once

namespace pickwick {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pickwick
