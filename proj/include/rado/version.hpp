#pragma once

namespace rado {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kEngineVersion = "rado-0.1.0";

}  // namespace rado
