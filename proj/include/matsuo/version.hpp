#pragma once

namespace matsuo {

#ifdef MATSUO_VERSION
inline constexpr const char* version = MATSUO_VERSION;
#else
inline constexpr const char* version = "0.1.0";
#endif

}  // namespace matsuo
