#pragma once

namespace psidet {

inline constexpr const char* version_string = "psidet 0.1.0";
inline constexpr int json_schema_version = 1;

} // namespace psidet
