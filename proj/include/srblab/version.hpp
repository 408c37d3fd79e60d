#pragma once

namespace srblab {

inline constexpr const char* kToolName = "srblab";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "srblab/1";

}  // namespace srblab
