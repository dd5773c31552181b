#pragma once

#include <string_view>

namespace fieldnorm {

inline constexpr std::string_view kToolName = "fieldnorm";
inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace fieldnorm
