#pragma once

#include <string_view>

namespace sae {

// Bump on any change that alters random draw sequences or output formats:
// reproducibility guarantees are scoped to a single version.
inline constexpr std::string_view kArtifactVersion = "0.1.0";

}  // namespace sae
