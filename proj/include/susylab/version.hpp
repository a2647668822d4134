#pragma once

namespace susylab {

inline constexpr const char* kArtifactName = "susy-lab";
inline constexpr const char* kArtifactVersion = "0.1.0";

} // namespace susylab
