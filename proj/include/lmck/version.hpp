#pragma once

namespace lmck {

inline constexpr const char* kToolName = "lmck";
inline constexpr const char* kToolVersion = "0.1.0";

// Identifier of the counter-based generator; recorded in every manifest.
inline constexpr const char* kRngAlgorithm = "philox4x32-10";

}  // namespace lmck
