#pragma once

namespace ffa {

// Participates in cache keys: bump on any change that can alter results.
inline constexpr const char* kCodeVersion = "ffa-1.0.0";

}  // namespace ffa
