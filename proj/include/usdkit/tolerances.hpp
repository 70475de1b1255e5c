#pragma once

namespace usdkit {

// Shared numeric tolerances. Tests and the verification tool pin against
// these; change them only together with the acceptance suite.
inline constexpr double EPS_SUM = 1e-12;    // weight / prior normalization slack
inline constexpr double EPS_MATCH = 1e-9;   // closed form vs oracle agreement
inline constexpr double EPS_TIE = 1e-12;    // branch tie window at case boundaries

// Truncation cap for tail-bounded photon number distributions.
inline constexpr int MAX_TRUNCATION_INDEX = 4096;

}  // namespace usdkit
