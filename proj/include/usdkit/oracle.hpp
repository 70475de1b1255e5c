#pragma once

#include <string>

#include "usdkit/instances.hpp"

namespace usdkit {

// Brute-force minimizers. These share no case analysis with the closed
// forms: a coarse grid scan brackets the minimum, golden-section search
// refines it to interval width 1e-12.

struct MinimizeResult {
  double argmin = 0.0;
  double value = 0.0;
};

// Minimum of p1 q1 + p2 c / q1 over the literal interval
// [parallel_norm_sq, 1]. For an all-zero overlap vector the interval starts
// at 0 and the minimum value 0 sits at the left boundary by convention.
MinimizeResult minimize_filtering(const FilteringInstance& inst);

// Minimum failure probability for two pure states with overlap s and
// weights w1, w2. The weights need not sum to 1, which makes the routine
// reusable per component of a rank-N pair with sub-weights p1 alpha_i,
// p2 beta_i.
MinimizeResult minimize_two_pure(double w1, double w2, double s);

// Closed form vs oracle on one instance.
struct VerifyReport {
  std::string kind;        // "filtering", "pure-pure", "rank-n"
  double closed_form = 0.0;
  double oracle_value = 0.0;
  double gap = 0.0;        // |closed_form - oracle_value|
  bool pass = false;       // gap <= EPS_MATCH
};

VerifyReport verify_instance(const FilteringInstance& inst);
VerifyReport verify_instance(const PurePairInstance& inst);
VerifyReport verify_instance(const RankNPairInstance& inst);

// One JSON object per line, for machine-readable verification logs.
std::string to_json_line(const VerifyReport& report);

}  // namespace usdkit
