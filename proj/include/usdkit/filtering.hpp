#pragma once

#include "usdkit/instances.hpp"
#include "usdkit/results.hpp"

namespace usdkit {

// sum_i beta_i s_1i'^2, the weighted squared overlap driving the objective.
double weighted_overlap_sq(const FilteringInstance& inst);

// sum_i s_1i'^2, the lower end of the admissible q1 interval.
double parallel_norm_sq(const FilteringInstance& inst);

// Unconstrained stationary point sqrt((p2/p1) * weighted_overlap_sq).
// Throws ZeroPriorError when p1 = 0.
double q1_star(const FilteringInstance& inst);

// Failure probability p1 q1 + p2 c / q1 at a fixed filter strength q1.
// Throws DomainError for q1 outside (0, 1]. For c = 0 the q1 = 0 limit is
// admissible and gives 0; callers wanting that limit evaluate it directly.
double objective(const FilteringInstance& inst, double q1);

// Minimal failure probability over q1 in [parallel_norm_sq, 1], with branch
// record and an interior-stationarity certificate. Branch ties within
// EPS_TIE resolve to case_i. p1 = 0 is handled as the q1* -> inf limit.
DiscriminationResult q_min_filtering(const FilteringInstance& inst);

// 2 sqrt(p1 p2) * fidelity, the unconstrained lower bound met exactly in case_i.
double fidelity_bound(const FilteringInstance& inst);

}  // namespace usdkit
