#pragma once

#include <vector>

#include "usdkit/instances.hpp"

namespace usdkit {

// l1 coherence of the pure state with amplitude weights w (sum 1 within
// EPS_SUM, else NormalizationError): (sum_i sqrt(w_i))^2 - 1, evaluated in
// a form stable for tiny weights. Range [0, n-1], maximal for uniform w.
double l1_coherence(const std::vector<double>& weights);

// Relative entropy of coherence in bits: -sum_i w_i log2 w_i with
// 0 log 0 = 0. Range [0, log2 n].
double relative_entropy_coherence(const std::vector<double>& weights);

// Fidelity between the pure state and the mixture: sqrt(sum beta_i s_1i'^2).
double fidelity_pure_mixed(const FilteringInstance& inst);

// Fidelity between the pure state and the superposition: |s_star|.
double fidelity_pure_pure(const PurePairInstance& inst);

// Fidelity between the two rank-N states: sum_i sqrt(alpha_i beta_i) s_ii'.
// Shares the code path of the pure counterpart overlap.
double fidelity_rank_n_pair(const RankNPairInstance& inst);

}  // namespace usdkit
