#pragma once

#include "usdkit/instances.hpp"
#include "usdkit/results.hpp"

namespace usdkit {

// Per-component identification threshold sqrt(p1 alpha_i / (p2 beta_i)).
// Components with s_ii' <= threshold (ties within EPS_TIE included) are
// identified, the rest neglected. A component with alpha_i = beta_i = 0
// contributes nothing and is labeled identified. Throws ZeroDenominatorError
// when beta_i = 0 with alpha_i > 0 (reachable only for p1 = 0; dominance
// excludes it otherwise).
DiscriminationResult q_min_mixed_mixed(const RankNPairInstance& inst);

// The pair of coherent superpositions built from the same weights and
// overlaps: two pure states with overlap sum_i sqrt(alpha_i beta_i) s_ii'.
DiscriminationResult q_min_pure_counterpart(const RankNPairInstance& inst);

// Regime of the mixed-vs-counterpart comparison.
//   all_identified:     every component identified, the difference is 0
//   all_neglected:      every component neglected
//   mixed_small_s_star: split regime with counterpart overlap <= sqrt(p1/p2)
//   mixed_large_s_star: split regime with counterpart overlap >  sqrt(p1/p2)
enum class RankNRegime {
  all_identified,
  all_neglected,
  mixed_small_s_star,
  mixed_large_s_star,
};

const char* rank_n_regime_name(RankNRegime r);

RankNRegime rank_n_regime(const RankNPairInstance& inst);

// sum over neglected components of (sqrt(p1 alpha_i) - sqrt(p2 beta_i) s_ii')^2.
// Equals q_min_mixed_mixed - q_min_pure_counterpart in the
// mixed_small_s_star regime.
double neglected_pair_gap_sum(const RankNPairInstance& inst);

}  // namespace usdkit
