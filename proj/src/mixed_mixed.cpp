#include "usdkit/mixed_mixed.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "usdkit/coherence.hpp"
#include "usdkit/pure_pure.hpp"
#include "usdkit/tolerances.hpp"

namespace usdkit {

const char* rank_n_regime_name(RankNRegime r) {
  switch (r) {
    case RankNRegime::all_identified: return "AllIdentified";
    case RankNRegime::all_neglected: return "AllNeglected";
    case RankNRegime::mixed_small_s_star: return "MixedSmallSStar";
    case RankNRegime::mixed_large_s_star: return "MixedLargeSStar";
  }
  return "?";
}

namespace {

MixedBranch decompose(const RankNPairInstance& inst) {
  const double p1 = inst.priors.p1;
  const double p2 = inst.priors.p2;
  MixedBranch branch;
  branch.pairs.reserve(inst.alpha.size());
  for (std::size_t i = 0; i < inst.alpha.size(); ++i) {
    const double a = inst.alpha[i];
    const double b = inst.beta[i];
    const double s = inst.diag_overlaps[i];
    PairBranch pair;
    pair.index = static_cast<int>(i);
    if (a == 0.0 && b == 0.0) {
      pair.kind = PairKind::identified;
      pair.contribution = 0.0;
    } else if (p2 * b == 0.0 && p1 * a > 0.0) {
      std::ostringstream msg;
      msg << "component " << i << " has p2 * beta = 0 with p1 * alpha > 0";
      throw ZeroDenominatorError(msg.str());
    } else {
      // threshold = sqrt(p1 a / (p2 b)); a zero numerator with zero
      // denominator was handled above, so the ratio is well defined or +inf.
      double threshold = p2 * b > 0.0
                             ? std::sqrt(p1 * a / (p2 * b))
                             : std::numeric_limits<double>::infinity();
      if (s <= threshold + EPS_TIE) {
        pair.kind = PairKind::identified;
        pair.contribution = 2.0 * std::sqrt(p1 * p2 * a * b) * s;
      } else {
        pair.kind = PairKind::neglected;
        pair.contribution = p1 * a + p2 * b * s * s;
      }
    }
    if (pair.kind == PairKind::identified) ++branch.identified_count;
    branch.pairs.push_back(pair);
  }
  return branch;
}

}  // namespace

DiscriminationResult q_min_mixed_mixed(const RankNPairInstance& inst) {
  DiscriminationResult result;
  MixedBranch branch = decompose(inst);
  double total = 0.0;
  for (const auto& pair : branch.pairs) total += pair.contribution;
  result.q_min = total;
  result.branch = std::move(branch);
  return result;
}

DiscriminationResult q_min_pure_counterpart(const RankNPairInstance& inst) {
  double overlap = fidelity_rank_n_pair(inst);
  if (overlap > 1.0) overlap = 1.0;  // Cauchy-Schwarz bound, roundoff guard
  return q_min_pure_pure(inst.priors, overlap);
}

RankNRegime rank_n_regime(const RankNPairInstance& inst) {
  MixedBranch branch = decompose(inst);
  const auto n = static_cast<int>(branch.pairs.size());
  if (branch.identified_count == n) return RankNRegime::all_identified;
  if (branch.identified_count == 0) return RankNRegime::all_neglected;
  double overlap = fidelity_rank_n_pair(inst);
  double threshold = inst.priors.p2 > 0.0
                         ? std::sqrt(inst.priors.p1 / inst.priors.p2)
                         : std::numeric_limits<double>::infinity();
  return overlap <= threshold + EPS_TIE ? RankNRegime::mixed_small_s_star
                                        : RankNRegime::mixed_large_s_star;
}

double neglected_pair_gap_sum(const RankNPairInstance& inst) {
  MixedBranch branch = decompose(inst);
  const double p1 = inst.priors.p1;
  const double p2 = inst.priors.p2;
  double sum = 0.0;
  for (const auto& pair : branch.pairs) {
    if (pair.kind != PairKind::neglected) continue;
    const auto i = static_cast<std::size_t>(pair.index);
    double term = std::sqrt(p1 * inst.alpha[i]) -
                  std::sqrt(p2 * inst.beta[i]) * inst.diag_overlaps[i];
    sum += term * term;
  }
  return sum;
}

}  // namespace usdkit
