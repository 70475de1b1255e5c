#include "usdkit/coherence.hpp"

#include <cmath>
#include <sstream>

#include "usdkit/pure_pure.hpp"
#include "usdkit/tolerances.hpp"

namespace usdkit {

namespace {
void require_normalized(const std::vector<double>& w) {
  double sum = 0.0;
  for (double x : w) {
    if (!std::isfinite(x) || x < 0.0) {
      std::ostringstream msg;
      msg << "weight " << x << " is not a probability";
      throw NormalizationError(msg.str());
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > EPS_SUM) {
    std::ostringstream msg;
    msg << "weights sum to " << sum << ", expected 1 within " << EPS_SUM;
    throw NormalizationError(msg.str());
  }
}
}  // namespace

double l1_coherence(const std::vector<double>& weights) {
  require_normalized(weights);
  // (sum sqrt(w))^2 - sum w instead of the pairwise double sum: same value,
  // no quadratic blowup, and exact 0 for a point mass.
  double root_sum = 0.0;
  double sum = 0.0;
  for (double w : weights) {
    root_sum += std::sqrt(w);
    sum += w;
  }
  double value = root_sum * root_sum - sum;
  return value < 0.0 ? 0.0 : value;
}

double relative_entropy_coherence(const std::vector<double>& weights) {
  require_normalized(weights);
  double h = 0.0;
  for (double w : weights)
    if (w > 0.0) h -= w * std::log2(w);
  return h < 0.0 ? 0.0 : h;
}

double fidelity_pure_mixed(const FilteringInstance& inst) {
  double c = 0.0;
  for (std::size_t i = 0; i < inst.overlaps.size(); ++i)
    c += inst.beta[i] * inst.overlaps[i] * inst.overlaps[i];
  return std::sqrt(c);
}

double fidelity_pure_pure(const PurePairInstance& inst) {
  return std::abs(s_star(inst));
}

double fidelity_rank_n_pair(const RankNPairInstance& inst) {
  double sum = 0.0;
  for (std::size_t i = 0; i < inst.diag_overlaps.size(); ++i)
    sum += std::sqrt(inst.alpha[i] * inst.beta[i]) * inst.diag_overlaps[i];
  return sum;
}

}  // namespace usdkit
