#include "usdkit/filtering.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "usdkit/tolerances.hpp"

namespace usdkit {

double weighted_overlap_sq(const FilteringInstance& inst) {
  double c = 0.0;
  for (std::size_t i = 0; i < inst.overlaps.size(); ++i)
    c += inst.beta[i] * inst.overlaps[i] * inst.overlaps[i];
  return c;
}

double parallel_norm_sq(const FilteringInstance& inst) {
  double n = 0.0;
  for (double s : inst.overlaps) n += s * s;
  return n;
}

double q1_star(const FilteringInstance& inst) {
  if (inst.priors.p1 == 0.0)
    throw ZeroPriorError("q1_star undefined for p1 = 0");
  return std::sqrt(inst.priors.p2 / inst.priors.p1 * weighted_overlap_sq(inst));
}

double objective(const FilteringInstance& inst, double q1) {
  if (!(q1 > 0.0 && q1 <= 1.0)) {
    std::ostringstream msg;
    msg << "q1 = " << q1 << " outside (0, 1]";
    throw DomainError(msg.str());
  }
  return inst.priors.p1 * q1 + inst.priors.p2 * weighted_overlap_sq(inst) / q1;
}

double fidelity_bound(const FilteringInstance& inst) {
  return 2.0 * std::sqrt(inst.priors.p1 * inst.priors.p2 * weighted_overlap_sq(inst));
}

DiscriminationResult q_min_filtering(const FilteringInstance& inst) {
  const double p1 = inst.priors.p1;
  const double p2 = inst.priors.p2;
  const double c = weighted_overlap_sq(inst);
  const double lo = parallel_norm_sq(inst);

  DiscriminationResult result;
  FilteringBranch branch;
  branch.parallel_norm_sq = lo;

  if (c == 0.0 && lo > 0.0) {
    // No weight sits on the overlapped directions although overlaps are
    // present. The objective degenerates to p1 * q1, whose infimum over
    // physically reachable filter strengths is 0, below the nominal
    // interval end lo.
    branch.label = FilteringCase::case_ii;
    branch.q1_star = p1 > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    result.q_min = 0.0;
    result.branch = branch;
    result.certificate = Certificate{
        0.0, 0.0, 0.0,
        "degenerate: zero weighted overlap, infimum below the nominal interval"};
    return result;
  }

  if (p1 == 0.0) {
    branch.q1_star = std::numeric_limits<double>::infinity();
    if (c == 0.0) {
      branch.label = FilteringCase::case_i;
      result.q_min = 0.0;
      result.branch = branch;
      result.certificate = Certificate{0.0, 0.0, 0.0, "p1 = 0, zero overlap"};
    } else {
      branch.label = FilteringCase::case_iii;
      result.q_min = p2 * c;
      result.branch = branch;
      result.certificate =
          Certificate{1.0, p2 * c, 0.0, "p1 = 0, objective decreasing in q1"};
    }
    return result;
  }

  const double qs = std::sqrt(p2 / p1 * c);
  branch.q1_star = qs;

  double argmin;
  if (qs < lo - EPS_TIE) {
    branch.label = FilteringCase::case_ii;
    result.q_min = p1 * lo + p2 * c / lo;
    argmin = lo;
  } else if (qs > 1.0 + EPS_TIE) {
    branch.label = FilteringCase::case_iii;
    result.q_min = p1 + p2 * c;
    argmin = 1.0;
  } else {
    // Interior stationary point, ties at either end resolve here.
    branch.label = FilteringCase::case_i;
    result.q_min = 2.0 * std::sqrt(p1 * p2 * c);
    argmin = std::min(std::max(qs, lo), 1.0);
  }

  result.branch = branch;
  double value = argmin > 0.0 ? p1 * argmin + p2 * c / argmin : 0.0;
  result.certificate =
      Certificate{argmin, value, std::abs(value - result.q_min), ""};
  return result;
}

}  // namespace usdkit
