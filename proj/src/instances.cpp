#include "usdkit/instances.hpp"

#include <cmath>
#include <sstream>

#include "usdkit/tolerances.hpp"

namespace usdkit {

const char* violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::weight_sum: return "WeightSumError";
    case ViolationKind::overlap_range: return "OverlapRangeError";
    case ViolationKind::parallel_norm: return "ParallelNormError";
    case ViolationKind::prior_order: return "PriorOrderError";
    case ViolationKind::dominance: return "DominanceError";
    case ViolationKind::mismatch: return "MismatchError";
  }
  return "?";
}

namespace {

std::string join_messages(const std::vector<Violation>& violations) {
  std::ostringstream out;
  out << "instance validation failed:";
  for (const auto& v : violations)
    out << "\n  " << violation_kind_name(v.kind) << ": " << v.message;
  return out.str();
}

void check_weight_vector(const char* name, const std::vector<double>& w,
                         std::vector<Violation>& out) {
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!std::isfinite(w[i]) || w[i] < 0.0) {
      std::ostringstream msg;
      msg << name << "[" << i << "] = " << w[i] << " is not a weight";
      out.push_back({ViolationKind::weight_sum, msg.str()});
      return;
    }
    sum += w[i];
  }
  if (std::abs(sum - 1.0) > EPS_SUM) {
    std::ostringstream msg;
    msg << name << " sums to " << sum << ", expected 1 within " << EPS_SUM;
    out.push_back({ViolationKind::weight_sum, msg.str()});
  }
}

void check_overlaps(const char* name, const std::vector<double>& s,
                    bool cap_parallel_norm, std::vector<Violation>& out) {
  double norm_sq = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isfinite(s[i]) || s[i] < 0.0 || s[i] > 1.0) {
      std::ostringstream msg;
      msg << name << "[" << i << "] = " << s[i] << " outside [0, 1]";
      out.push_back({ViolationKind::overlap_range, msg.str()});
      return;
    }
    norm_sq += s[i] * s[i];
  }
  if (cap_parallel_norm && norm_sq >= 1.0 - EPS_SUM) {
    std::ostringstream msg;
    msg << "sum of squared overlaps = " << norm_sq
        << " leaves no admissible filter strength below 1";
    out.push_back({ViolationKind::parallel_norm, msg.str()});
  }
}

void check_phases(const std::vector<double>& phases, std::size_t n,
                  std::vector<Violation>& out) {
  if (phases.size() != n) {
    std::ostringstream msg;
    msg << "phases has length " << phases.size() << ", overlaps has " << n;
    out.push_back({ViolationKind::mismatch, msg.str()});
    return;
  }
  for (std::size_t i = 0; i < phases.size(); ++i) {
    if (!std::isfinite(phases[i])) {
      std::ostringstream msg;
      msg << "phases[" << i << "] is not finite";
      out.push_back({ViolationKind::overlap_range, msg.str()});
      return;
    }
  }
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(join_messages(violations)),
      violations_(std::move(violations)) {}

std::vector<Violation> check(const Priors& priors) {
  std::vector<Violation> out;
  if (!std::isfinite(priors.p1) || !std::isfinite(priors.p2) || priors.p1 < 0.0 ||
      priors.p2 < 0.0 || std::abs(priors.p1 + priors.p2 - 1.0) > EPS_SUM) {
    std::ostringstream msg;
    msg << "priors (" << priors.p1 << ", " << priors.p2 << ") do not sum to 1";
    out.push_back({ViolationKind::weight_sum, msg.str()});
  }
  if (priors.p1 > priors.p2) {
    std::ostringstream msg;
    msg << "p1 = " << priors.p1 << " exceeds p2 = " << priors.p2;
    out.push_back({ViolationKind::prior_order, msg.str()});
  }
  return out;
}

std::vector<Violation> check(const FilteringInstance& inst) {
  std::vector<Violation> out = check(inst.priors);
  if (inst.beta.size() != inst.overlaps.size()) {
    std::ostringstream msg;
    msg << "beta has length " << inst.beta.size() << ", overlaps has "
        << inst.overlaps.size();
    out.push_back({ViolationKind::mismatch, msg.str()});
    return out;
  }
  check_weight_vector("beta", inst.beta, out);
  check_overlaps("overlaps", inst.overlaps, true, out);
  return out;
}

std::vector<Violation> check(const PurePairInstance& inst) {
  std::vector<Violation> out = check(filtering_view(inst));
  check_phases(inst.phases, inst.overlaps.size(), out);
  return out;
}

std::vector<Violation> check(const RankNPairInstance& inst) {
  std::vector<Violation> out = check(inst.priors);
  if (inst.alpha.size() != inst.beta.size() ||
      inst.beta.size() != inst.diag_overlaps.size()) {
    std::ostringstream msg;
    msg << "alpha/beta/diag_overlaps lengths " << inst.alpha.size() << "/"
        << inst.beta.size() << "/" << inst.diag_overlaps.size() << " disagree";
    out.push_back({ViolationKind::mismatch, msg.str()});
    return out;
  }
  check_weight_vector("alpha", inst.alpha, out);
  check_weight_vector("beta", inst.beta, out);
  check_overlaps("diag_overlaps", inst.diag_overlaps, false, out);
  for (std::size_t i = 0; i < inst.alpha.size(); ++i) {
    if (inst.priors.p1 * inst.alpha[i] > inst.priors.p2 * inst.beta[i]) {
      std::ostringstream msg;
      msg << "p1 * alpha[" << i << "] = " << inst.priors.p1 * inst.alpha[i]
          << " exceeds p2 * beta[" << i << "] = " << inst.priors.p2 * inst.beta[i];
      out.push_back({ViolationKind::dominance, msg.str()});
    }
  }
  return out;
}

namespace {
template <typename T>
const T& validate_impl(const T& inst) {
  auto violations = check(inst);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return inst;
}
}  // namespace

const FilteringInstance& validate(const FilteringInstance& inst) {
  return validate_impl(inst);
}
const PurePairInstance& validate(const PurePairInstance& inst) {
  return validate_impl(inst);
}
const RankNPairInstance& validate(const RankNPairInstance& inst) {
  return validate_impl(inst);
}

bool is_valid(const FilteringInstance& inst) { return check(inst).empty(); }
bool is_valid(const PurePairInstance& inst) { return check(inst).empty(); }
bool is_valid(const RankNPairInstance& inst) { return check(inst).empty(); }

FilteringInstance filtering_view(const PurePairInstance& inst) {
  return FilteringInstance{inst.priors, inst.beta, inst.overlaps};
}

}  // namespace usdkit
