#include "usdkit/pure_pure.hpp"

#include <cmath>
#include <sstream>

#include "usdkit/filtering.hpp"
#include "usdkit/tolerances.hpp"

namespace usdkit {

const char* joint_case_name(JointCase c) {
  switch (c) {
    case JointCase::a: return "a";
    case JointCase::b: return "b";
    case JointCase::c: return "c";
    case JointCase::d: return "d";
    case JointCase::e: return "e";
    case JointCase::empty: return "empty";
  }
  return "?";
}

std::complex<double> s_star(const PurePairInstance& inst) {
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < inst.overlaps.size(); ++i)
    sum += std::sqrt(inst.beta[i]) * inst.overlaps[i] *
           std::polar(1.0, inst.phases[i]);
  return sum;
}

DiscriminationResult q_min_pure_pure(const Priors& priors, double abs_s_star) {
  if (!(abs_s_star >= 0.0 && abs_s_star <= 1.0)) {
    std::ostringstream msg;
    msg << "overlap modulus " << abs_s_star << " outside [0, 1]";
    throw DomainError(msg.str());
  }
  const double p1 = priors.p1;
  const double p2 = priors.p2;

  DiscriminationResult result;
  PureBranch branch;
  branch.abs_s_star = abs_s_star;

  // Branch threshold sqrt(p1/p2); p2 = 0 only occurs for invalid priors,
  // treated as an unbounded threshold.
  bool interior = p2 == 0.0 ||
                  abs_s_star <= std::sqrt(p1 / p2) + EPS_TIE;
  if (interior) {
    branch.label = PureCase::case_i_prime;
    result.q_min = 2.0 * std::sqrt(p1 * p2) * abs_s_star;
  } else {
    branch.label = PureCase::case_ii_prime;
    result.q_min = p1 + p2 * abs_s_star * abs_s_star;
  }
  result.branch = branch;
  return result;
}

namespace {
bool same_vector(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}
}  // namespace

JointCase classify_joint(const FilteringInstance& filter_inst,
                         const PurePairInstance& pure_inst) {
  if (filter_inst.priors.p1 != pure_inst.priors.p1 ||
      filter_inst.priors.p2 != pure_inst.priors.p2 ||
      !same_vector(filter_inst.beta, pure_inst.beta) ||
      !same_vector(filter_inst.overlaps, pure_inst.overlaps))
    throw MismatchError("joint classification needs identical priors, weights and overlaps");

  auto filter_result = q_min_filtering(filter_inst);
  auto pure_result =
      q_min_pure_pure(pure_inst.priors, std::abs(s_star(pure_inst)));

  FilteringCase f = std::get<FilteringBranch>(filter_result.branch).label;
  PureCase p = std::get<PureBranch>(pure_result.branch).label;

  if (p == PureCase::case_i_prime) {
    if (f == FilteringCase::case_i) return JointCase::a;
    if (f == FilteringCase::case_ii) return JointCase::b;
    return JointCase::empty;  // (CaseIII, CaseI') needs nontrivial phases
  }
  if (f == FilteringCase::case_i) return JointCase::c;
  if (f == FilteringCase::case_ii) return JointCase::d;
  return JointCase::e;
}

double equal_fidelity_residual(const PurePairInstance& inst) {
  double sum = 0.0;
  for (std::size_t i = 1; i < inst.overlaps.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      sum += std::sqrt(inst.beta[i] * inst.beta[j]) * inst.overlaps[i] *
             inst.overlaps[j] * std::cos(inst.phases[i] - inst.phases[j]);
  return sum;
}

double delta_q(const DiscriminationResult& filter_result,
               const DiscriminationResult& pure_result) {
  return filter_result.q_min - pure_result.q_min;
}

}  // namespace usdkit
