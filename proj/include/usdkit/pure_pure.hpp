#pragma once

#include <complex>

#include "usdkit/instances.hpp"
#include "usdkit/results.hpp"

namespace usdkit {

// Overlap of the pure state with the coherent superposition:
// sum_i sqrt(beta_i) s_1i' exp(i phases_i).
std::complex<double> s_star(const PurePairInstance& inst);

// Minimal failure probability for two pure states with overlap modulus
// abs_s_star in [0, 1] (DomainError outside). Tie at the branch boundary
// resolves to case_i_prime.
DiscriminationResult q_min_pure_pure(const Priors& priors, double abs_s_star);

// Joint classification of a mixture-vs-superposition pair, Cartesian product
// of the filtering branch and the pure-pure branch:
//   a = (I, I'), b = (II, I'), c = (I, II'), d = (II, II'), e = (III, II').
// The remaining combination (III, I') is labeled empty; it cannot occur for
// equal phases but is reachable with nontrivial phases.
enum class JointCase { a, b, c, d, e, empty };

const char* joint_case_name(JointCase c);

// Throws MismatchError unless the two instances share priors, weights and
// overlaps exactly.
JointCase classify_joint(const FilteringInstance& filter_inst,
                         const PurePairInstance& pure_inst);

// sum_{i > j} sqrt(beta_i beta_j) s_1i' s_1j' cos(phases_i - phases_j).
// Zero iff the mixture and the superposition have equal fidelity to the
// pure state; equals (F_pp^2 - F_pm^2) / 2.
double equal_fidelity_residual(const PurePairInstance& inst);

// q_mixed - q_pure. Positive values mean the superposition is the easier
// partner to discriminate against.
double delta_q(const DiscriminationResult& filter_result,
               const DiscriminationResult& pure_result);

}  // namespace usdkit
