#pragma once

#include <vector>

#include "usdkit/errors.hpp"

namespace usdkit {

// Prior probabilities of the two hypotheses. Convention: p1 <= p2.
struct Priors {
  double p1 = 0.0;
  double p2 = 0.0;
};

// Discrimination of a pure state against a rank-N mixture whose components
// each overlap the pure state only through their first basis direction.
// beta[i] are the mixture weights, overlaps[i] = s_1i' in [0, 1).
struct FilteringInstance {
  Priors priors;
  std::vector<double> beta;
  std::vector<double> overlaps;
};

// Same data with the mixture replaced by the coherent superposition carrying
// relative phases[i] (radians).
struct PurePairInstance {
  Priors priors;
  std::vector<double> beta;
  std::vector<double> overlaps;
  std::vector<double> phases;
};

// Two rank-N states diagonal in matched bases: weights alpha (first state)
// and beta (second), per-component overlaps diag_overlaps[i] = s_ii'.
// Validity requires p1 * alpha[i] <= p2 * beta[i] for every i.
struct RankNPairInstance {
  Priors priors;
  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<double> diag_overlaps;
};

// All invariant violations of the given instance; empty when valid.
std::vector<Violation> check(const Priors& priors);
std::vector<Violation> check(const FilteringInstance& inst);
std::vector<Violation> check(const PurePairInstance& inst);
std::vector<Violation> check(const RankNPairInstance& inst);

// Throws ValidationError listing every violation; otherwise returns the
// argument unchanged, so validate(validate(x)) == validate(x).
const FilteringInstance& validate(const FilteringInstance& inst);
const PurePairInstance& validate(const PurePairInstance& inst);
const RankNPairInstance& validate(const RankNPairInstance& inst);

bool is_valid(const FilteringInstance& inst);
bool is_valid(const PurePairInstance& inst);
bool is_valid(const RankNPairInstance& inst);

// The instance with the phases field dropped. classify_joint requires both
// views to share priors, weights and overlaps exactly.
FilteringInstance filtering_view(const PurePairInstance& inst);

}  // namespace usdkit
