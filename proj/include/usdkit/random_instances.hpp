#pragma once

#include <cstdint>
#include <random>

#include "usdkit/instances.hpp"

namespace usdkit {

// Seeded generators for randomized suites. All draws go through the passed
// engine, so a fixed seed reproduces the full instance stream.

// Weights from a symmetric Dirichlet (normalized unit exponentials),
// overlaps uniform in [0, 0.7] rescaled below the parallel-norm cap,
// p1 uniform in (0, 0.5].
FilteringInstance random_filtering_instance(std::mt19937_64& rng, int max_n = 6);

// random_filtering_instance plus phases uniform in [0, 2 pi).
PurePairInstance random_pure_pair_instance(std::mt19937_64& rng, int max_n = 6);

// Independent Dirichlet alpha and beta, overlaps as above, p1 capped so the
// dominance constraint p1 alpha_i <= p2 beta_i holds with margin.
RankNPairInstance random_rank_n_pair_instance(std::mt19937_64& rng, int max_n = 8);

// Instances whose mixture and superposition have equal fidelity to the pure
// state: alternates a single-nonzero-overlap family with an n = 2 family at
// quadrature phase difference.
PurePairInstance random_equal_fidelity_instance(std::mt19937_64& rng);

// All phases zero.
PurePairInstance random_equal_phase_instance(std::mt19937_64& rng, int max_n = 6);

// Equal phases and one uniform overlap value s0 chosen so the joint
// classification lands in case (a); s0 is returned through s0_out.
PurePairInstance random_case_a_uniform_instance(std::mt19937_64& rng, double& s0_out);

}  // namespace usdkit
