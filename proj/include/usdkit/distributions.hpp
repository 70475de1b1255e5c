#pragma once

#include <string>
#include <vector>

namespace usdkit {

// Photon number weight vector of a state with amplitude alpha. Weights are
// indexed by basis index i; for squeezed vacuum index i means photon number
// 2i. Truncated kinds renormalize the kept mass to 1 and record the deficit.
struct PhotonDistribution {
  enum class Kind { binomial, poisson, squeezed_vacuum };

  Kind kind = Kind::poisson;
  double alpha = 0.0;
  int binomial_n = 0;  // meaningful for the binomial kind only
  std::vector<double> weights;
  int n_max = 0;          // largest kept index
  double tail_mass = 0.0; // probability mass beyond n_max, before renormalizing
  bool renormalized = false;
};

const char* distribution_kind_name(PhotonDistribution::Kind kind);

// Binomial(n, alpha^2 / n) weights, exact support {0..n}, no truncation.
// Throws RangeError when alpha^2 > n, DomainError for alpha < 0 or n < 1.
PhotonDistribution binomial_weights(int n, double alpha);

// Poisson(alpha^2) weights truncated at the smallest n_max whose cumulative
// mass reaches 1 - tail_bound, then renormalized. Requires
// 0 < tail_bound <= 1e-6 (DomainError). Throws TruncationError when the cap
// MAX_TRUNCATION_INDEX cannot hold the requested mass.
PhotonDistribution poisson_weights(double alpha, double tail_bound = 1e-12);

// Squeezed vacuum with sinh^2(r) = alpha^2, weights over even photon numbers
// 2i, truncated and renormalized like poisson_weights.
PhotonDistribution squeezed_weights(double alpha, double tail_bound = 1e-12);

// Squeeze parameter r = asinh(alpha).
double squeeze_parameter(double alpha);

// sum_i i * w_i. Photon number mean is mean_index for binomial and poisson,
// 2 * mean_index for squeezed vacuum.
double mean_index(const std::vector<double>& weights);

// Signed amplitudes whose squares are the weights: sqrt(w_i) for binomial
// and poisson, (-1)^i sqrt(w_i) for squeezed vacuum (sign of (-tanh r)^i).
std::vector<double> signed_amplitudes(const PhotonDistribution& dist);

// Two-column CSV "index,weight", one row per kept index.
std::string weights_csv(const PhotonDistribution& dist);

// Total variation distance between two weight vectors (shorter one is
// zero-padded).
double total_variation(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace usdkit
