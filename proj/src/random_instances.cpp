#include "usdkit/random_instances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace usdkit {

namespace {

double uniform(std::mt19937_64& rng, double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng);
}

int uniform_int(std::mt19937_64& rng, int a, int b) {
  return std::uniform_int_distribution<int>(a, b)(rng);
}

// Symmetric Dirichlet via normalized unit exponentials.
std::vector<double> dirichlet(std::mt19937_64& rng, int n) {
  std::vector<double> w(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (double& x : w) {
    double u = uniform(rng, std::numeric_limits<double>::min(), 1.0);
    x = -std::log(u);
    sum += x;
  }
  for (double& x : w) x /= sum;
  return w;
}

// Overlaps clear of the parallel-norm cap so every draw validates.
std::vector<double> draw_overlaps(std::mt19937_64& rng, int n) {
  std::vector<double> s(static_cast<std::size_t>(n));
  for (double& x : s) x = uniform(rng, 0.0, 0.7);
  double norm_sq = 0.0;
  for (double x : s) norm_sq += x * x;
  while (norm_sq >= 0.995) {
    norm_sq = 0.0;
    for (double& x : s) {
      x *= 0.9;
      norm_sq += x * x;
    }
  }
  return s;
}

}  // namespace

FilteringInstance random_filtering_instance(std::mt19937_64& rng, int max_n) {
  int n = uniform_int(rng, 1, max_n);
  double p1 = uniform(rng, 1e-3, 0.5);
  return FilteringInstance{Priors{p1, 1.0 - p1}, dirichlet(rng, n),
                           draw_overlaps(rng, n)};
}

PurePairInstance random_pure_pair_instance(std::mt19937_64& rng, int max_n) {
  FilteringInstance base = random_filtering_instance(rng, max_n);
  std::vector<double> phases(base.beta.size());
  for (double& t : phases) t = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  return PurePairInstance{base.priors, std::move(base.beta),
                          std::move(base.overlaps), std::move(phases)};
}

RankNPairInstance random_rank_n_pair_instance(std::mt19937_64& rng, int max_n) {
  int n = uniform_int(rng, 1, max_n);
  std::vector<double> alpha = dirichlet(rng, n);
  std::vector<double> beta = dirichlet(rng, n);
  std::vector<double> s(static_cast<std::size_t>(n));
  for (double& x : s) x = uniform(rng, 0.0, 0.999);

  // Dominance needs p1 / p2 <= min beta_i / alpha_i, i.e.
  // p1 <= m / (1 + m) with that minimum m.
  double m = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    if (alpha[static_cast<std::size_t>(i)] > 0.0)
      m = std::min(m, beta[static_cast<std::size_t>(i)] /
                          alpha[static_cast<std::size_t>(i)]);
  double cap = std::min(0.5, 0.999 * m / (1.0 + m));
  double p1 = uniform(rng, 1e-3 * cap, cap);
  return RankNPairInstance{Priors{p1, 1.0 - p1}, std::move(alpha),
                           std::move(beta), std::move(s)};
}

PurePairInstance random_equal_fidelity_instance(std::mt19937_64& rng) {
  if (uniform_int(rng, 0, 1) == 0) {
    // Single overlapped component: every cross term in the residual carries
    // a zero overlap factor.
    int n = uniform_int(rng, 2, 4);
    std::vector<double> beta = dirichlet(rng, n);
    std::vector<double> s(static_cast<std::size_t>(n), 0.0);
    int t = uniform_int(rng, 0, n - 1);
    s[static_cast<std::size_t>(t)] = uniform(rng, 0.0, 0.9);
    std::vector<double> phases(static_cast<std::size_t>(n));
    for (double& ph : phases) ph = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    double p1 = uniform(rng, 1e-3, 0.5);
    return PurePairInstance{Priors{p1, 1.0 - p1}, std::move(beta), std::move(s),
                            std::move(phases)};
  }
  // Two components at quadrature: cos(pi/2) kills the single cross term.
  std::vector<double> beta = dirichlet(rng, 2);
  std::vector<double> s = {uniform(rng, 0.0, 0.65), uniform(rng, 0.0, 0.65)};
  double base = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  std::vector<double> phases = {base, base + std::numbers::pi / 2.0};
  double p1 = uniform(rng, 1e-3, 0.5);
  return PurePairInstance{Priors{p1, 1.0 - p1}, std::move(beta), std::move(s),
                          std::move(phases)};
}

PurePairInstance random_equal_phase_instance(std::mt19937_64& rng, int max_n) {
  PurePairInstance inst = random_pure_pair_instance(rng, max_n);
  std::fill(inst.phases.begin(), inst.phases.end(), 0.0);
  return inst;
}

PurePairInstance random_case_a_uniform_instance(std::mt19937_64& rng,
                                                double& s0_out) {
  int n = uniform_int(rng, 2, 5);
  std::vector<double> beta = dirichlet(rng, n);
  double p1 = uniform(rng, 0.05, 0.5);
  double p2 = 1.0 - p1;

  double root_sum = 0.0;
  for (double b : beta) root_sum += std::sqrt(b);
  // Interior on both sides: n s0^2 <= q1* <= 1 and s0 root_sum <= sqrt(p1/p2).
  double cap = std::min({std::sqrt(p2 / p1) / n, std::sqrt(p1 / p2),
                         std::sqrt(p1 / p2) / root_sum});
  double s0 = uniform(rng, 0.05, 0.95) * cap;
  s0_out = s0;
  return PurePairInstance{Priors{p1, p2}, std::move(beta),
                          std::vector<double>(static_cast<std::size_t>(n), s0),
                          std::vector<double>(static_cast<std::size_t>(n), 0.0)};
}

}  // namespace usdkit
