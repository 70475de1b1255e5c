#include "usdkit/distributions.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "usdkit/errors.hpp"
#include "usdkit/tolerances.hpp"

namespace usdkit {

const char* distribution_kind_name(PhotonDistribution::Kind kind) {
  switch (kind) {
    case PhotonDistribution::Kind::binomial: return "binomial";
    case PhotonDistribution::Kind::poisson: return "poisson";
    case PhotonDistribution::Kind::squeezed_vacuum: return "squeezed";
  }
  return "?";
}

double squeeze_parameter(double alpha) { return std::asinh(alpha); }

PhotonDistribution binomial_weights(int n, double alpha) {
  if (n < 1) throw DomainError("binomial needs n >= 1");
  if (!(alpha >= 0.0) || !std::isfinite(alpha))
    throw DomainError("alpha must be finite and nonnegative");
  double p = alpha * alpha / n;
  // alpha = sqrt(n) squares to a hair above n; the boundary itself is legal.
  if (p > 1.0 && p <= 1.0 + 16.0 * std::numeric_limits<double>::epsilon())
    p = 1.0;
  if (p > 1.0) {
    std::ostringstream msg;
    msg << "alpha^2 = " << alpha * alpha << " exceeds n = " << n;
    throw RangeError(msg.str());
  }

  PhotonDistribution dist;
  dist.kind = PhotonDistribution::Kind::binomial;
  dist.alpha = alpha;
  dist.binomial_n = n;
  dist.n_max = n;
  dist.weights.assign(static_cast<std::size_t>(n) + 1, 0.0);

  if (p == 0.0) {
    dist.weights[0] = 1.0;
    return dist;
  }
  if (p == 1.0) {
    dist.weights.back() = 1.0;
    return dist;
  }

  // Ratio recurrence anchored at the mode, scaled by the normalization
  // identity. Starting from either end underflows for large n (the end
  // weight can sit far below DBL_MIN while the bulk is representable), and
  // an lgamma anchor carries the absolute error of O(n log n) magnitude
  // logs into the scale. Relative weights built from the exact one-step
  // ratios avoid both; the anchor value follows from sum = 1.
  int mode = static_cast<int>(std::floor((n + 1.0) * p));
  if (mode > n) mode = n;
  dist.weights[static_cast<std::size_t>(mode)] = 1.0;
  for (int i = mode; i < n; ++i)
    dist.weights[static_cast<std::size_t>(i) + 1] =
        dist.weights[static_cast<std::size_t>(i)] * p * (n - i) /
        ((1.0 - p) * (i + 1.0));
  for (int i = mode; i > 0; --i)
    dist.weights[static_cast<std::size_t>(i) - 1] =
        dist.weights[static_cast<std::size_t>(i)] * (1.0 - p) * i /
        (p * (n - i + 1.0));
  double total = 0.0;
  for (int i = 0; i <= n; ++i) total += dist.weights[static_cast<std::size_t>(i)];
  for (int i = 0; i <= n; ++i) dist.weights[static_cast<std::size_t>(i)] /= total;
  return dist;
}

namespace {

void check_tail_bound(double tail_bound) {
  if (!(tail_bound > 0.0 && tail_bound <= 1e-6))
    throw DomainError("tail_bound must lie in (0, 1e-6]");
}

// Extends a nonnegative weight recurrence until the kept mass reaches
// 1 - tail_bound, then renormalizes.
template <typename Ratio>
void truncate_and_renormalize(PhotonDistribution& dist, double w0,
                              double tail_bound, Ratio ratio) {
  double cum = w0;
  dist.weights.assign(1, w0);
  int i = 0;
  while (cum < 1.0 - tail_bound) {
    if (i >= MAX_TRUNCATION_INDEX) {
      std::ostringstream msg;
      msg << "kept mass " << cum << " below 1 - " << tail_bound << " at index cap "
          << MAX_TRUNCATION_INDEX;
      throw TruncationError(msg.str());
    }
    double w = dist.weights.back() * ratio(i);
    dist.weights.push_back(w);
    cum += w;
    ++i;
  }
  dist.n_max = i;
  dist.tail_mass = cum < 1.0 ? 1.0 - cum : 0.0;
  if (cum != 1.0) {
    for (double& w : dist.weights) w /= cum;
    dist.renormalized = true;
  }
}

}  // namespace

PhotonDistribution poisson_weights(double alpha, double tail_bound) {
  check_tail_bound(tail_bound);
  if (!(alpha >= 0.0) || !std::isfinite(alpha))
    throw DomainError("alpha must be finite and nonnegative");

  PhotonDistribution dist;
  dist.kind = PhotonDistribution::Kind::poisson;
  dist.alpha = alpha;
  const double lambda = alpha * alpha;
  if (lambda == 0.0) {
    dist.weights = {1.0};
    return dist;
  }
  truncate_and_renormalize(dist, std::exp(-lambda), tail_bound,
                           [lambda](int i) { return lambda / (i + 1.0); });
  return dist;
}

PhotonDistribution squeezed_weights(double alpha, double tail_bound) {
  check_tail_bound(tail_bound);
  if (!(alpha >= 0.0) || !std::isfinite(alpha))
    throw DomainError("alpha must be finite and nonnegative");

  PhotonDistribution dist;
  dist.kind = PhotonDistribution::Kind::squeezed_vacuum;
  dist.alpha = alpha;
  if (alpha == 0.0) {
    dist.weights = {1.0};
    return dist;
  }
  const double r = std::asinh(alpha);
  const double t = std::tanh(r) * std::tanh(r);
  // weights over photon number 2i: w_i = (2i choose i) (t/4)^i / cosh r
  truncate_and_renormalize(dist, 1.0 / std::cosh(r), tail_bound,
                           [t](int i) { return t * (2.0 * i + 1.0) / (2.0 * i + 2.0); });
  return dist;
}

double mean_index(const std::vector<double>& weights) {
  double mean = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) mean += i * weights[i];
  return mean;
}

std::vector<double> signed_amplitudes(const PhotonDistribution& dist) {
  std::vector<double> amps(dist.weights.size());
  const bool alternate = dist.kind == PhotonDistribution::Kind::squeezed_vacuum;
  for (std::size_t i = 0; i < dist.weights.size(); ++i) {
    double a = std::sqrt(dist.weights[i]);
    amps[i] = (alternate && (i % 2 == 1)) ? -a : a;
  }
  return amps;
}

std::string weights_csv(const PhotonDistribution& dist) {
  std::ostringstream out;
  out.precision(17);
  out << "index,weight\n";
  for (std::size_t i = 0; i < dist.weights.size(); ++i)
    out << i << "," << dist.weights[i] << "\n";
  return out.str();
}

double total_variation(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n = std::max(a.size(), b.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double ai = i < a.size() ? a[i] : 0.0;
    double bi = i < b.size() ? b[i] : 0.0;
    sum += std::abs(ai - bi);
  }
  return 0.5 * sum;
}

}  // namespace usdkit
